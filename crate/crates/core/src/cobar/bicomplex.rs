//! Operators of the unnormalized bicomplex on words `s^-1c_1 .. s^-1c_n`.
//!
//! Letters carry their desuspended degree, so every rotation picks up the
//! Koszul sign of the letters it moves. With `reduced = false` the coproducts
//! keep counit pieces (`s^-1 e` is a letter of degree -1); with
//! `reduced = true` only pieces in `C̄` survive and the operators restrict to
//! words over `s^-1 C̄`.

use alloc::vec::Vec;

use super::Cobar;
use crate::tensor::{odd, Poly, Word};

/// `T(x_1, .., x_n) = (-1)^{|x_1|(|x_2|+..+|x_n|)} (x_2, .., x_n, x_1)`.
pub fn t_op(cb: &Cobar, p: &Poly) -> Poly {
    p.map_keys(|w| {
        if w.is_empty() {
            return Some((w.clone(), false));
        }
        let head = cb.deg(w.0[0]);
        let rest = cb.word_deg(&w.0[1..]);
        let mut v = w.0[1..].to_vec();
        v.push(w.0[0]);
        Some((Word(v), odd(head * rest)))
    })
}

/// `N = Σ_{i<n} T^i`, applied lengthwise.
pub fn n_op(cb: &Cobar, p: &Poly) -> Poly {
    p.map_linear(|w| {
        let mut out = Poly::zero();
        let mut cur = Poly::basis(w.clone());
        for _ in 0..w.len().max(1) {
            out.add_assign(&cur);
            cur = t_op(cb, &cur);
        }
        out
    })
}

/// `b'`: the letterwise derivation by the coproducts.
pub fn bprime_op(cb: &Cobar, p: &Poly, reduced: bool) -> Poly {
    p.map_linear(|w| if reduced { cb.d_reduced_word(w) } else { cb.d_full_word(w) })
}

/// Terms of `b - b'`: the first letter splits into pieces `y^1 .. y^k` and
/// the leading pieces `y^1 .. y^j` (`1 <= j < k`) travel to the end.
pub fn wrap_terms(cb: &Cobar, p: &Poly, reduced: bool) -> Poly {
    p.map_linear(|w| {
        let mut out = Poly::zero();
        let Some(&first) = w.0.first() else {
            return out;
        };
        let tail = &w.0[1..];
        let tail_deg = cb.word_deg(tail);
        for (pieces, c) in cb.pieces(first, reduced) {
            for j in 1..pieces.len() {
                let (front, back) = pieces.split_at(j);
                let mut v: Vec<usize> = back.to_vec();
                v.extend_from_slice(tail);
                v.extend_from_slice(front);
                let s = cb.word_deg(front) * (cb.word_deg(back) + tail_deg);
                out.add_signed(Word(v), c, odd(s));
            }
        }
        out
    })
}

/// `b = b' + wrap`.
pub fn b_op(cb: &Cobar, p: &Poly, reduced: bool) -> Poly {
    bprime_op(cb, p, reduced).plus(&wrap_terms(cb, p, reduced))
}
