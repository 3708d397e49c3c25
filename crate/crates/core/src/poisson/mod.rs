//! The double bracket on the cobar algebra of a cyclic coalgebra, its
//! Leibniz–Loday bracket and the induced brackets on one-forms.
//!
//! On letters `x = s^-1 v`, `y = s^-1 w` the bracket is
//! `{{x, y}} = (-1)^{d|v|} <v, w> 1 ⊗ 1`, a bracket of degree `n = 2 - d`. It is
//! extended to words by the right derivation rule in the second slot and the
//! inner derivation rule in the first, which gives a closed double sum over
//! letter pairs.

mod oneform;

pub use oneform::{
    double_bracket_oneform, double_bracket_tensor, flatten_mixed, flatten_tensor, lastexp_bracket, mixed_action,
    oneform_natural_bracket, Mixed,
};

use alloc::collections::BTreeMap;

use crate::cobar::{Cobar, DoubleValue};
use crate::error::Result;
use crate::tensor::{mul, odd, Lin, Poly, Word, Q};

/// Elements of `R ⊗ R ⊗ R`.
pub type TripleValue = Lin<(Word, Word, Word)>;

/// A cobar algebra with the double bracket induced by the cyclic pairing.
#[derive(Clone, Debug)]
pub struct DoublePoisson {
    pub cobar: Cobar,
    /// `n = 2 - d`.
    pub n: i64,
    lambda: BTreeMap<(usize, usize), Q>,
}

impl DoublePoisson {
    pub fn new(cobar: Cobar) -> Result<Self> {
        let c = cobar.coalgebra.clone();
        let p = c.pairing()?;
        let d = c.cy_dimension()?;
        let n = 2 - d;
        let mut lambda = BTreeMap::new();
        for (&(i, j), v) in &p.entries {
            let val = if odd(d * c.deg(i)) { -v.clone() } else { v.clone() };
            lambda.insert((i, j), val);
        }
        Ok(DoublePoisson { cobar, n, lambda })
    }

    fn deg(&self, w: &[usize]) -> i64 {
        self.cobar.word_deg(w)
    }

    /// `{{x, y}}` on letters, as a scalar multiple of `1 ⊗ 1`.
    pub fn letter_value(&self, x: usize, y: usize) -> Q {
        self.lambda.get(&(x, y)).cloned().unwrap_or_default()
    }

    /// The double bracket of two words, by the closed double sum.
    pub fn bracket_words(&self, r: &Word, q: &Word) -> DoubleValue {
        let n = self.n;
        let mut out = DoubleValue::zero();
        let qd = self.deg(&q.0);
        for i in 0..r.len() {
            let (xl, xi, xr) = (&r.0[..i], r.0[i], &r.0[i + 1..]);
            let (dl, dr) = (self.deg(xl), self.deg(xr));
            let dxi = self.cobar.deg(xi);
            for j in 0..q.len() {
                let lam = self.letter_value(xi, q.0[j]);
                if lam == Q::default() {
                    continue;
                }
                let (yl, yr) = (&q.0[..j], &q.0[j + 1..]);
                let (el, er) = (self.deg(yl), self.deg(yr));
                let s = dr * (qd + n) + el * (dxi + n) + dl * el + (dl + er) * dr;
                let mut left = yl.to_vec();
                left.extend_from_slice(xr);
                let mut right = xl.to_vec();
                right.extend_from_slice(yr);
                out.add_signed((Word(left), Word(right)), &lam, odd(s));
            }
        }
        out
    }

    /// The double sum with the literal sign `(-1)^{|v_i| + ε}`. It agrees with
    /// [`Self::bracket_words`] when `d` is odd.
    pub fn bracket_words_printed(&self, r: &Word, q: &Word) -> DoubleValue {
        let c = &self.cobar.coalgebra;
        let d = c.cy_dimension().unwrap_or(0);
        let mut out = DoubleValue::zero();
        let rd = self.deg(&r.0);
        for i in 0..r.len() {
            let (xl, xi, xr) = (&r.0[..i], r.0[i], &r.0[i + 1..]);
            for j in 0..q.len() {
                let yj = q.0[j];
                let pv = c.pairing().map(|p| p.get(xi, yj)).unwrap_or_default();
                if pv == Q::default() {
                    continue;
                }
                let (yl, yr) = (&q.0[..j], &q.0[j + 1..]);
                let eps = (rd + d) * self.deg(yl) + (self.deg(xl) + self.cobar.deg(yj) + d) * self.deg(xr);
                let mut left = yl.to_vec();
                left.extend_from_slice(xr);
                let mut right = xl.to_vec();
                right.extend_from_slice(yr);
                out.add_signed((Word(left), Word(right)), &pv, odd(c.deg(xi) + eps));
            }
        }
        out
    }

    /// Bilinear double bracket; `{{r, 1}} = {{1, r}} = 0`.
    pub fn double_bracket(&self, r: &Poly, q: &Poly) -> DoubleValue {
        let mut out = DoubleValue::zero();
        for (a, ca) in r.iter() {
            for (b, cb) in q.iter() {
                out.add_scaled(&self.bracket_words(a, b), &(ca * cb));
            }
        }
        out
    }

    /// The same bracket computed from the letter values by the derivation
    /// rules alone.
    pub fn double_bracket_recursive(&self, r: &Poly, q: &Poly) -> DoubleValue {
        let mut out = DoubleValue::zero();
        for (a, ca) in r.iter() {
            for (b, cb) in q.iter() {
                out.add_scaled(&self.recursive_words(a, b), &(ca * cb));
            }
        }
        out
    }

    fn recursive_words(&self, r: &Word, q: &Word) -> DoubleValue {
        let n = self.n;
        if r.is_empty() || q.is_empty() {
            return DoubleValue::zero();
        }
        if q.len() > 1 {
            // {{r, bc}} = {{r, b}} c + (-1)^{|b|(|r|+n)} b {{r, c}}
            let (b, c) = (q.slice(0, 1), q.slice(1, q.len()));
            let mut out = right_act(&self.recursive_words(r, &b), &c);
            let s = self.deg(&b.0) * (self.deg(&r.0) + n);
            out.add_scaled(&left_act(&b, &self.recursive_words(r, &c)), &sign(s));
            return out;
        }
        if r.len() > 1 {
            // {{ab, c}} = a * {{b, c}} + (-1)^{|b|(|c|+n)} {{a, c}} * b
            let (a, b) = (r.slice(0, 1), r.slice(1, r.len()));
            let mut out = self.inner_left(&a, &self.recursive_words(&b, q));
            let s = self.deg(&b.0) * (self.deg(&q.0) + n);
            out.add_scaled(&self.inner_right(&self.recursive_words(&a, q), &b), &sign(s));
            return out;
        }
        let lam = self.letter_value(r.0[0], q.0[0]);
        DoubleValue::single((Word::unit(), Word::unit()), lam)
    }

    /// `a * (v ⊗ u) = (-1)^{|a||v|} v ⊗ au`.
    pub fn inner_left(&self, a: &Word, x: &DoubleValue) -> DoubleValue {
        x.map_keys(|(v, u)| Some(((v.clone(), a.concat(u)), odd(self.deg(&a.0) * self.deg(&v.0)))))
    }

    /// `(v ⊗ u) * b = (-1)^{|u||b|} vb ⊗ u`.
    pub fn inner_right(&self, x: &DoubleValue, b: &Word) -> DoubleValue {
        x.map_keys(|(v, u)| Some(((v.concat(b), u.clone()), odd(self.deg(&u.0) * self.deg(&b.0)))))
    }

    /// `(u ⊗ v)° = (-1)^{|u||v|} v ⊗ u`.
    pub fn flip(&self, x: &DoubleValue) -> DoubleValue {
        x.map_keys(|(u, v)| Some(((v.clone(), u.clone()), odd(self.deg(&u.0) * self.deg(&v.0)))))
    }

    /// `{a, b} = μ {{a, b}}`.
    pub fn loday_bracket(&self, r: &Poly, q: &Poly) -> Poly {
        multiply(&self.double_bracket(r, q))
    }

    /// `{{a, b_1 ⊗ b_2}}_L = {{a, b_1}} ⊗ b_2`.
    pub fn bracket_l(&self, a: &Poly, x: &DoubleValue) -> TripleValue {
        let mut out = TripleValue::zero();
        for ((b1, b2), c) in x.iter() {
            for ((u, v), c2) in self.double_bracket(a, &Poly::basis(b1.clone())).iter() {
                out.add_term((u.clone(), v.clone(), b2.clone()), c * c2);
            }
        }
        out
    }

    /// `σ_(123)(b1 ⊗ b2 ⊗ b3) = b3 ⊗ b1 ⊗ b2`, with the Koszul sign.
    pub fn sigma_123(&self, x: &TripleValue) -> TripleValue {
        x.map_keys(|(b1, b2, b3)| {
            let s = self.deg(&b3.0) * (self.deg(&b1.0) + self.deg(&b2.0));
            Some(((b3.clone(), b1.clone(), b2.clone()), odd(s)))
        })
    }

    /// `σ_(132)(b1 ⊗ b2 ⊗ b3) = b2 ⊗ b3 ⊗ b1`, with the Koszul sign.
    pub fn sigma_132(&self, x: &TripleValue) -> TripleValue {
        x.map_keys(|(b1, b2, b3)| {
            let s = self.deg(&b1.0) * (self.deg(&b2.0) + self.deg(&b3.0));
            Some(((b2.clone(), b3.clone(), b1.clone()), odd(s)))
        })
    }

    /// Left side of the graded double Jacobi identity on three words.
    pub fn double_jacobiator(&self, a: &Word, b: &Word, c: &Word) -> TripleValue {
        let n = self.n;
        let (da, db, dc) = (self.deg(&a.0), self.deg(&b.0), self.deg(&c.0));
        let (pa, pb, pc) = (Poly::basis(a.clone()), Poly::basis(b.clone()), Poly::basis(c.clone()));
        let mut out = self.bracket_l(&pa, &self.double_bracket(&pb, &pc));
        let t2 = self.sigma_123(&self.bracket_l(&pb, &self.double_bracket(&pc, &pa)));
        out.add_scaled(&t2, &sign((da + n) * (db + dc)));
        let t3 = self.sigma_132(&self.bracket_l(&pc, &self.double_bracket(&pa, &pb)));
        out.add_scaled(&t3, &sign((dc + n) * (da + db)));
        out
    }
}

pub(crate) fn sign(e: i64) -> Q {
    if odd(e) {
        -crate::q(1)
    } else {
        crate::q(1)
    }
}

/// `μ : R ⊗ R → R`.
pub fn multiply(x: &DoubleValue) -> Poly {
    x.map_keys(|(a, b)| Some((a.concat(b), false)))
}

/// Outer actions `b (u ⊗ v) = bu ⊗ v` and `(u ⊗ v) c = u ⊗ vc`.
pub fn left_act(b: &Word, x: &DoubleValue) -> DoubleValue {
    x.map_keys(|(u, v)| Some(((b.concat(u), v.clone()), false)))
}

pub fn right_act(x: &DoubleValue, c: &Word) -> DoubleValue {
    x.map_keys(|(u, v)| Some(((u.clone(), v.concat(c)), false)))
}

/// Product of two elements, exposed for callers composing brackets.
pub fn product(a: &Poly, b: &Poly) -> Poly {
    mul(a, b)
}
