//! Normalized Hochschild chains `C ⊗ Ω(C)`: a marked coalgebra element
//! followed by a word over `s^-1 C̄`.

use alloc::vec::Vec;

use super::{n_op, Cobar};
use crate::tensor::{odd, Lin, Poly, Word};

/// `(c_0; w)`. The marked letter is stored by coalgebra index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedWord {
    pub marked: usize,
    pub word: Word,
}

impl MarkedWord {
    pub fn new(marked: usize, word: Word) -> Self {
        MarkedWord { marked, word }
    }

    /// The chain as one word with the marked letter in front.
    pub fn flat(&self) -> Word {
        Word::letter(self.marked).concat(&self.word)
    }
}

pub type Chain = Lin<MarkedWord>;

impl Cobar {
    /// `|c_0| + |w|`, one more than the degree of the flattened word.
    pub fn chain_deg(&self, m: &MarkedWord) -> i64 {
        self.coalgebra.deg(m.marked) + self.word_deg(&m.word.0)
    }

    pub fn chain_weight(&self, m: &MarkedWord) -> u32 {
        self.coalgebra.weight(m.marked) + self.word_weight(&m.word.0)
    }
}

/// `w ↦ (e; w)`.
pub fn embed_chain(cb: &Cobar, p: &Poly) -> Chain {
    let e = cb.unit_letter();
    p.map_keys(|w| Some((MarkedWord::new(e, w.clone()), false)))
}

/// Expansion of the flattened word: cobar `d` on unmarked letters, and the
/// marked letter's coproduct pieces rotated so each piece takes the mark in
/// turn. Terms with `e` unmarked vanish.
fn expand(cb: &Cobar, m: &MarkedWord) -> Chain {
    let e = cb.unit_letter();
    let mut out = Chain::zero();
    let mut pre = cb.deg(m.marked);
    for k in 0..m.word.len() {
        let neg = odd(pre);
        for (mid, c) in cb.d_letter(m.word.0[k]).iter() {
            let mut v = m.word.0[..k].to_vec();
            v.extend_from_slice(&mid.0);
            v.extend_from_slice(&m.word.0[k + 1..]);
            out.add_signed(MarkedWord::new(m.marked, Word(v)), c, neg);
        }
        pre += cb.deg(m.word.0[k]);
    }
    let wdeg = cb.word_deg(&m.word.0);
    for (pieces, c) in cb.d_full_word(&Word::letter(m.marked)).iter() {
        let pieces = &pieces.0;
        for j in 0..pieces.len() {
            let (front, back) = pieces.split_at(j);
            if front.contains(&e) || back[1..].contains(&e) {
                continue;
            }
            let mut v: Vec<usize> = back[1..].to_vec();
            v.extend_from_slice(&m.word.0);
            v.extend_from_slice(front);
            let s = cb.word_deg(front) * (cb.word_deg(back) + wdeg);
            out.add_signed(MarkedWord::new(back[0], Word(v)), c, odd(s));
        }
    }
    out
}

/// The normalized Hochschild differential, normalized so that
/// [`embed_chain`] is a chain map from the cobar algebra.
pub fn hochschild_d(cb: &Cobar, x: &Chain) -> Chain {
    x.map_linear(|m| expand(cb, m)).neg()
}

/// Connes operator on cobar words: the signed cyclic sum `N(u)`, each
/// rotation read as a chain marked at its first letter.
pub fn connes_b(cb: &Cobar, p: &Poly) -> Chain {
    n_op(cb, p).map_keys(|w| {
        let (&first, rest) = w.0.split_first()?;
        Some((MarkedWord::new(first, Word(rest.to_vec())), false))
    })
}
