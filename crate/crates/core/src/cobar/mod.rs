//! The cobar DG algebra, the coalgebra Hochschild/cyclic bicomplex,
//! noncommutative one-forms and bidegree-truncated homology.
//!
//! Sign dictionary. The cobar differential on a letter is
//! `d(s^-1 c) = Σ_n (s^-1)^{⊗n} π^{⊗n} Δ_n(c)` with
//! `(s^-1)^{⊗n}(c_1 ⊗ .. ⊗ c_n) = (-1)^{Σ_i (n-i)|c_i|} s^-1c_1 .. s^-1c_n`,
//! extended by `d(ab) = da·b + (-1)^{|a|} a·db`. Degrees are letter degrees
//! `|c| - 1` throughout.

mod bicomplex;
mod hochschild;
mod homology;
mod oneforms;

pub use bicomplex::{b_op, bprime_op, n_op, t_op, wrap_terms};
pub use hochschild::{connes_b, embed_chain, hochschild_d, Chain, MarkedWord};
pub use homology::{check_periodic_exactness, homology_dim, natural_quotient_basis, Complex, Cutoffs, ExactnessReport};
pub use oneforms::{
    beta, dbar, double_d, i_inverse, j_inverse, j_map, map_i, natural, oneform_class_d, oneform_d, partial,
    DoubleValue, OneForm, OneFormClass,
};

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::One;

use crate::ainf::AInfCoalgebra;
use crate::error::Result;
use crate::tensor::{odd, Alphabet, FreeElement, Poly, Word, Q};

/// The cobar algebra of a coalgebra. Letter `i` is `s^-1 c_i`.
///
/// [`Cobar::new`] builds the normalized cobar algebra on `s^-1 C̄`, which
/// carries the homology computations. [`Cobar::with_counit`] builds the cobar
/// algebra of `k ⊕ C`: every element of `C`, the counit class `e` included,
/// gives a letter, and `d` uses the full coproducts. The double bracket lives
/// on the latter, since `e` pairs with the top class.
#[derive(Clone, Debug)]
pub struct Cobar {
    pub coalgebra: Arc<AInfCoalgebra>,
    pub alphabet: Arc<Alphabet>,
    /// Whether `s^-1 e` is a letter.
    pub with_unit: bool,
    /// `d` on each letter, reduced coproducts only.
    dletter: Vec<Poly>,
    /// Letter expansions with the unreduced coproducts, for bar-type words.
    dletter_full: Vec<Poly>,
    /// Per letter: `(pieces, coefficient with the desuspension sign)` from
    /// the reduced coproducts of arity at least 2.
    pieces_reduced: Vec<Vec<(Vec<usize>, Q)>>,
    pieces_full: Vec<Vec<(Vec<usize>, Q)>>,
}

impl Cobar {
    pub fn new(c: &AInfCoalgebra) -> Self {
        Self::build(c, false)
    }

    pub fn with_counit(c: &AInfCoalgebra) -> Self {
        Self::build(c, true)
    }

    fn build(c: &AInfCoalgebra, with_unit: bool) -> Self {
        let coalgebra = Arc::new(c.clone());
        let alphabet = c.letter_alphabet();
        let e = c.coaugmentation;
        let mut dletter = Vec::new();
        let mut dletter_full = Vec::new();
        let mut pieces_reduced = Vec::new();
        let mut pieces_full = Vec::new();
        for i in 0..c.dim() {
            let mut dr = Poly::zero();
            let mut df = Poly::zero();
            let mut pr = Vec::new();
            let mut pf = Vec::new();
            for (&n, ds) in &c.coproducts {
                for (tup, coef) in ds[i].iter() {
                    let e_sign: i64 = tup.iter().enumerate().map(|(k, &ci)| (n - 1 - k) as i64 * c.deg(ci)).sum();
                    let coef = if odd(e_sign) { -coef.clone() } else { coef.clone() };
                    let w = Word(tup.clone());
                    df.add_term(w.clone(), coef.clone());
                    if n >= 2 {
                        pf.push((tup.clone(), coef.clone()));
                    }
                    if !tup.contains(&e) {
                        dr.add_term(w, coef.clone());
                        if n >= 2 {
                            pr.push((tup.clone(), coef));
                        }
                    }
                }
            }
            dletter.push(dr);
            dletter_full.push(df);
            pieces_reduced.push(pr);
            pieces_full.push(pf);
        }
        Cobar { coalgebra, alphabet, with_unit, dletter, dletter_full, pieces_reduced, pieces_full }
    }

    #[inline]
    pub fn deg(&self, letter: usize) -> i64 {
        self.alphabet.deg(letter)
    }

    pub fn word_deg(&self, w: &[usize]) -> i64 {
        self.alphabet.word_degree(w)
    }

    pub fn word_weight(&self, w: &[usize]) -> u32 {
        self.alphabet.word_weight(w)
    }

    pub fn unit_letter(&self) -> usize {
        self.coalgebra.coaugmentation
    }

    /// Letters of `s^-1 C̄`, in basis order.
    pub fn reduced_letters(&self) -> Vec<usize> {
        (0..self.alphabet.len()).filter(|&i| i != self.unit_letter()).collect()
    }

    /// Letters of this cobar algebra.
    pub fn letters(&self) -> Vec<usize> {
        if self.with_unit {
            (0..self.alphabet.len()).collect()
        } else {
            self.reduced_letters()
        }
    }

    /// `d` of a letter, reduced coproducts.
    pub fn d_letter(&self, i: usize) -> &Poly {
        &self.dletter[i]
    }

    fn derivation(&self, w: &Word, table: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        let mut pre = 0i64;
        for k in 0..w.len() {
            let dl = &table[w.0[k]];
            let neg = odd(pre);
            for (mid, c) in dl.iter() {
                let mut v = w.0[..k].to_vec();
                v.extend_from_slice(&mid.0);
                v.extend_from_slice(&w.0[k + 1..]);
                out.add_signed(Word(v), c, neg);
            }
            pre += self.deg(w.0[k]);
        }
        out
    }

    /// The cobar differential on words.
    pub fn d_word(&self, w: &Word) -> Poly {
        if self.with_unit {
            self.d_full_word(w)
        } else {
            self.d_reduced_word(w)
        }
    }

    pub(crate) fn d_reduced_word(&self, w: &Word) -> Poly {
        self.derivation(w, &self.dletter)
    }

    pub fn d(&self, p: &Poly) -> Poly {
        p.map_linear(|w| self.d_word(w))
    }

    /// Derivation extension of the full letter expansions (`b'`).
    pub(crate) fn d_full_word(&self, w: &Word) -> Poly {
        self.derivation(w, &self.dletter_full)
    }

    pub(crate) fn pieces(&self, letter: usize, reduced: bool) -> &[(Vec<usize>, Q)] {
        if reduced {
            &self.pieces_reduced[letter]
        } else {
            &self.pieces_full[letter]
        }
    }

    /// `cobar_d` on a free element over this cobar algebra's alphabet.
    pub fn cobar_d(&self, r: &FreeElement) -> Result<FreeElement> {
        if !Arc::ptr_eq(&r.alphabet, &self.alphabet) && *r.alphabet != *self.alphabet {
            return Err(crate::Error::GeneratorSetMismatch);
        }
        Ok(FreeElement::new(self.alphabet.clone(), self.d(&r.terms)))
    }

    pub fn element(&self, p: Poly) -> FreeElement {
        FreeElement::new(self.alphabet.clone(), p)
    }

    /// Graded commutator `[a, b] = ab - (-1)^{|a||b|} ba` on words.
    pub fn commutator(&self, a: &Word, b: &Word) -> Poly {
        let mut p = Poly::basis(a.concat(b));
        let neg = odd(self.word_deg(&a.0) * self.word_deg(&b.0));
        p.add_signed(b.concat(a), &Q::one(), !neg);
        p
    }
}

#[cfg(test)]
mod tests;
