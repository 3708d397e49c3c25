//! Noncommutative one-forms `Ω¹_R ≅ R ⊗ V ⊗ R` of the cobar algebra and their
//! commutator quotient `Ω¹_{R,♮} ≅ R ⊗ V`.

use super::Cobar;
use crate::tensor::{odd, Lin, Poly, Word};

/// `x ⊗ v ⊗ y`, keyed as `(x, v, y)`.
pub type OneForm = Lin<(Word, usize, Word)>;
/// `(w) ⊗ v`, keyed as `(w, v)`.
pub type OneFormClass = Lin<(Word, usize)>;
/// Elements of `R ⊗ R`.
pub type DoubleValue = Lin<(Word, Word)>;

/// `I(x ⊗ v ⊗ y) = xv ⊗ y - x ⊗ vy`.
pub fn map_i(omega: &OneForm) -> DoubleValue {
    omega.map_linear(|(x, v, y)| {
        let mut out = DoubleValue::zero();
        let mut xv = x.0.clone();
        xv.push(*v);
        let mut vy = alloc::vec![*v];
        vy.extend_from_slice(&y.0);
        out.add_term((Word(xv), y.clone()), crate::q(1));
        out.add_term((x.clone(), Word(vy)), crate::q(-1));
        out
    })
}

/// The universal derivation `∂(v_1 .. v_m) = Σ_i (v_<i) ⊗ v_i ⊗ (v_>i)`.
pub fn partial(p: &Poly) -> OneForm {
    p.map_linear(|w| (0..w.len()).map(|i| ((w.slice(0, i), w.0[i], w.slice(i + 1, w.len())), crate::q(1))).collect())
}

/// `♮(x ⊗ v ⊗ y) = (-1)^{|y|(|x|+|v|)} (yx) ⊗ v`.
pub fn natural(cb: &Cobar, omega: &OneForm) -> OneFormClass {
    omega.map_keys(|(x, v, y)| {
        let s = cb.word_deg(&y.0) * (cb.word_deg(&x.0) + cb.deg(*v));
        Some(((y.concat(x), *v), odd(s)))
    })
}

/// `∂̄ = ♮ ∘ ∂`.
pub fn dbar(cb: &Cobar, p: &Poly) -> OneFormClass {
    natural(cb, &partial(p))
}

/// `β((w) ⊗ v) = wv - (-1)^{|v||w|} vw`.
pub fn beta(cb: &Cobar, cls: &OneFormClass) -> Poly {
    cls.map_linear(|(w, v)| {
        let mut out = Poly::basis(w.concat(&Word::letter(*v)));
        let s = cb.deg(*v) * cb.word_deg(&w.0);
        out.add_signed(Word::letter(*v).concat(w), &crate::q(1), !odd(s));
        out
    })
}

/// Inverse of `I` on the kernel of multiplication: `-Σ a ∂(b)`.
pub fn i_inverse(x: &DoubleValue) -> OneForm {
    x.map_linear(|(a, b)| {
        (0..b.len()).map(|i| ((a.concat(&b.slice(0, i)), b.0[i], b.slice(i + 1, b.len())), crate::q(-1))).collect()
    })
}

/// `d ⊗ 1 + 1 ⊗ d` with the Koszul sign.
pub fn double_d(cb: &Cobar, x: &DoubleValue) -> DoubleValue {
    x.map_linear(|(a, b)| {
        let mut out = DoubleValue::zero();
        for (da, c) in cb.d_word(a).iter() {
            out.add_term((da.clone(), b.clone()), c.clone());
        }
        let neg = odd(cb.word_deg(&a.0));
        for (db, c) in cb.d_word(b).iter() {
            out.add_signed((a.clone(), db.clone()), c, neg);
        }
        out
    })
}

/// The differential of `Ω¹_R` inherited from `R ⊗ R`.
pub fn oneform_d(cb: &Cobar, omega: &OneForm) -> OneForm {
    i_inverse(&double_d(cb, &map_i(omega)))
}

/// The differential on `Ω¹_{R,♮}`, through the lift `(w) ⊗ v ⊗ 1`.
pub fn oneform_class_d(cb: &Cobar, cls: &OneFormClass) -> OneFormClass {
    let lift: OneForm = cls.map_keys(|(w, v)| Some(((w.clone(), *v, Word::unit()), false)));
    natural(cb, &oneform_d(cb, &lift))
}

/// Identification of `Ω¹_{R,♮}` with words of length at least one:
/// `J((w) ⊗ v) = (-1)^{|v||w|} (v w)`.
pub fn j_map(cb: &Cobar, cls: &OneFormClass) -> Poly {
    cls.map_keys(|(w, v)| {
        let s = cb.deg(*v) * cb.word_deg(&w.0);
        Some((Word::letter(*v).concat(w), odd(s)))
    })
}

/// Inverse of [`j_map`] on nonempty words.
pub fn j_inverse(cb: &Cobar, p: &Poly) -> OneFormClass {
    p.map_keys(|w| {
        let (&v, rest) = w.0.split_first()?;
        let rest = Word(rest.to_vec());
        let s = cb.deg(v) * cb.word_deg(&rest.0);
        Some(((rest, v), odd(s)))
    })
}
