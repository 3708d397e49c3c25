//! Double brackets with values in `R ⊗ R` and in the one-form bimodule.

use super::{multiply, sign, DoublePoisson};
use crate::cobar::{i_inverse, map_i, natural, DoubleValue, OneForm, OneFormClass};
use crate::tensor::{Lin, Poly, Word};

use super::TripleValue;

/// An element of `(R ⊗ M) ⊕ (M ⊗ R)` with the two summands kept apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mixed<M: Ord + Clone> {
    pub left: Lin<(Word, M)>,
    pub right: Lin<(M, Word)>,
}

impl<M: Ord + Clone> Default for Mixed<M> {
    fn default() -> Self {
        Mixed { left: Lin::zero(), right: Lin::zero() }
    }
}

impl<M: Ord + Clone> Mixed<M> {
    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }
}

/// `{{r, p ⊗ q}} = {{r, p}} ⊗ q + (-1)^{|p|(|r|+n)} p ⊗ {{r, q}}`; the first
/// summand is stored in `R ⊗ (R ⊗ R)`, the second in `(R ⊗ R) ⊗ R`.
pub fn double_bracket_tensor(dp: &DoublePoisson, r: &Poly, x: &DoubleValue) -> Mixed<(Word, Word)> {
    let mut out = Mixed::default();
    for (a, ca) in r.iter() {
        let sa = dp.cobar.word_deg(&a.0) + dp.n;
        let pa = Poly::basis(a.clone());
        for ((p, q), c) in x.iter() {
            let c = ca * c;
            for ((u, v), c2) in dp.double_bracket(&pa, &Poly::basis(p.clone())).iter() {
                out.left.add_term((u.clone(), (v.clone(), q.clone())), &c * c2);
            }
            let s = sign(dp.cobar.word_deg(&p.0) * sa);
            for ((u, v), c2) in dp.double_bracket(&pa, &Poly::basis(q.clone())).iter() {
                out.right.add_term(((p.clone(), u.clone()), v.clone()), &c * c2 * &s);
            }
        }
    }
    out
}

/// `{{r, ω}}` for a one-form: the tensor bracket of `I(ω)` regrouped so that
/// each summand lies in `R ⊗ Ω¹_R` or `Ω¹_R ⊗ R`.
pub fn double_bracket_oneform(dp: &DoublePoisson, r: &Poly, omega: &OneForm) -> Mixed<(Word, usize, Word)> {
    let mut out = Mixed::default();
    let cb = &dp.cobar;
    for (a, ca) in r.iter() {
        let sa = cb.word_deg(&a.0) + dp.n;
        let pa = Poly::basis(a.clone());
        for ((b, v, c), co) in omega.iter() {
            let co = ca * co;
            let (db, dv) = (cb.word_deg(&b.0), cb.deg(*v));
            for ((x1, x2), c2) in dp.double_bracket(&pa, &Poly::basis(b.clone())).iter() {
                out.left.add_term((x1.clone(), (x2.clone(), *v, c.clone())), &co * c2);
            }
            let sc = &co * sign((db + dv) * sa);
            for ((y1, y2), c2) in dp.double_bracket(&pa, &Poly::basis(c.clone())).iter() {
                out.right.add_term(((b.clone(), *v, y1.clone()), y2.clone()), &sc * c2);
            }
            let sb = &co * sign(db * sa);
            for ((x1, x2), c2) in dp.double_bracket(&pa, &Poly::basis(Word::letter(*v))).iter() {
                let coef = &sb * c2;
                let x12 = x1.concat(x2);
                let mut lhs = DoubleValue::zero();
                lhs.add_term((b.concat(x1), x2.clone()), crate::q(1));
                lhs.add_term((b.clone(), x12.clone()), crate::q(-1));
                for (f, c3) in i_inverse(&lhs).iter() {
                    out.right.add_term((f.clone(), c.clone()), &coef * c3);
                }
                let mut rhs = DoubleValue::zero();
                rhs.add_term((x12, c.clone()), crate::q(1));
                rhs.add_term((x1.clone(), x2.concat(c)), crate::q(-1));
                for (f, c3) in i_inverse(&rhs).iter() {
                    out.left.add_term((b.clone(), f.clone()), &coef * c3);
                }
            }
        }
    }
    out
}

/// Forget the grouping: one-forms are sent to `R ⊗ R` by `I`.
pub fn flatten_mixed(x: &Mixed<(Word, usize, Word)>) -> TripleValue {
    let mut out = TripleValue::zero();
    for ((l, f), c) in x.left.iter() {
        for ((p, q), c2) in map_i(&OneForm::basis(f.clone())).iter() {
            out.add_term((l.clone(), p.clone(), q.clone()), c * c2);
        }
    }
    for ((f, r), c) in x.right.iter() {
        for ((p, q), c2) in map_i(&OneForm::basis(f.clone())).iter() {
            out.add_term((p.clone(), q.clone(), r.clone()), c * c2);
        }
    }
    out
}

/// Flattening of a tensor-bracket value.
pub fn flatten_tensor(x: &Mixed<(Word, Word)>) -> TripleValue {
    let mut out = TripleValue::zero();
    for ((u, (v, q)), c) in x.left.iter() {
        out.add_term((u.clone(), v.clone(), q.clone()), c.clone());
    }
    for (((p, u), v), c) in x.right.iter() {
        out.add_term((p.clone(), u.clone(), v.clone()), c.clone());
    }
    out
}

/// Bimodule action `(R ⊗ Ω¹) ⊕ (Ω¹ ⊗ R) → Ω¹`.
pub fn mixed_action(x: &Mixed<(Word, usize, Word)>) -> OneForm {
    let mut out = x.left.map_keys(|(l, (p, v, q))| Some(((l.concat(p), *v, q.clone()), false)));
    out.add_assign(&x.right.map_keys(|((p, v, q), r)| Some(((p.clone(), *v, q.concat(r)), false))));
    out
}

/// `{r, ω}_♮ = ♮ μ_M {{r, ω}}` on classes, through the lift `(w) ⊗ v ⊗ 1`.
pub fn oneform_natural_bracket(dp: &DoublePoisson, r: &Poly, cls: &OneFormClass) -> OneFormClass {
    let lift: OneForm = cls.map_keys(|(w, v)| Some(((w.clone(), *v, Word::unit()), false)));
    natural(&dp.cobar, &mixed_action(&double_bracket_oneform(dp, r, &lift)))
}

/// The four-term expression for `{r, q ⊗ s^-1 v}_♮`:
/// `♮[{r,q}v ⊗ 1 - {r,q} ⊗ v + (-1)^{|q|(|r|+n)}(q{r,v} ⊗ 1 - q ⊗ {r,v})]`.
pub fn lastexp_bracket(dp: &DoublePoisson, r: &Poly, cls: &OneFormClass) -> OneFormClass {
    let cb = &dp.cobar;
    let mut total = DoubleValue::zero();
    for (a, ca) in r.iter() {
        let pa = Poly::basis(a.clone());
        let sa = cb.word_deg(&a.0) + dp.n;
        for ((q, v), c) in cls.iter() {
            let c = ca * c;
            let vw = Word::letter(*v);
            let l = dp.loday_bracket(&pa, &Poly::basis(q.clone()));
            for (k, c2) in l.iter() {
                total.add_term((k.concat(&vw), Word::unit()), &c * c2);
                total.add_term((k.clone(), vw.clone()), -(&c * c2));
            }
            let m = multiply(&dp.double_bracket(&pa, &Poly::basis(vw.clone())));
            let s = &c * sign(cb.word_deg(&q.0) * sa);
            for (k, c2) in m.iter() {
                total.add_term((q.concat(k), Word::unit()), &s * c2);
                total.add_term((q.clone(), k.clone()), -(&s * c2));
            }
        }
    }
    natural(cb, &i_inverse(&total))
}
