use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::tensor::q;

fn f3(c: i64, e: [u32; 3], idx: &[usize]) -> PolyForm {
    PolyForm::term(3, q(c), &e, idx)
}

fn v3(c: i64, e: [u32; 3], idx: &[usize]) -> PolyVector {
    PolyVector::term(3, q(c), &e, idx)
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

fn alpha() -> PolyForm {
    f3(1, [2, 1, 1], &[X])
}

fn beta() -> PolyForm {
    f3(1, [1, 1, 1], &[Y])
}

fn gamma() -> PolyForm {
    f3(1, [1, 0, 1], &[Z])
}

#[test]
fn de_rham_examples() {
    let f = f3(1, [3, 1, 2], &[]);
    let expect = f3(3, [2, 1, 2], &[X]).plus(&f3(1, [3, 0, 2], &[Y])).plus(&f3(2, [3, 1, 1], &[Z]));
    assert_eq!(de_rham_d(&f), expect);
    assert!(de_rham_d(&f3(5, [0, 0, 0], &[])).is_zero());
    assert_eq!(de_rham_d(&f3(1, [1, 0, 0], &[Y])), f3(1, [0, 0, 0], &[X, Y]));
}

#[test]
fn contraction_examples() {
    let dxdy = f3(1, [0, 0, 0], &[X, Y]);
    assert_eq!(contract(&v3(1, [0, 0, 0], &[X]), &dxdy).unwrap(), f3(1, [0, 0, 0], &[Y]));
    let vol = volume_form(3);
    assert_eq!(contract(&v3(1, [0, 0, 0], &[X, Y]), &vol).unwrap(), f3(-1, [0, 0, 0], &[Z]));
    // the composition law on this instance
    let inner = contract(&v3(1, [0, 0, 0], &[Y]), &vol).unwrap();
    assert_eq!(contract(&v3(1, [0, 0, 0], &[X]), &inner).unwrap(), f3(-1, [0, 0, 0], &[Z]));
    assert!(contract(&v3(1, [0, 0, 0], &[X, Y]), &f3(1, [0, 0, 0], &[X])).unwrap().is_zero());
    let two = PolyForm::zero(2);
    assert_eq!(contract(&v3(1, [0, 0, 0], &[X]), &two), Err(Error::DimensionMismatch { left: 3, right: 2 }));
}

#[test]
fn psi_examples() {
    let expect = v3(-1, [2, 0, 1], &[Z]).plus(&v3(1, [2, 1, 0], &[Y]));
    assert_eq!(psi_inverse(&de_rham_d(&alpha())), expect);
    let eta = v3(1, [0, 1, 1], &[Z]).plus(&v3(-1, [1, 1, 0], &[X]));
    assert_eq!(psi_inverse(&de_rham_d(&beta())), eta);
    assert_eq!(psi_inverse(&de_rham_d(&gamma())), v3(-1, [0, 0, 1], &[Y]));
    assert_eq!(psi(&PolyVector::function(3, q(1), &[])), volume_form(3));
}

#[test]
fn bv_examples() {
    assert!(bv_delta(&v3(1, [0, 0, 0], &[X])).is_zero());
    assert_eq!(bv_delta(&v3(1, [1, 0, 0], &[X])), PolyVector::function(3, q(1), &[]));
}

#[test]
fn schouten_examples() {
    assert!(schouten_bracket(&v3(1, [0, 0, 0], &[X]), &v3(1, [0, 0, 0], &[Y])).unwrap().is_zero());
    let a = v3(1, [1, 0, 0], &[Y]);
    let b = v3(1, [0, 1, 0], &[X]);
    // the classical Lie bracket is x∂x - y∂y; the Δ-deviation bracket with
    // this contraction law is its negative
    let lie = v3(1, [1, 0, 0], &[X]).plus(&v3(-1, [0, 1, 0], &[Y]));
    assert_eq!(schouten_bracket(&a, &b).unwrap(), lie.neg());
}

#[test]
fn bracket_golden_values() {
    let (a, b, c) = (alpha(), beta(), gamma());
    let ab_c = hkr_bracket(&hkr_bracket(&a, &b).unwrap(), &c).unwrap();
    assert_eq!(ab_c, f3(1, [2, 1, 2], &[X]).plus(&f3(-1, [3, 1, 1], &[Z])));
    let a_bc = hkr_bracket(&a, &hkr_bracket(&b, &c).unwrap()).unwrap();
    assert_eq!(a_bc, f3(-1, [3, 0, 2], &[Y]).plus(&f3(-1, [3, 1, 1], &[Z])));
    let b_ac = hkr_bracket(&b, &hkr_bracket(&a, &c).unwrap()).unwrap();
    assert_eq!(b_ac, f3(2, [2, 1, 2], &[X]).plus(&f3(2, [3, 1, 1], &[Z])));
    let j = jacobiator(&a, &b, &c).unwrap();
    let expect = f3(3, [2, 1, 2], &[X]).plus(&f3(1, [3, 0, 2], &[Y])).plus(&f3(2, [3, 1, 1], &[Z]));
    assert_eq!(j, expect);
    assert_eq!(j, de_rham_d(&f3(1, [3, 1, 2], &[])));
    assert!(exact_primitive(&j).is_some());
    // a closed second argument has η = 0
    let closed = de_rham_d(&f3(1, [1, 2, 0], &[Z]));
    assert!(hkr_bracket(&a, &closed).unwrap().is_zero());
    let k = f3(7, [0, 0, 0], &[]);
    assert!(jacobiator(&k, &b, &c).unwrap().is_zero());
    assert!(jacobiator(&a, &k, &c).unwrap().is_zero());
    assert!(jacobiator(&a, &b, &k).unwrap().is_zero());
}

#[test]
fn jacobiator_uses_shifted_degrees() {
    // a function and a 2-form both have odd shifted degree for m = 3
    let a = f3(-1, [1, 1, 1], &[]).plus(&f3(3, [2, 2, 0], &[X, Z]));
    let b = f3(3, [1, 2, 1], &[X, Z]).plus(&f3(3, [2, 1, 0], &[X, Y, Z]));
    let c = f3(-2, [1, 1, 1], &[X]).plus(&f3(1, [1, 2, 2], &[Y]));
    let j = jacobiator(&a, &b, &c).unwrap();
    assert!(exact_primitive(&j).is_some());
    let t1 = hkr_bracket(&hkr_bracket(&a, &b).unwrap(), &c).unwrap();
    let t2 = hkr_bracket(&a, &hkr_bracket(&b, &c).unwrap()).unwrap();
    let t3 = hkr_bracket(&b, &hkr_bracket(&a, &c).unwrap()).unwrap();
    assert!(exact_primitive(&t1.sub(&t2).plus(&t3)).is_none());
}

#[test]
fn contraction_bracket_examples() {
    let vol = volume_form(3);
    assert_eq!(contraction_bracket(&alpha(), &beta(), None), Err(Error::FundamentalClassMissing));
    let lhs = contraction_bracket(&alpha(), &beta(), Some(&vol)).unwrap();
    let rhs = hkr_bracket(&alpha(), &beta()).unwrap();
    assert!(same_class(&lhs, &rhs));
    // B(β) = dβ = 0 gives zero
    let closed = de_rham_d(&f3(1, [0, 2, 1], &[]));
    assert!(contraction_bracket(&alpha(), &closed, Some(&vol)).unwrap().is_zero());
    // one variable: every bracket is a 1-form, hence exact
    let f = PolyForm::function(1, q(1), &[3]);
    let g = PolyForm::function(1, q(2), &[2]);
    let v1 = volume_form(1);
    let br = contraction_bracket(&f, &g, Some(&v1)).unwrap();
    assert!(!br.is_zero());
    assert!(exact_primitive(&br).is_some());
    assert!(same_class(&hkr_bracket(&f, &g).unwrap(), &PolyForm::zero(1)));
}

#[test]
fn render_examples() {
    assert_eq!(alpha().render(), "x^2*y*z dx");
    assert_eq!(f3(-1, [1, 1, 0], &[Z, X]).render(), "x*y dx^dz");
    assert_eq!(v3(1, [1, 0, 0], &[X, Y]).render(), "x d/dx ^ d/dy");
    assert_eq!(PolyForm::zero(2).render(), "0");
    assert_eq!(f3(1, [0, 0, 0], &[]).render(), "1");
}

fn arb_form(m: usize, max_terms: usize) -> impl Strategy<Value = PolyForm> {
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec(0u32..3, m), prop::collection::vec(0usize..m, 0..=m)),
        0..=max_terms,
    )
    .prop_map(move |ts| {
        let mut out = PolyForm::zero(m);
        for (c, e, idx) in ts {
            out = out.plus(&PolyForm::term(m, q(c), &e, &idx));
        }
        out
    })
}

fn arb_vector(m: usize) -> impl Strategy<Value = PolyVector> {
    arb_form(m, 3).prop_map(|f| PolyVector { var_count: f.var_count, terms: f.terms })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_and_delta_square_to_zero(a in arb_form(3, 4), xi in arb_vector(3)) {
        prop_assert!(de_rham_d(&de_rham_d(&a)).is_zero());
        prop_assert!(bv_delta(&bv_delta(&xi)).is_zero());
        prop_assert_eq!(psi_inverse(&psi(&xi)), xi.clone());
        prop_assert_eq!(psi(&psi_inverse(&a)), a);
    }

    #[test]
    fn contraction_composes(xi in arb_vector(3), eta in arb_vector(3), a in arb_form(3, 3)) {
        let lhs = contract(&xi.wedge(&eta).unwrap(), &a).unwrap();
        let rhs = contract(&xi, &contract(&eta, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schouten_on_vector_fields_is_minus_lie_bracket(
        a in prop::collection::vec((-2i64..=2, prop::collection::vec(0u32..3, 3)), 3),
        b in prop::collection::vec((-2i64..=2, prop::collection::vec(0u32..3, 3)), 3),
    ) {
        // X = Σ f_i ∂_i, Y = Σ g_i ∂_i; [X, Y] = Σ (X(g_j) - Y(f_j)) ∂_j
        let fx: Vec<PolyForm> = a.iter().map(|(c, e)| PolyForm::function(3, q(*c), e)).collect();
        let gy: Vec<PolyForm> = b.iter().map(|(c, e)| PolyForm::function(3, q(*c), e)).collect();
        let field = |fs: &[PolyForm]| {
            let mut v = PolyVector::zero(3);
            for (i, f) in fs.iter().enumerate() {
                for ((mo, _), c) in f.terms.iter() {
                    v = v.plus(&PolyVector::term(3, c.clone(), mo, &[i]));
                }
            }
            v
        };
        let apply = |fs: &[PolyForm], g: &PolyForm| {
            let dg = de_rham_d(g);
            let mut out = PolyForm::zero(3);
            for (i, f) in fs.iter().enumerate() {
                let part = contract(&PolyVector::term(3, q(1), &[], &[i]), &dg).unwrap();
                out = out.plus(&f.wedge(&part).unwrap());
            }
            out
        };
        let mut lie = Vec::new();
        for j in 0..3 {
            lie.push(apply(&fx, &gy[j]).sub(&apply(&gy, &fx[j])));
        }
        prop_assert_eq!(schouten_bracket(&field(&fx), &field(&gy)).unwrap(), field(&lie).neg());
    }

    #[test]
    fn schouten_is_a_graded_derivation(a in arb_vector(3), b in arb_vector(3), c in arb_vector(3), ka in 0usize..3, kb in 0usize..3) {
        // {a, b∧c} = {a, b}∧c + (-1)^{(|a|-1)|b|} b∧{a, c}
        let (a, b) = (a.part(ka), b.part(kb));
        let lhs = schouten_bracket(&a, &b.wedge(&c).unwrap()).unwrap();
        let t1 = schouten_bracket(&a, &b).unwrap().wedge(&c).unwrap();
        let t2 = b.wedge(&schouten_bracket(&a, &c).unwrap()).unwrap();
        let s = (ka as i64 - 1) * kb as i64;
        let rhs = if odd(s) { t1.sub(&t2) } else { t1.plus(&t2) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_formula_consistency(a in arb_form(3, 3), b in arb_form(3, 3)) {
        // d{α, β} = (-1)^{m-|α|-1} d ι_ξ dβ with ξ = Ψ^{-1}(dα)
        for k1 in a.degrees() {
            for k2 in b.degrees() {
                let (x, y) = (a.part(k1), b.part(k2));
                let xi = psi_inverse(&de_rham_d(&x));
                let via_xi = de_rham_d(&contract(&xi, &de_rham_d(&y)).unwrap());
                let via_xi = if odd(3 - k1 as i64 - 1) { via_xi.neg() } else { via_xi };
                prop_assert_eq!(de_rham_d(&hkr_bracket(&x, &y).unwrap()), via_xi);
            }
        }
        let vol = volume_form(3);
        prop_assert!(same_class(&contraction_bracket(&a, &b, Some(&vol)).unwrap(), &hkr_bracket(&a, &b).unwrap()));
    }

    #[test]
    fn jacobiator_is_exact(a in arb_form(3, 2), b in arb_form(3, 2), c in arb_form(3, 2)) {
        let j = jacobiator(&a, &b, &c).unwrap();
        let x = exact_primitive(&j);
        prop_assert!(x.is_some());
        prop_assert_eq!(de_rham_d(&x.unwrap()), j);
    }
}
