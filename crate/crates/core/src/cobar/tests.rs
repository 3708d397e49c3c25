use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::ainf::{exterior_coalgebra, sklyanin3, sklyanin4, yang_mills, AInfCoalgebra};
use crate::tensor::{mul, q, qr};

fn ext(m: usize) -> Cobar {
    Cobar::new(&exterior_coalgebra(m).unwrap())
}

fn examples() -> Vec<Cobar> {
    let cs: Vec<AInfCoalgebra> = alloc::vec![
        exterior_coalgebra(1).unwrap(),
        exterior_coalgebra(2).unwrap(),
        exterior_coalgebra(3).unwrap(),
        sklyanin3(&q(1), &q(2), &q(3)).unwrap(),
        yang_mills(2).unwrap(),
    ];
    cs.iter().map(Cobar::new).collect()
}

fn letter(cb: &Cobar, id: &str) -> usize {
    cb.alphabet.lookup(id).unwrap()
}

fn w(v: &[usize]) -> Word {
    Word(v.to_vec())
}

/// Random element from raw indices; `all` admits the unit letter.
fn sample(cb: &Cobar, raw: &[(i64, Vec<usize>)], all: bool) -> Poly {
    let letters: Vec<usize> = if all { (0..cb.alphabet.len()).collect() } else { cb.reduced_letters() };
    let mut p = Poly::zero();
    for (c, idx) in raw {
        let word: Vec<usize> = idx.iter().map(|i| letters[i % letters.len()]).collect();
        p.add_term(Word(word), q(*c));
    }
    p
}

fn sample_class(cb: &Cobar, raw: &[(i64, Vec<usize>)]) -> OneFormClass {
    let letters = cb.reduced_letters();
    let mut out = OneFormClass::zero();
    for (c, idx) in raw {
        let Some((&v, rest)) = idx.split_last() else {
            continue;
        };
        let word: Vec<usize> = rest.iter().map(|i| letters[i % letters.len()]).collect();
        out.add_term((Word(word), letters[v % letters.len()]), q(*c));
    }
    out
}

fn raw_words(max_len: usize) -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0usize..16, 1..=max_len)), 1..=3)
}

fn homogeneous_parts(cb: &Cobar, p: &Poly) -> Vec<Poly> {
    let mut parts: alloc::collections::BTreeMap<(i64, u32, usize), Poly> = Default::default();
    for (k, c) in p.iter() {
        parts.entry((cb.word_deg(&k.0), cb.word_weight(&k.0), k.len())).or_default().add_term(k.clone(), c.clone());
    }
    parts.into_values().collect()
}

#[test]
fn d_on_exterior_two_top() {
    let cb = ext(2);
    let (m1, m2, m12) = (letter(&cb, "m(v1)"), letter(&cb, "m(v2)"), letter(&cb, "m(v1,v2)"));
    let mut expect = Poly::zero();
    expect.add_term(w(&[m1, m2]), q(-1));
    expect.add_term(w(&[m2, m1]), q(1));
    assert_eq!(cb.d_word(&w(&[m12])), expect);
    assert!(cb.d_word(&w(&[m1])).is_zero());
}

#[test]
fn d_squared_zero_on_all_generators() {
    let mut cs = alloc::vec![
        exterior_coalgebra(4).unwrap(),
        sklyanin3(&q(0), &q(1), &q(1)).unwrap(),
        sklyanin4(&q(2), &q(3), &qr(-5, 7)).unwrap(),
        yang_mills(3).unwrap(),
    ];
    cs.extend(examples().iter().map(|c| (*c.coalgebra).clone()));
    for c in &cs {
        let cb = Cobar::new(c);
        for l in cb.reduced_letters() {
            let dl = cb.d_word(&Word::letter(l));
            assert!(cb.d(&dl).is_zero(), "{} letter {}", c.name, l);
            for (k, _) in dl.iter() {
                assert_eq!(cb.word_deg(&k.0), cb.deg(l) - 1);
                assert_eq!(cb.word_weight(&k.0), cb.word_weight(&[l]));
            }
        }
    }
}

#[test]
fn t_and_n_small_cases() {
    let cb = ext(2);
    let (m1, m12) = (letter(&cb, "m(v1)"), letter(&cb, "m(v1,v2)"));
    let one = Poly::basis(w(&[m12]));
    assert_eq!(t_op(&cb, &one), one);
    let two = Poly::basis(w(&[m12, m12]));
    assert_eq!(t_op(&cb, &two), two.neg());
    assert!(n_op(&cb, &two).is_zero());
    let mixed = Poly::basis(w(&[m1, m12]));
    assert_eq!(n_op(&cb, &mixed), mixed.plus(&t_op(&cb, &mixed)));
}

#[test]
fn map_i_examples() {
    let cb = ext(2);
    let (v1, v2) = (letter(&cb, "m(v1)"), letter(&cb, "m(v2)"));
    let i1 = map_i(&partial(&Poly::basis(w(&[v1]))));
    let expect: DoubleValue =
        [((w(&[v1]), Word::unit()), q(1)), ((Word::unit(), w(&[v1])), q(-1))].into_iter().collect();
    assert_eq!(i1, expect);
    let i2 = map_i(&partial(&Poly::basis(w(&[v1, v2]))));
    let expect: DoubleValue =
        [((w(&[v1, v2]), Word::unit()), q(1)), ((Word::unit(), w(&[v1, v2])), q(-1))].into_iter().collect();
    assert_eq!(i2, expect);
}

#[test]
fn dbar_and_beta_examples() {
    let cb = ext(2);
    let (v1, v2, m12) = (letter(&cb, "m(v1)"), letter(&cb, "m(v2)"), letter(&cb, "m(v1,v2)"));
    assert_eq!(dbar(&cb, &Poly::basis(w(&[v1]))), OneFormClass::basis((Word::unit(), v1)));
    assert!(dbar(&cb, &Poly::basis(Word::unit())).is_zero());
    let got = dbar(&cb, &Poly::basis(w(&[m12, v2])));
    let expect: OneFormClass = [((w(&[v2]), m12), q(1)), ((w(&[m12]), v2), q(1))].into_iter().collect();
    assert_eq!(got, expect);
    let got = dbar(&cb, &Poly::basis(w(&[m12, m12])));
    assert!(got.is_zero());
    assert!(beta(&cb, &OneFormClass::basis((Word::unit(), v1))).is_zero());
    let b = beta(&cb, &OneFormClass::basis((w(&[v1]), v2)));
    let expect: Poly = [(w(&[v1, v2]), q(1)), (w(&[v2, v1]), q(-1))].into_iter().collect();
    assert_eq!(b, expect);
    let b = beta(&cb, &OneFormClass::basis((w(&[m12]), m12)));
    assert_eq!(b, Poly::single(w(&[m12, m12]), q(2)));
}

#[test]
fn connes_b_small_cases() {
    let cb = ext(2);
    let (v1, m12) = (letter(&cb, "m(v1)"), letter(&cb, "m(v1,v2)"));
    assert_eq!(connes_b(&cb, &Poly::basis(w(&[v1]))), Chain::basis(MarkedWord::new(v1, Word::unit())));
    let got = connes_b(&cb, &Poly::basis(w(&[v1, m12])));
    let expect: Chain =
        [(MarkedWord::new(v1, w(&[m12])), q(1)), (MarkedWord::new(m12, w(&[v1])), q(1))].into_iter().collect();
    assert_eq!(got, expect);
    assert!(connes_b(&cb, &Poly::basis(w(&[m12, m12]))).is_zero());
}

#[test]
fn exterior_one_homology() {
    let cb = ext(1);
    let cut = Cutoffs::new(4, 5);
    for wt in 1..=5 {
        assert_eq!(homology_dim(&cb, Complex::Hochschild, 0, wt, cut).unwrap(), 1);
        assert_eq!(homology_dim(&cb, Complex::Hochschild, 1, wt, cut).unwrap(), 1);
        assert_eq!(homology_dim(&cb, Complex::Hochschild, 2, wt, cut).unwrap(), 0);
        for cx in [Complex::Cyclic, Complex::CobarNatural] {
            assert_eq!(homology_dim(&cb, cx, 0, wt, cut).unwrap(), 1);
            assert_eq!(homology_dim(&cb, cx, 1, wt, cut).unwrap(), 0);
            assert_eq!(homology_dim(&cb, cx, 2, wt, cut).unwrap(), 0);
        }
        assert_eq!(natural_quotient_basis(&cb, 0, wt, cut).unwrap().len(), 1);
    }
    for cx in Complex::ALL {
        assert_eq!(homology_dim(&cb, cx, 0, 0, cut).unwrap(), 1);
        assert_eq!(homology_dim(&cb, cx, 1, 0, cut).unwrap(), 0);
    }
}

#[test]
fn necklaces_and_weight_one() {
    let cb = ext(2);
    let cut = Cutoffs::new(4, 4);
    assert_eq!(natural_quotient_basis(&cb, 0, 2, cut).unwrap().len(), 3);
    assert_eq!(natural_quotient_basis(&cb, 0, 1, cut).unwrap().len(), 2);
    assert!(matches!(
        natural_quotient_basis(&cb, 0, 5, cut),
        Err(crate::Error::CutoffExceeded { degree: 0, weight: 5 })
    ));
    assert!(homology_dim(&cb, Complex::Cyclic, 4, 2, cut).is_err());
}

#[test]
fn cyclic_models_agree() {
    for cb in [ext(2), ext(3)] {
        let cut = Cutoffs::new(5, 3);
        for wt in 1..=3 {
            for deg in 0..=3 {
                let a = homology_dim(&cb, Complex::CobarNatural, deg, wt, cut).unwrap();
                let b = homology_dim(&cb, Complex::Cyclic, deg, wt, cut).unwrap();
                assert_eq!(a, b, "degree {deg} weight {wt}");
            }
        }
    }
}

#[test]
fn periodic_sequence_exact() {
    let r1 = check_periodic_exactness(&ext(1), Cutoffs::new(4, 4));
    assert!(r1.passed() && !r1.blocks.is_empty());
    let r2 = check_periodic_exactness(&ext(2), Cutoffs::new(4, 4));
    assert!(r2.passed(), "{:?}", r2.failures);
    let r3 = check_periodic_exactness(&Cobar::new(&yang_mills(2).unwrap()), Cutoffs::new(4, 4));
    assert!(r3.passed(), "{:?}", r3.failures);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squares_to_zero(raw in raw_words(4), ex in 0usize..5) {
        let cb = &examples()[ex];
        let p = sample(cb, &raw, false);
        prop_assert!(cb.d(&cb.d(&p)).is_zero());
    }

    #[test]
    fn bicomplex_identities(raw in raw_words(4), ex in 0usize..5, all in any::<bool>()) {
        let cb = &examples()[ex];
        let p = sample(cb, &raw, all);
        let reduced = !all;
        prop_assert!(b_op(cb, &b_op(cb, &p, reduced), reduced).is_zero());
        prop_assert!(bprime_op(cb, &bprime_op(cb, &p, reduced), reduced).is_zero());
        let one_minus_t = |x: &Poly| x.sub(&t_op(cb, x));
        prop_assert!(n_op(cb, &one_minus_t(&p)).is_zero());
        prop_assert!(one_minus_t(&n_op(cb, &p)).is_zero());
        // (1-T) b = b' (1-T) and b N = N b'
        prop_assert_eq!(one_minus_t(&b_op(cb, &p, reduced)), bprime_op(cb, &one_minus_t(&p), reduced));
        prop_assert_eq!(b_op(cb, &n_op(cb, &p), reduced), n_op(cb, &bprime_op(cb, &p, reduced)));
    }

    #[test]
    fn oneform_identities(raw in raw_words(4), ex in 0usize..5) {
        let cb = &examples()[ex];
        let p = sample(cb, &raw, false);
        let cls = sample_class(cb, &raw);
        prop_assert!(beta(cb, &dbar(cb, &p)).is_zero());
        prop_assert!(dbar(cb, &beta(cb, &cls)).is_zero());
        // β = -(1-T)J and J∂̄ = N
        let j = j_map(cb, &cls);
        prop_assert_eq!(beta(cb, &cls).neg(), j.sub(&t_op(cb, &j)));
        prop_assert_eq!(j_map(cb, &dbar(cb, &p)), n_op(cb, &p));
        prop_assert_eq!(j_inverse(cb, &j), cls.clone());
        // d is compatible with the identifications
        prop_assert_eq!(j_map(cb, &oneform_class_d(cb, &cls)), b_op(cb, &j, true));
        prop_assert_eq!(dbar(cb, &cb.d(&p)), oneform_class_d(cb, &dbar(cb, &p)));
        prop_assert_eq!(beta(cb, &oneform_class_d(cb, &cls)), cb.d(&beta(cb, &cls)));
        prop_assert!(oneform_class_d(cb, &oneform_class_d(cb, &cls)).is_zero());
    }

    #[test]
    fn natural_square_commutes(raw in raw_words(5), ex in 0usize..5) {
        let cb = &examples()[ex];
        let p = sample(cb, &raw, false);
        let mut omega = OneForm::zero();
        for (k, c) in p.iter() {
            let n = k.len();
            omega.add_term((k.slice(0, n / 3), k.0[n / 3], k.slice(n / 3 + 1, n)), c.clone());
        }
        let lhs = beta(cb, &natural(cb, &omega));
        let rhs = map_i(&omega).map_linear(|(a, b)| {
            let s = cb.word_deg(&a.0) * cb.word_deg(&b.0);
            let prod = mul(&Poly::basis(b.clone()), &Poly::basis(a.clone()));
            if crate::tensor::odd(s) { prod.neg() } else { prod }
        });
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(map_i(&i_inverse(&map_i(&omega))), map_i(&omega));
    }

    #[test]
    fn hochschild_differential(raw in raw_words(3), ex in 0usize..5, mark in 0usize..16) {
        let cb = &examples()[ex];
        let p = sample(cb, &raw, false);
        let m = mark % cb.coalgebra.dim();
        let chain: Chain = p.map_keys(|k| Some((MarkedWord::new(m, k.clone()), false)));
        prop_assert!(hochschild_d(cb, &hochschild_d(cb, &chain)).is_zero());
        prop_assert_eq!(hochschild_d(cb, &embed_chain(cb, &p)), embed_chain(cb, &cb.d(&p)));
        for part in homogeneous_parts(cb, &p) {
            let b = connes_b(cb, &part);
            for (k, _) in b.iter() {
                prop_assert_eq!(cb.chain_deg(k), cb.word_deg(&part.keys().next().unwrap().0) + 1);
            }
        }
    }
}

#[test]
fn degree_bookkeeping() {
    let cb = ext(3);
    let p = sample(&cb, &[(1, alloc::vec![0, 3, 5]), (2, alloc::vec![6, 6])], false);
    for part in homogeneous_parts(&cb, &p) {
        let (k, _) = part.iter().next().unwrap();
        let (d0, w0) = (cb.word_deg(&k.0), cb.word_weight(&k.0));
        for (k2, _) in b_op(&cb, &part, true).iter().chain(bprime_op(&cb, &part, true).iter()) {
            assert_eq!((cb.word_deg(&k2.0), cb.word_weight(&k2.0)), (d0 - 1, w0));
        }
        for (k2, _) in t_op(&cb, &part).iter().chain(n_op(&cb, &part).iter()) {
            assert_eq!((cb.word_deg(&k2.0), cb.word_weight(&k2.0)), (d0, w0));
        }
    }
}
