use std::sync::Arc;

use ncpoisson::ainf::{exterior_coalgebra, yang_mills};
use ncpoisson::cobar::Cobar;
use ncpoisson::gerstenhaber::Cochain;
use ncpoisson::hkr::{PolyForm, PolyVector};
use ncpoisson::tensor::{render_poly, Alphabet, Poly, Word};
use ncpoisson::{q, qr, Q};
use ncpoisson_cli::parse::{
    parse_cochain, parse_expression, parse_form, parse_vector, parse_words, render_cochain, Ast, Kind, Scope,
};
use ncpoisson_cli::CliError;
use proptest::prelude::*;

fn ext_alphabet(m: usize) -> Arc<Alphabet> {
    Cobar::with_counit(&exterior_coalgebra(m).unwrap()).alphabet.clone()
}

#[test]
fn cobar_word_with_desuspensions() {
    let a = ext_alphabet(3);
    let p = parse_words("[s^-1 m(v1,v2) | s^-1 m(v3)]", &a).unwrap();
    let w = Word(vec![a.lookup("m(v1,v2)").unwrap(), a.lookup("m(v3)").unwrap()]);
    assert_eq!(p, Poly::basis(w.clone()));
    assert_eq!(render_poly(&a, &p), "[m(v1,v2)|m(v3)]");
    // spaces inside an id and a missing prefix are both accepted
    assert_eq!(parse_words("[m(v1, v2)|m(v3)]", &a).unwrap(), p);
}

#[test]
fn unit_and_coefficients() {
    let a = ext_alphabet(2);
    let m1 = a.lookup("m(v1)").unwrap();
    assert_eq!(parse_words("1", &a).unwrap(), Poly::basis(Word::unit()));
    assert_eq!(parse_words("-3/4", &a).unwrap(), Poly::single(Word::unit(), qr(-3, 4)));
    let p = parse_words("2*[m(v1)] - 1/2*[m(v1)|m(v1)] + 3*1", &a).unwrap();
    let mut want = Poly::single(Word::letter(m1), q(2));
    want.add_term(Word(vec![m1, m1]), qr(-1, 2));
    want.add_term(Word::unit(), q(3));
    assert_eq!(p, want);
    assert!(parse_words("[m(v1)] - [m(v1)]", &a).unwrap().is_zero());
}

#[test]
fn malformed_words_report_positions() {
    let a = ext_alphabet(2);
    assert!(matches!(parse_words("[v1 | ]", &a), Err(CliError::Parse { pos: 6, .. })));
    assert!(matches!(parse_words("[m(v1)", &a), Err(CliError::Parse { pos: 6, .. })));
    assert!(matches!(parse_words("", &a), Err(CliError::Parse { pos: 0, .. })));
    assert!(matches!(parse_words("[m(v1)] [m(v2)]", &a), Err(CliError::Parse { pos: 8, .. })));
    assert!(matches!(parse_words("1/0", &a), Err(CliError::Parse { pos: 0, .. })));
    assert!(matches!(parse_words("2*", &a), Err(CliError::Parse { pos: 2, .. })));
    assert!(matches!(parse_words("[m(v1]", &a), Err(CliError::Parse { pos: 2, .. })));
    // syntax errors win over unknown names
    assert!(matches!(parse_words("[v9 | ]", &a), Err(CliError::Parse { .. })));
    assert_eq!(parse_words("[v1]", &a), Err(CliError::UnknownGenerator(String::from("v1"))));
}

#[test]
fn forms_and_vectors() {
    let f = parse_form("x^2*y*z dx", 3).unwrap();
    assert_eq!(f, PolyForm::term(3, q(1), &[2, 1, 1], &[0]));
    assert_eq!(f.terms.len(), 1);
    // wedge order is normalized with its sign
    assert_eq!(parse_form("x*y dz^dx", 3).unwrap(), PolyForm::term(3, q(-1), &[1, 1, 0], &[0, 2]));
    assert_eq!(parse_form("dx^dx", 3).unwrap(), PolyForm::zero(3));
    assert_eq!(parse_form("1", 2).unwrap(), PolyForm::function(2, q(1), &[0, 0]));
    assert_eq!(parse_form("x1*x4^3 dx2^dx3", 4).unwrap(), PolyForm::term(4, q(1), &[1, 0, 0, 3], &[1, 2]));
    let v = parse_vector("x d/dx ^ d/dy - 2/3 d/dz", 3).unwrap();
    let want = PolyVector::term(3, q(1), &[1, 0, 0], &[0, 1]).plus(&PolyVector::term(3, qr(-2, 3), &[0, 0, 0], &[2]));
    assert_eq!(v, want);
    assert!(matches!(parse_form("w dx", 3), Err(CliError::Parse { pos: 0, .. })));
    assert!(matches!(parse_form("x dw", 3), Err(CliError::Parse { pos: 2, .. })));
    assert!(matches!(parse_form("x^ dx", 3), Err(CliError::Parse { pos: 2, .. })));
    assert!(matches!(parse_vector("x d/dx ^", 3), Err(CliError::Parse { .. })));
}

#[test]
fn cochains() {
    let a = ext_alphabet(2);
    let (m1, m2, m12, e) =
        (a.lookup("m(v1)").unwrap(), a.lookup("m(v2)").unwrap(), a.lookup("m(v1,v2)").unwrap(), a.lookup("e").unwrap());
    let f = parse_cochain("<m(v1)|m(v2);m(v1,v2)> - 2*<;e>", &a).unwrap();
    let mut want = Cochain::single((vec![m1, m2], m12), q(1));
    want.add_term((vec![], e), q(-2));
    assert_eq!(f, want);
    assert_eq!(render_cochain(&a, &f), "-2*<;e> + <m(v1)|m(v2);m(v1,v2)>");
    assert!(parse_cochain("0", &a).unwrap().is_zero());
    assert!(matches!(parse_cochain("<m(v1)|;e>", &a), Err(CliError::Parse { pos: 7, .. })));
}

#[test]
fn expression_kinds() {
    let scope = Scope { alphabet: Some(ext_alphabet(2)), var_count: 3 };
    let e = parse_expression("x*z dz", Kind::Form, &scope).unwrap();
    assert!(matches!(e.ast, Ast::Form(_)));
    assert_eq!(e.render(), "x*z dz");
    let e = parse_expression("-[s^-1 m(v2)]", Kind::Words, &scope).unwrap();
    assert_eq!(e.render(), "-[m(v2)]");
    let bare = Scope { alphabet: None, var_count: 3 };
    assert!(matches!(parse_expression("1", Kind::Words, &bare), Err(CliError::Usage(_))));
}

fn coefficient() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_filter("nonzero", |(p, _)| *p != 0).prop_map(|(p, d)| qr(p, d))
}

fn alphabets() -> Vec<Arc<Alphabet>> {
    vec![ext_alphabet(3), Cobar::with_counit(&yang_mills(2).unwrap()).alphabet.clone()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn words_round_trip(k in 0usize..2, terms in prop::collection::vec((coefficient(), prop::collection::vec(0usize..32, 0..5)), 0..5)) {
        let a = &alphabets()[k];
        let mut p = Poly::zero();
        for (c, raw) in terms {
            p.add_term(Word(raw.iter().map(|i| i % a.len()).collect()), c);
        }
        let text = render_poly(a, &p);
        prop_assert_eq!(parse_words(&text, a).unwrap(), p);
    }

    #[test]
    fn cochains_round_trip(terms in prop::collection::vec((coefficient(), prop::collection::vec(0usize..8, 0..4), 0usize..8), 0..5)) {
        let a = ext_alphabet(3);
        let mut f = Cochain::zero();
        for (c, xs, out) in terms {
            f.add_term((xs, out), c);
        }
        prop_assert_eq!(parse_cochain(&render_cochain(&a, &f), &a).unwrap(), f);
    }

    #[test]
    fn forms_and_vectors_round_trip(
        m in 1usize..=4,
        terms in prop::collection::vec((coefficient(), prop::collection::vec(0u32..4, 4), prop::collection::vec(0usize..4, 0..=4)), 0..5),
    ) {
        let mut f = PolyForm::zero(m);
        for (c, e, idx) in &terms {
            let idx: Vec<usize> = idx.iter().map(|i| i % m).collect();
            f = f.plus(&PolyForm::term(m, c.clone(), &e[..m], &idx));
        }
        prop_assert_eq!(parse_form(&f.render(), m).unwrap(), f.clone());
        let v = PolyVector { var_count: m, terms: f.terms };
        prop_assert_eq!(parse_vector(&v.render(), m).unwrap(), v);
    }
}
