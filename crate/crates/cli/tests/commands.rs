use ncpoisson::cobar::{homology_dim, Cobar, Complex, Cutoffs};
use ncpoisson::hkr::de_rham_d;
use ncpoisson_cli::json::{coalgebra_from_json, coalgebra_to_json, parse_coalgebra_json};
use ncpoisson_cli::parse::parse_form;
use ncpoisson_cli::registry::build_coalgebra;
use ncpoisson_cli::run;
use serde_json::Value;

fn ncp(args: &[&str]) -> ncpoisson_cli::Outcome {
    run(std::iter::once("ncpoisson").chain(args.iter().copied()))
}

#[test]
fn jacobiator_suite_prints_golden_values() {
    let out = ncp(&["verify", "--suite", "hkr-jacobiator"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    for line in [
        "{{alpha,beta},gamma} = x^2*y*z^2 dx - x^3*y*z dz",
        "{alpha,{beta,gamma}} = -x^3*z^2 dy - x^3*y*z dz",
        "{beta,{alpha,gamma}} = 2*x^2*y*z^2 dx + 2*x^3*y*z dz",
        "d(x^3*y*z^2) = 3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz (match)",
    ] {
        assert!(out.stdout.contains(line), "missing `{line}` in\n{}", out.stdout);
    }
}

#[test]
fn homology_table_matches_engine() {
    let out = ncp(&[
        "homology",
        "--coalgebra",
        "exterior:1",
        "--complex",
        "cyclic",
        "--max-weight",
        "5",
        "--max-degree",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["complex"], "cyclic");
    let cb = Cobar::new(&build_coalgebra("exterior:1").unwrap());
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 6 * 3);
    for b in blocks {
        let (d, w) = (b["degree"].as_i64().unwrap(), b["weight"].as_u64().unwrap() as u32);
        let want = homology_dim(&cb, Complex::Cyclic, d, w, Cutoffs::new(3, 5)).unwrap();
        assert_eq!(b["dim"].as_u64().unwrap() as usize, want);
    }
    let text = ncp(&[
        "homology",
        "--coalgebra",
        "exterior:1",
        "--complex",
        "cyclic",
        "--max-weight",
        "5",
        "--max-degree",
        "3",
    ]);
    assert!(text.stdout.starts_with("cyclic homology of exterior:1\n"));
    assert!(text.stdout.contains("       5     1     0     0\n"), "{}", text.stdout);
}

#[test]
fn brackets() {
    let out = ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "[s^-1 m(v1)]", "--rhs", "1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "0\n"));
    let out = ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "[m(v1)]", "--rhs", "[m(v2)]"]);
    assert_eq!(out.stdout, "1 ⊗ 1\n");
    let out = ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "[m(v1)]", "--rhs", "[m(v2)]", "--kind", "loday"]);
    assert_eq!(out.stdout, "1\n");
    let out =
        ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "-2*[m(v1)]", "--rhs", "[m(v2)]", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["value"], "-2*1 ⊗ 1");
    assert_eq!(v["lhs"], "-2*[m(v1)]");
}

#[test]
fn exit_codes() {
    let parse = ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "[v1 | ]", "--rhs", "1"]);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("parse error at 6"), "{}", parse.stderr);
    let unknown = ncp(&["bracket", "--coalgebra", "exterior:2", "--lhs", "[v7]", "--rhs", "1"]);
    assert_eq!(unknown.code, 2);
    assert_eq!(ncp(&["verify", "--suite", "nope"]).code, 2);
    assert_eq!(ncp(&["frobnicate"]).code, 2);
    assert_eq!(ncp(&["homology", "--coalgebra", "exterior:1", "--complex", "nope"]).code, 2);
    assert_eq!(ncp(&["homology"]).code, 2);
    assert_eq!(ncp(&["example", "--coalgebra", "sklyanin3:1,1,1"]).code, 2);
    assert_eq!(ncp(&["example", "--coalgebra", "grassmann:2"]).code, 2);
    assert_eq!(ncp(&["--help"]).code, 0);
    // a bracket needs a pairing
    let path = std::env::temp_dir().join("ncpoisson-nopairing.json");
    let mut j = coalgebra_to_json(&build_coalgebra("exterior:2").unwrap());
    j.pairing = None;
    std::fs::write(&path, serde_json::to_string(&j).unwrap()).unwrap();
    let spec = format!("json:{}", path.display());
    let out = ncp(&["bracket", "--coalgebra", &spec, "--lhs", "1", "--rhs", "1"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    assert!(out.stderr.contains("no cyclic pairing"));
}

#[test]
fn verify_exit_status_tracks_failures() {
    for args in [
        vec!["verify", "--suite", "pairing", "--coalgebra", "exterior:2"],
        vec!["verify", "--suite", "pairing", "--coalgebra", "sklyanin3:1,1,1"],
        vec!["verify", "--suite", "d-compat", "--coalgebra", "yang_mills:2", "--trials", "20"],
        vec!["verify", "--suite", "liemorph", "--coalgebra", "exterior:1", "--trials", "20", "--seed", "9"],
    ] {
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let out = ncp(&json_args);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let failures: u64 = v["checks"].as_array().unwrap().iter().map(|c| c["failed"].as_u64().unwrap()).sum();
        assert_eq!(out.code == 0, failures == 0, "{args:?}");
        assert_eq!(v["passed"].as_bool().unwrap(), failures == 0);
    }
    let bad = ncp(&["verify", "--suite", "pairing", "--coalgebra", "sklyanin3:1,1,1"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("FAIL construction on sklyanin3:1,1,1"));
}

#[test]
fn suites_are_reproducible_from_the_seed() {
    let args = ["verify", "--suite", "duality", "--coalgebra", "exterior:2", "--trials", "30", "--format", "json"];
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v["millis"] = Value::Null;
        v
    };
    let (a, b) = (ncp(&args), ncp(&args));
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
    assert_eq!(a.code, 0);
}

#[test]
fn coalgebra_json_round_trip() {
    for spec in ["exterior:3", "sklyanin3:1,2,3", "sklyanin4:2,3,-5/7", "yang_mills:2"] {
        let c = build_coalgebra(spec).unwrap();
        let j = coalgebra_to_json(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back = parse_coalgebra_json(&text).unwrap();
        assert_eq!(coalgebra_to_json(&back), j);
        assert!(back.check_ainf_coalgebra().passed());
        assert!(back.check_cyclic_pairing().unwrap().passed());
    }
    let c = build_coalgebra("exterior:2").unwrap();
    let mut j = coalgebra_to_json(&c);
    j.coproducts.get_mut("2").unwrap()[0].dst.push(String::from("e"));
    assert!(coalgebra_from_json(&j).is_err());
    let mut j = coalgebra_to_json(&c);
    j.basis[1].id = String::from("e");
    assert!(coalgebra_from_json(&j).is_err());
    assert!(parse_coalgebra_json("{").is_err());
    let out = ncp(&["example", "--coalgebra", "yang_mills:2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coaugmentation"], "e");
    assert!(v["coproducts"]["3"].as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn example_listing_and_summary() {
    let out = ncp(&["example", "--list"]);
    for name in ["exterior", "sklyanin3", "sklyanin4", "yang_mills"] {
        assert!(out.stdout.contains(name));
    }
    let out = ncp(&["example", "--coalgebra", "sklyanin4:2,3,-5/7"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("A-infinity relations: ok"));
    assert!(out.stdout.contains("cyclic pairing of degree -4: ok"), "{}", out.stdout);
}

#[test]
fn hkr_verb() {
    let out = ncp(&["hkr", "--op", "psi-inverse", "--a", "3*x^2*y*z^2 dx^dy"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = ncp(&["hkr", "--op", "d", "--a", "x^2*y*z dx"]);
    let got = parse_form(out.stdout.trim(), 3).unwrap();
    assert_eq!(got, de_rham_d(&parse_form("x^2*y*z dx", 3).unwrap()));
    let out = ncp(&["hkr", "--op", "jacobiator", "--a", "x^2*y*z dx", "--b", "x*y*z dy", "--c", "x*z dz"]);
    assert_eq!(out.stdout, "3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz\nprimitive: x^3*y*z^2\n");
    let out = ncp(&["hkr", "--op", "schouten", "--a", "x d/dy", "--b", "y d/dx"]);
    let got = ncpoisson_cli::parse::parse_vector(out.stdout.trim(), 3).unwrap();
    let want = ncpoisson::hkr::schouten_bracket(
        &ncpoisson_cli::parse::parse_vector("x d/dy", 3).unwrap(),
        &ncpoisson_cli::parse::parse_vector("y d/dx", 3).unwrap(),
    )
    .unwrap();
    assert_eq!(got, want);
    assert!(!got.is_zero());
    let out = ncp(&["hkr", "--op", "primitive", "--vars", "2", "--a", "y dx"]);
    assert_eq!(out.stdout, "not exact\n");
    assert_eq!(ncp(&["hkr", "--op", "bracket", "--a", "x dx"]).code, 2);
    assert_eq!(ncp(&["hkr", "--op", "d", "--a", "x +"]).code, 2);
}
