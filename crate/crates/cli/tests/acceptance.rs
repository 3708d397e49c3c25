use std::time::Instant;

use ncpoisson::cobar::Cutoffs;
use ncpoisson_cli::suites::{run_suite, SuiteConfig, SuiteReport};

struct Criterion {
    id: usize,
    name: &'static str,
    suite: &'static str,
    trials: usize,
    max_len: Option<usize>,
    cutoffs: Cutoffs,
    budget_secs: f64,
}

const fn criterion(id: usize, name: &'static str, suite: &'static str, trials: usize) -> Criterion {
    Criterion { id, name, suite, trials, max_len: None, cutoffs: Cutoffs::new(6, 6), budget_secs: 120.0 }
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { budget_secs: 1.0, ..criterion(1, "polynomial jacobiator golden values", "hkr-jacobiator", 1) },
        Criterion { max_len: Some(4), ..criterion(2, "double Poisson identities", "double-poisson", 200) },
        criterion(3, "differential compatibility of the double bracket", "d-compat", 200),
        criterion(4, "Quillen and Connes operator identities", "quillen", 200),
        criterion(5, "Lie morphism to the trace quotient", "liemorph", 200),
        Criterion { max_len: Some(3), ..criterion(6, "Hochschild cochain duality", "duality", 100) },
        Criterion { cutoffs: Cutoffs::new(4, 4), ..criterion(7, "periodic exactness", "exactness", 1) },
        Criterion { cutoffs: Cutoffs::new(4, 4), ..criterion(8, "homology oracles and Koszul duals", "homology", 1) },
        criterion(9, "cyclic pairings on the example coalgebras", "pairing", 200),
        criterion(10, "polynomial HKR exactness", "hkr-exactness", 100),
    ]
}

// sklyanin3 at (1,1,1) degenerates: the weight 3 component is not one dimensional
const KNOWN: [usize; 2] = [2, 9];

fn only_degenerate_sklyanin(r: &SuiteReport) -> bool {
    r.checks.iter().filter(|c| !c.passed()).all(|c| {
        c.identity == "construction"
            && c.example == "sklyanin3:1,1,1"
            && c.failures.iter().all(|f| f.lhs.contains("bad parameters"))
    })
}

#[test]
fn acceptance() {
    let mut unexpected = Vec::new();
    for c in criteria() {
        let cfg = SuiteConfig { trials: c.trials, max_len: c.max_len, cutoffs: c.cutoffs, ..SuiteConfig::default() };
        let start = Instant::now();
        let report = run_suite(c.suite, &cfg).expect("suite runs");
        let secs = start.elapsed().as_secs_f64();
        let in_budget = secs < c.budget_secs;
        let ok = report.passed && in_budget;
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "[{}] {}: {status} ({} checks, {} failed, {secs:.2}s)",
            c.id,
            c.name,
            report.checks.len(),
            report.failures()
        );
        for chk in report.checks.iter().filter(|k| !k.passed()) {
            let first = chk.failures.first().map(|f| f.lhs.as_str()).unwrap_or("");
            println!("      {} on {}: {first}", chk.identity, chk.example);
        }
        if !in_budget {
            println!("      over budget of {}s", c.budget_secs);
        }
        if !ok && !(KNOWN.contains(&c.id) && in_budget && only_degenerate_sklyanin(&report)) {
            unexpected.push(c.id);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
