//! Seeded verification suites. Every check draws its inputs from a
//! `ChaCha8Rng` keyed by the seed, the suite, the example and the identity, so
//! reports are reproducible one check at a time.

use std::time::Instant;

use ncpoisson::ainf::{quadratic_koszul_dual, AInfCoalgebra};
use ncpoisson::cobar::{
    b_op, beta, bprime_op, check_periodic_exactness, dbar, double_d, homology_dim, j_map, n_op, t_op, Cobar, Complex,
    Cutoffs, DoubleValue, OneFormClass,
};
use ncpoisson::gerstenhaber::{duality_summand_counts, verify_duality, CochainComplex};
use ncpoisson::hkr::{
    de_rham_d, exact_primitive, hkr_bracket, jacobiator, psi_inverse, same_class, PolyForm, PolyVector,
};
use ncpoisson::linalg::SubspaceBasis;
use ncpoisson::poisson::{left_act, oneform_natural_bracket, right_act, DoublePoisson, TripleValue};
use ncpoisson::tensor::{odd, render_lin, render_poly, Alphabet, Lin, Poly, Word};
use ncpoisson::{q, Q};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::parse::{parse_form, parse_vector, render_cochain};
use crate::registry::build_coalgebra;

pub const SUITES: [(&str, &str); 10] = [
    ("hkr-jacobiator", "golden bracket values on x^2*y*z dx, x*y*z dy, x*z dz"),
    ("double-poisson", "antisymmetry, both derivation rules and double Jacobi"),
    ("d-compat", "compatibility of the double bracket with the cobar differential"),
    ("quillen", "bicomplex and one-form identities and their transport"),
    ("liemorph", "dbar and beta are morphisms for the bracket action"),
    ("duality", "Tradler transport of the Loday bracket to the Gerstenhaber bracket"),
    ("exactness", "blockwise exactness of the four-term sequence"),
    ("homology", "homology regression against brute-force oracles"),
    ("pairing", "cyclic pairing and A-infinity certificates"),
    ("hkr-exactness", "exactness of the hkr jacobiator on random forms"),
];

/// Failures kept in a report; the count is exact.
const KEEP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub example: String,
    pub trials: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    fn new(identity: &str, example: &str) -> Self {
        CheckReport { identity: identity.into(), example: example.into(), trials: 0, failed: 0, failures: Vec::new() }
    }

    fn record(&mut self, outcome: Option<Failure>) {
        self.trials += 1;
        if let Some(f) = outcome {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    /// Longest random word; `None` uses the suite default.
    pub max_len: Option<usize>,
    /// Coalgebras to run on; `None` uses the suite default.
    pub examples: Option<Vec<String>>,
    pub cutoffs: Cutoffs,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, trials: 200, max_len: None, examples: None, cutoffs: Cutoffs::new(6, 6) }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut ctx = Ctx { cfg, suite: name, checks: Vec::new(), notes: Vec::new() };
    match name {
        "hkr-jacobiator" => ctx.hkr_golden(),
        "double-poisson" => ctx.per_example(&["exterior:2", "exterior:3", "sklyanin3:1,1,1"], Ctx::double_poisson),
        "d-compat" => ctx.per_example(
            &["exterior:1", "exterior:2", "exterior:3", "sklyanin3:1,2,3", "sklyanin4:2,3,-5/7", "yang_mills:2"],
            Ctx::d_compat,
        ),
        "quillen" => ctx.per_example(&["exterior:2", "exterior:3", "sklyanin3:1,2,3", "yang_mills:2"], Ctx::quillen),
        "liemorph" => ctx.per_example(&["exterior:2", "sklyanin3:1,2,3"], Ctx::liemorph),
        "duality" => {
            ctx.per_example(&["exterior:2", "exterior:3", "sklyanin3:1,2,3"], Ctx::duality);
            ctx.summand_counts();
        }
        "exactness" => ctx.per_example(&["exterior:1", "exterior:2"], Ctx::exactness),
        "homology" => {
            if cfg.examples.is_none() {
                ctx.polynomial_line();
                ctx.koszul_dual_comparison();
            }
            ctx.per_example(&["exterior:1", "exterior:2"], Ctx::cyclic_models);
        }
        "pairing" => ctx.per_example(
            &[
                "exterior:1",
                "exterior:2",
                "exterior:3",
                "exterior:4",
                "sklyanin3:1,1,1",
                "sklyanin4:2,3,-5/7",
                "yang_mills:2",
            ],
            Ctx::pairing,
        ),
        "hkr-exactness" => ctx.hkr_exactness(),
        other => return Err(CliError::Usage(format!("unknown suite `{other}`"))),
    }
    let passed = ctx.checks.iter().all(CheckReport::passed);
    Ok(SuiteReport {
        suite: name.into(),
        passed,
        checks: ctx.checks,
        notes: ctx.notes,
        millis: start.elapsed().as_millis(),
    })
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    suite: &'a str,
    checks: Vec<CheckReport>,
    notes: Vec<String>,
}

fn sign(e: i64) -> Q {
    if odd(e) {
        q(-1)
    } else {
        q(1)
    }
}

/// FNV-1a over the labels, mixed with the seed.
fn stream(seed: u64, labels: &[&str]) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for l in labels {
        for b in l.bytes().chain([0xff]) {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    ChaCha8Rng::seed_from_u64(h)
}

fn coef(rng: &mut ChaCha8Rng) -> Q {
    let c = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        q(-c)
    } else {
        q(c)
    }
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[usize], min: usize, max: usize) -> Word {
    let len = rng.gen_range(min..=max.max(min));
    Word((0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect())
}

/// A few words of one bidegree with random coefficients.
fn homogeneous(rng: &mut ChaCha8Rng, cb: &Cobar, letters: &[usize], max: usize) -> Poly {
    let first = random_word(rng, letters, 1, max);
    let key = (cb.word_deg(&first.0), cb.word_weight(&first.0));
    let mut p = Poly::single(first, coef(rng));
    for _ in 0..4 {
        let w = random_word(rng, letters, 1, max);
        if (cb.word_deg(&w.0), cb.word_weight(&w.0)) == key {
            p.add_term(w, coef(rng));
        }
    }
    p
}

fn homogeneous_class(rng: &mut ChaCha8Rng, cb: &Cobar, letters: &[usize], max: usize) -> OneFormClass {
    let bideg = |w: &Word, v: usize| (cb.word_deg(&w.0) + cb.deg(v), cb.word_weight(&w.0) + cb.alphabet.get(v).weight);
    let draw = |rng: &mut ChaCha8Rng| {
        let w = random_word(rng, letters, 0, max.saturating_sub(1));
        (w, letters[rng.gen_range(0..letters.len())])
    };
    let (w, v) = draw(rng);
    let key = bideg(&w, v);
    let mut out = OneFormClass::single((w, v), coef(rng));
    for _ in 0..4 {
        let (w, v) = draw(rng);
        if bideg(&w, v) == key {
            out.add_term((w, v), coef(rng));
        }
    }
    out
}

fn show_double(alpha: &Alphabet, x: &DoubleValue) -> String {
    render_lin(x, |(u, v)| format!("{} ⊗ {}", alpha.render_word(u), alpha.render_word(v)))
}

fn show_triple(alpha: &Alphabet, x: &TripleValue) -> String {
    render_lin(x, |(u, v, w)| format!("{} ⊗ {} ⊗ {}", alpha.render_word(u), alpha.render_word(v), alpha.render_word(w)))
}

fn show_class(alpha: &Alphabet, x: &OneFormClass) -> String {
    render_lin(x, |(w, v)| format!("{} d{}", alpha.render_word(w), alpha.get(*v).id))
}

fn compare<T: PartialEq>(
    inputs: impl FnOnce() -> Vec<String>,
    lhs: &T,
    rhs: &T,
    show: impl Fn(&T) -> String,
) -> Option<Failure> {
    (lhs != rhs).then(|| Failure { inputs: inputs(), lhs: show(lhs), rhs: show(rhs) })
}

impl<'a> Ctx<'a> {
    fn max_len(&self, default: usize) -> usize {
        self.cfg.max_len.unwrap_or(default)
    }

    fn rng(&self, example: &str, identity: &str) -> ChaCha8Rng {
        stream(self.cfg.seed, &[self.suite, example, identity])
    }

    fn per_example(&mut self, defaults: &[&str], run: fn(&mut Self, &str, &AInfCoalgebra)) {
        let specs: Vec<String> = match &self.cfg.examples {
            Some(v) => v.clone(),
            None => defaults.iter().map(|s| s.to_string()).collect(),
        };
        for spec in specs {
            match build_coalgebra(&spec) {
                Ok(c) => run(self, &spec, &c),
                Err(e) => {
                    let mut r = CheckReport::new("construction", &spec);
                    r.record(Some(Failure {
                        inputs: vec![spec.clone()],
                        lhs: e.to_string(),
                        rhs: String::from("a coalgebra"),
                    }));
                    self.checks.push(r);
                }
            }
        }
    }

    fn bracket_of(&mut self, spec: &str, c: &AInfCoalgebra) -> Option<DoublePoisson> {
        match DoublePoisson::new(Cobar::with_counit(c)) {
            Ok(dp) => Some(dp),
            Err(e) => {
                let mut r = CheckReport::new("double-bracket", spec);
                r.record(Some(Failure {
                    inputs: vec![spec.into()],
                    lhs: e.to_string(),
                    rhs: String::from("a cyclic pairing"),
                }));
                self.checks.push(r);
                None
            }
        }
    }

    fn double_poisson(&mut self, spec: &str, c: &AInfCoalgebra) {
        let Some(dp) = self.bracket_of(spec, c) else { return };
        let (alpha, letters, n, max) = (dp.cobar.alphabet.clone(), dp.cobar.letters(), dp.n, self.max_len(4));
        let deg = |w: &Word| dp.cobar.word_deg(&w.0);
        let b = |w: &Word| Poly::basis(w.clone());
        let names = |ws: &[&Word]| ws.iter().map(|w| alpha.render_word(w)).collect::<Vec<_>>();
        let show = |x: &DoubleValue| show_double(&alpha, x);

        let mut r = CheckReport::new("antisymmetry", spec);
        let mut rng = self.rng(spec, "antisymmetry");
        for _ in 0..self.cfg.trials {
            let (wa, wb) = (random_word(&mut rng, &letters, 0, max), random_word(&mut rng, &letters, 0, max));
            let lhs = dp.double_bracket(&b(&wa), &b(&wb));
            let rhs = dp.flip(&dp.double_bracket(&b(&wb), &b(&wa))).scaled(&-sign((deg(&wa) + n) * (deg(&wb) + n)));
            r.record(compare(|| names(&[&wa, &wb]), &lhs, &rhs, show));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("right-derivation", spec);
        let mut rng = self.rng(spec, "right-derivation");
        for _ in 0..self.cfg.trials {
            let wa = random_word(&mut rng, &letters, 0, max);
            let wb = random_word(&mut rng, &letters, 0, max / 2);
            let wc = random_word(&mut rng, &letters, 0, max - max / 2);
            let lhs = dp.double_bracket(&b(&wa), &b(&wb.concat(&wc)));
            let mut rhs = right_act(&dp.double_bracket(&b(&wa), &b(&wb)), &wc);
            rhs.add_scaled(&left_act(&wb, &dp.double_bracket(&b(&wa), &b(&wc))), &sign(deg(&wb) * (deg(&wa) + n)));
            r.record(compare(|| names(&[&wa, &wb, &wc]), &lhs, &rhs, show));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("left-derivation", spec);
        let mut rng = self.rng(spec, "left-derivation");
        for _ in 0..self.cfg.trials {
            let wa = random_word(&mut rng, &letters, 0, max / 2);
            let wb = random_word(&mut rng, &letters, 0, max - max / 2);
            let wc = random_word(&mut rng, &letters, 0, max);
            let lhs = dp.double_bracket(&b(&wa.concat(&wb)), &b(&wc));
            let mut rhs = dp.inner_left(&wa, &dp.double_bracket(&b(&wb), &b(&wc)));
            rhs.add_scaled(
                &dp.inner_right(&dp.double_bracket(&b(&wa), &b(&wc)), &wb),
                &sign(deg(&wb) * (deg(&wc) + n)),
            );
            r.record(compare(|| names(&[&wa, &wb, &wc]), &lhs, &rhs, show));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("double-jacobi", spec);
        let mut rng = self.rng(spec, "double-jacobi");
        for _ in 0..self.cfg.trials {
            let ws: Vec<Word> = (0..3).map(|_| random_word(&mut rng, &letters, 0, max)).collect();
            let lhs = dp.double_jacobiator(&ws[0], &ws[1], &ws[2]);
            r.record(compare(
                || names(&[&ws[0], &ws[1], &ws[2]]),
                &lhs,
                &TripleValue::zero(),
                |x| show_triple(&alpha, x),
            ));
        }
        self.checks.push(r);
    }

    fn d_compat(&mut self, spec: &str, c: &AInfCoalgebra) {
        let Some(dp) = self.bracket_of(spec, c) else { return };
        let cb = &dp.cobar;
        let (alpha, letters, max) = (cb.alphabet.clone(), cb.letters(), self.max_len(4));
        let mut r = CheckReport::new("d-compatibility", spec);
        let mut rng = self.rng(spec, "d-compatibility");
        for _ in 0..self.cfg.trials {
            let (wa, wb) = (random_word(&mut rng, &letters, 0, max), random_word(&mut rng, &letters, 0, max));
            let (pa, pb) = (Poly::basis(wa.clone()), Poly::basis(wb.clone()));
            let lhs = double_d(cb, &dp.double_bracket(&pa, &pb));
            let mut rhs = dp.double_bracket(&cb.d(&pa), &pb);
            rhs.add_scaled(&dp.double_bracket(&pa, &cb.d(&pb)), &sign(cb.word_deg(&wa.0) + dp.n));
            r.record(compare(
                || vec![alpha.render_word(&wa), alpha.render_word(&wb)],
                &lhs,
                &rhs,
                |x| show_double(&alpha, x),
            ));
        }
        self.checks.push(r);
    }

    fn quillen(&mut self, spec: &str, c: &AInfCoalgebra) {
        let cb = Cobar::new(c);
        let (alpha, letters, max) = (cb.alphabet.clone(), cb.reduced_letters(), self.max_len(4));
        let one_minus_t = |x: &Poly| x.sub(&t_op(&cb, x));
        let show = |x: &Poly| render_poly(&alpha, x);
        let showc = |x: &OneFormClass| show_class(&alpha, x);
        type PolyCheck<'c> = (&'static str, Box<dyn Fn(&Poly) -> (Poly, Poly) + 'c>);
        let poly_checks: Vec<PolyCheck> = vec![
            ("b-squared", Box::new(|p| (b_op(&cb, &b_op(&cb, p, true), true), Poly::zero()))),
            ("bprime-squared", Box::new(|p| (bprime_op(&cb, &bprime_op(&cb, p, true), true), Poly::zero()))),
            ("n-after-one-minus-t", Box::new(|p| (n_op(&cb, &one_minus_t(p)), Poly::zero()))),
            ("one-minus-t-after-n", Box::new(|p| (one_minus_t(&n_op(&cb, p)), Poly::zero()))),
            ("j-dbar-is-n", Box::new(|p| (j_map(&cb, &dbar(&cb, p)), n_op(&cb, p)))),
        ];
        for (name, f) in &poly_checks {
            let mut r = CheckReport::new(name, spec);
            let mut rng = self.rng(spec, name);
            for _ in 0..self.cfg.trials {
                let p = homogeneous(&mut rng, &cb, &letters, max);
                let (lhs, rhs) = f(&p);
                r.record(compare(|| vec![show(&p)], &lhs, &rhs, show));
            }
            self.checks.push(r);
        }

        let mut r = CheckReport::new("beta-after-dbar", spec);
        let mut rng = self.rng(spec, "beta-after-dbar");
        for _ in 0..self.cfg.trials {
            let p = homogeneous(&mut rng, &cb, &letters, max);
            r.record(compare(|| vec![show(&p)], &beta(&cb, &dbar(&cb, &p)), &Poly::zero(), show));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("dbar-after-beta", spec);
        let mut rng = self.rng(spec, "dbar-after-beta");
        for _ in 0..self.cfg.trials {
            let cls = homogeneous_class(&mut rng, &cb, &letters, max);
            r.record(compare(|| vec![showc(&cls)], &dbar(&cb, &beta(&cb, &cls)), &OneFormClass::zero(), showc));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("beta-is-minus-one-minus-t", spec);
        let mut rng = self.rng(spec, "beta-is-minus-one-minus-t");
        for _ in 0..self.cfg.trials {
            let cls = homogeneous_class(&mut rng, &cb, &letters, max);
            let lhs = beta(&cb, &cls).neg();
            let rhs = one_minus_t(&j_map(&cb, &cls));
            r.record(compare(|| vec![showc(&cls)], &lhs, &rhs, show));
        }
        self.checks.push(r);
    }

    fn liemorph(&mut self, spec: &str, c: &AInfCoalgebra) {
        let Some(dp) = self.bracket_of(spec, c) else { return };
        let cb = &dp.cobar;
        let (alpha, letters, max) = (cb.alphabet.clone(), cb.letters(), self.max_len(3));

        let mut r = CheckReport::new("dbar-morphism", spec);
        let mut rng = self.rng(spec, "dbar-morphism");
        for _ in 0..self.cfg.trials {
            let (wr, wq) = (random_word(&mut rng, &letters, 0, max), random_word(&mut rng, &letters, 0, max));
            let (pr, pq) = (Poly::basis(wr.clone()), Poly::basis(wq.clone()));
            let lhs = dbar(cb, &dp.loday_bracket(&pr, &pq));
            let rhs = oneform_natural_bracket(&dp, &pr, &dbar(cb, &pq));
            r.record(compare(
                || vec![alpha.render_word(&wr), alpha.render_word(&wq)],
                &lhs,
                &rhs,
                |x| show_class(&alpha, x),
            ));
        }
        self.checks.push(r);

        let mut r = CheckReport::new("beta-morphism", spec);
        let mut rng = self.rng(spec, "beta-morphism");
        for _ in 0..self.cfg.trials {
            let wr = random_word(&mut rng, &letters, 0, max);
            let w = random_word(&mut rng, &letters, 0, max.saturating_sub(1));
            let v = letters[rng.gen_range(0..letters.len())];
            let pr = Poly::basis(wr.clone());
            let cls = OneFormClass::basis((w, v));
            let lhs = beta(cb, &oneform_natural_bracket(&dp, &pr, &cls));
            let rhs = dp.loday_bracket(&pr, &beta(cb, &cls));
            r.record(compare(
                || vec![alpha.render_word(&wr), show_class(&alpha, &cls)],
                &lhs,
                &rhs,
                |x| render_poly(&alpha, x),
            ));
        }
        self.checks.push(r);
    }

    fn duality(&mut self, spec: &str, c: &AInfCoalgebra) {
        let Some(dp) = self.bracket_of(spec, c) else { return };
        let alpha = dp.cobar.alphabet.clone();
        let letters = dp.cobar.reduced_letters();
        let max = self.max_len(3);
        let mut r = CheckReport::new("phi-b-bracket", spec);
        let mut rng = self.rng(spec, "phi-b-bracket");
        for _ in 0..self.cfg.trials {
            let (wu, wv) = (random_word(&mut rng, &letters, 0, max), random_word(&mut rng, &letters, 0, max));
            let inputs = || vec![alpha.render_word(&wu), alpha.render_word(&wv)];
            match verify_duality(&dp, &Poly::basis(wu.clone()), &Poly::basis(wv.clone())) {
                Ok(rep) => r.record(compare(inputs, &rep.lhs, &rep.rhs, |x| render_cochain(&alpha, x))),
                Err(e) => r.record(Some(Failure { inputs: inputs(), lhs: e.to_string(), rhs: String::new() })),
            }
        }
        self.checks.push(r);
        // the structure cochain squares to zero under the bracket
        let cx = CochainComplex::new(c);
        let mut r = CheckReport::new("structure-square-zero", spec);
        let m = cx.structure().clone();
        r.record(compare(Vec::new, &cx.compose(&m, &m), &Lin::zero(), |x| render_cochain(&alpha, x)));
        self.checks.push(r);
    }

    fn summand_counts(&mut self) {
        let mut r = CheckReport::new("summand-count", "formal letters");
        for n in 1..=4usize {
            for m in 1..=4usize {
                let (left, right) = duality_summand_counts(n, m);
                let expect = n * m * (m + n - 2);
                r.record(compare(
                    || vec![format!("n={n}"), format!("m={m}")],
                    &(left, right),
                    &(expect, expect),
                    |(a, b)| format!("{a} left, {b} right"),
                ));
            }
        }
        self.checks.push(r);
    }

    fn exactness(&mut self, spec: &str, c: &AInfCoalgebra) {
        let rep = check_periodic_exactness(&Cobar::new(c), self.cfg.cutoffs);
        let mut r = CheckReport::new("four-term-exactness", spec);
        for &(d, w) in &rep.blocks {
            let bad: Vec<u8> = rep.failures.iter().filter(|f| f.0 == d && f.1 == w).map(|f| f.2).collect();
            r.record((!bad.is_empty()).then(|| Failure {
                inputs: vec![format!("degree {d}"), format!("weight {w}")],
                lhs: format!("not exact at positions {bad:?}"),
                rhs: String::from("exact"),
            }));
        }
        self.checks.push(r);
    }

    fn blocks(&self) -> impl Iterator<Item = (i64, u32)> {
        let cut = self.cfg.cutoffs;
        (1..=cut.max_weight).flat_map(move |w| (0..cut.max_degree).map(move |d| (d, w)))
    }

    fn dim(&self, cb: &Cobar, cx: Complex, d: i64, w: u32) -> std::result::Result<usize, String> {
        homology_dim(cb, cx, d, w, self.cfg.cutoffs).map_err(|e| e.to_string())
    }

    /// `exterior:1` is dual to `k[x]`: `HH` is one-dimensional in degrees 0 and
    /// 1 of every weight and the reduced cyclic homology sits in degree 0.
    fn polynomial_line(&mut self) {
        let Ok(c) = build_coalgebra("exterior:1") else { return };
        let cb = Cobar::new(&c);
        let oracle = |cx: Complex, d: i64| -> usize {
            match cx {
                Complex::Hochschild => usize::from(d <= 1),
                _ => usize::from(d == 0),
            }
        };
        for cx in [Complex::Hochschild, Complex::Cyclic, Complex::CobarNatural] {
            let mut r = CheckReport::new(&format!("{}-oracle", cx.name()), "exterior:1");
            for (d, w) in self.blocks() {
                let got = self.dim(&cb, cx, d, w);
                r.record(compare(
                    || vec![format!("degree {d}"), format!("weight {w}")],
                    &got,
                    &Ok(oracle(cx, d)),
                    |x| format!("{x:?}"),
                ));
            }
            self.checks.push(r);
        }
    }

    /// The quadratic dual of the symmetric relations on two generators against
    /// `exterior:2`, by weight dimensions and by every homology block.
    fn koszul_dual_comparison(&mut self) {
        let sym: Lin<usize> = [(1usize, q(1)), (2usize, q(-1))].into_iter().collect();
        let rel = SubspaceBasis::span_of(4, &[sym]);
        let cut = self.cfg.cutoffs;
        let qd = match quadratic_koszul_dual(2, &rel, Some(cut.max_weight.max(2))) {
            Ok(c) => c,
            Err(e) => {
                let mut r = CheckReport::new("koszul-dual", "quadratic_dual(sym,2)");
                r.record(Some(Failure { inputs: Vec::new(), lhs: e.to_string(), rhs: String::from("a coalgebra") }));
                self.checks.push(r);
                return;
            }
        };
        let Ok(ext) = build_coalgebra("exterior:2") else { return };
        let dims = |c: &AInfCoalgebra| -> Vec<usize> {
            let top = c.max_weight().max(2);
            (0..=top).map(|w| c.basis.iter().filter(|g| g.weight == w).count()).collect()
        };
        let mut r = CheckReport::new("koszul-dual-dims", "quadratic_dual(sym,2)");
        r.record(compare(Vec::new, &dims(&qd), &vec![1, 2, 1], |x| format!("{x:?}")));
        r.record(compare(Vec::new, &dims(&qd), &dims(&ext), |x| format!("{x:?}")));
        self.checks.push(r);
        let (cq, ce) = (Cobar::new(&qd), Cobar::new(&ext));
        for cx in Complex::ALL {
            let mut r = CheckReport::new(&format!("koszul-dual-{}", cx.name()), "quadratic_dual(sym,2)");
            for (d, w) in self.blocks() {
                let (a, b) = (self.dim(&cq, cx, d, w), self.dim(&ce, cx, d, w));
                r.record(compare(|| vec![format!("degree {d}"), format!("weight {w}")], &a, &b, |x| format!("{x:?}")));
            }
            self.checks.push(r);
        }
    }

    /// Reduced cyclic homology computed as `Ker(1-T)` with `b` and as the
    /// commutator quotient with `d`.
    fn cyclic_models(&mut self, spec: &str, c: &AInfCoalgebra) {
        let cb = Cobar::new(c);
        let mut r = CheckReport::new("cyclic-models-agree", spec);
        for (d, w) in self.blocks() {
            let (a, b) = (self.dim(&cb, Complex::Cyclic, d, w), self.dim(&cb, Complex::CobarNatural, d, w));
            r.record(compare(|| vec![format!("degree {d}"), format!("weight {w}")], &a, &b, |x| format!("{x:?}")));
        }
        self.checks.push(r);
    }

    fn pairing(&mut self, spec: &str, c: &AInfCoalgebra) {
        let mut r = CheckReport::new("ainf-relations", spec);
        let rep = c.check_ainf_coalgebra();
        r.record((!rep.passed()).then(|| Failure {
            inputs: Vec::new(),
            lhs: format!("{} Stasheff and {} counit violations", rep.stasheff.len(), rep.counit.len()),
            rhs: String::from("none"),
        }));
        self.checks.push(r);
        let mut r = CheckReport::new("cyclic-pairing", spec);
        match c.check_cyclic_pairing() {
            Ok(rep) => r.record((!rep.passed()).then(|| Failure {
                inputs: Vec::new(),
                lhs: format!("{rep:?}"),
                rhs: String::from("no violations"),
            })),
            Err(e) => {
                r.record(Some(Failure { inputs: Vec::new(), lhs: e.to_string(), rhs: String::from("a pairing") }))
            }
        }
        self.checks.push(r);
        let mut r = CheckReport::new("algebra-cyclicity", spec);
        match c.dualize().check_cyclic() {
            Ok(bad) => r.record((!bad.is_empty()).then(|| Failure {
                inputs: Vec::new(),
                lhs: format!("{} failing tuples", bad.len()),
                rhs: String::from("none"),
            })),
            Err(e) => {
                r.record(Some(Failure { inputs: Vec::new(), lhs: e.to_string(), rhs: String::from("a pairing") }))
            }
        }
        self.checks.push(r);
    }

    fn hkr_golden(&mut self) {
        let form = |s: &str| parse_form(s, 3).expect("literal form");
        let (a, b, c) = (form("x^2*y*z dx"), form("x*y*z dy"), form("x*z dz"));
        let br = |x: &PolyForm, y: &PolyForm| hkr_bracket(x, y).expect("same variable count");
        let mut r = CheckReport::new("golden-values", "m=3");
        let pinv = psi_inverse(&de_rham_d(&a));
        let want = parse_vector("-x^2*z d/dz + x^2*y d/dy", 3).expect("literal vector");
        r.record(compare(|| vec![String::from("Psi^-1(d alpha)")], &pinv, &want, PolyVector::render));
        self.notes.push(format!("Psi^-1(d alpha) = {}", pinv.render()));
        let values = [
            ("{{alpha,beta},gamma}", br(&br(&a, &b), &c), "x^2*y*z^2 dx - x^3*y*z dz"),
            ("{alpha,{beta,gamma}}", br(&a, &br(&b, &c)), "-x^3*z^2 dy - x^3*y*z dz"),
            ("{beta,{alpha,gamma}}", br(&b, &br(&a, &c)), "2*x^2*y*z^2 dx + 2*x^3*y*z dz"),
        ];
        for (label, got, want) in &values {
            r.record(compare(|| vec![label.to_string()], got, &form(want), PolyForm::render));
            self.notes.push(format!("{label} = {}", got.render()));
        }
        let j = jacobiator(&a, &b, &c).expect("same variable count");
        r.record(compare(
            || vec![String::from("jacobiator")],
            &j,
            &form("3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz"),
            PolyForm::render,
        ));
        let exact = de_rham_d(&form("x^3*y*z^2"));
        r.record(compare(|| vec![String::from("jacobiator vs d(x^3*y*z^2)")], &j, &exact, PolyForm::render));
        self.notes.push(format!("jacobiator = {}", j.render()));
        self.notes.push(format!(
            "d(x^3*y*z^2) = {} ({})",
            exact.render(),
            if j == exact { "match" } else { "MISMATCH" }
        ));
        self.checks.push(r);
    }

    fn hkr_exactness(&mut self) {
        for m in [2usize, 3] {
            let example = format!("m={m}");
            let mut r = CheckReport::new("jacobiator-exact", &example);
            let mut rng = self.rng(&example, "jacobiator-exact");
            for _ in 0..self.cfg.trials {
                let forms: Vec<PolyForm> = (0..3).map(|_| random_form(&mut rng, m)).collect();
                let j = jacobiator(&forms[0], &forms[1], &forms[2]).expect("same variable count");
                let inputs = || forms.iter().map(PolyForm::render).collect::<Vec<_>>();
                let ok = exact_primitive(&j).is_some_and(|p| de_rham_d(&p) == j) && same_class(&j, &PolyForm::zero(m));
                r.record((!ok).then(|| Failure {
                    inputs: inputs(),
                    lhs: j.render(),
                    rhs: String::from("an exact form"),
                }));
            }
            self.checks.push(r);
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, m: usize) -> PolyForm {
    let mut out = PolyForm::zero(m);
    for _ in 0..rng.gen_range(1..=2) {
        let exps: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=2)).collect();
        let idx: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.4)).collect();
        out = out.plus(&PolyForm::term(m, coef(rng), &exps, &idx));
    }
    out
}
