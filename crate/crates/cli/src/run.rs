//! Command dispatch. [`run`] returns the exit status together with the text
//! written to stdout and stderr, so tests can drive the binary in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use ncpoisson::ainf::AInfCoalgebra;
use ncpoisson::cobar::{homology_dim, Cobar, Complex, Cutoffs};
use ncpoisson::hkr::{
    bv_delta, contraction_bracket, de_rham_d, exact_primitive, hkr_bracket, jacobiator, psi, psi_inverse,
    schouten_bracket, volume_form,
};
use ncpoisson::poisson::DoublePoisson;
use ncpoisson::tensor::{render_lin, render_poly};
use serde_json::json;

use crate::error::{CliError, Result};
use crate::json::{coalgebra_to_json, parse_coalgebra_json};
use crate::parse::{parse_form, parse_vector, parse_words};
use crate::registry::{build_coalgebra, BUILTINS};
use crate::suites::{run_suite, SuiteConfig, SuiteReport, SUITES};

#[derive(Debug, Parser)]
#[command(name = "ncpoisson", version, about = "Double Poisson brackets, cyclic homology and HKR brackets over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Coalgebra as `name:params` or `json:PATH`.
    #[arg(long, global = true)]
    pub coalgebra: Option<String>,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_weight: u32,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: i64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Describe a coalgebra and certify its structure.
    Example {
        /// List the built-in families.
        #[arg(long)]
        list: bool,
        /// Read the coalgebra from a JSON file instead.
        #[arg(long)]
        input: Option<String>,
    },
    /// Evaluate the double bracket or the Loday bracket of two cobar elements.
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = BracketKind::Double)]
        kind: BracketKind,
    },
    /// Homology dimensions by (degree, weight) block.
    Homology {
        /// cobar_natural, oneform_natural, hochschild, cyclic or all.
        #[arg(long, default_value = "all")]
        complex: String,
    },
    /// Run verification suites; exits 1 on any failure.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Longest random word.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Operations on polynomial forms and polyvector fields.
    Hkr {
        #[arg(long, value_enum)]
        op: HkrOp,
        /// Number of variables.
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BracketKind {
    Double,
    Loday,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HkrOp {
    /// de Rham differential of a form.
    D,
    /// Polyvector of a form under contraction with the volume form.
    PsiInverse,
    /// Form of a polyvector.
    Psi,
    /// BV operator on a polyvector.
    Bv,
    /// Bracket of two forms.
    Bracket,
    /// Contraction formula for the bracket of two forms.
    Contraction,
    /// Bracket of two polyvectors.
    Schouten,
    /// Jacobiator of three forms, with an exactness certificate.
    Jacobiator,
    /// A primitive of an exact form.
    Primitive,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    match &cli.verb {
        Verb::Example { list, input } => example(cli, *list, input.as_deref()).map(|s| (0, s)),
        Verb::Bracket { lhs, rhs, kind } => bracket(cli, lhs, rhs, *kind).map(|s| (0, s)),
        Verb::Homology { complex } => homology(cli, complex).map(|s| (0, s)),
        Verb::Verify { suite, max_len } => verify(cli, suite, *max_len),
        Verb::Hkr { op, vars, a, b, c } => hkr(cli, *op, *vars, a, b.as_deref(), c.as_deref()).map(|s| (0, s)),
    }
}

fn coalgebra(cli: &Cli) -> Result<(String, AInfCoalgebra)> {
    let spec = cli.coalgebra.as_deref().ok_or_else(|| CliError::Usage(String::from("--coalgebra is required")))?;
    Ok((spec.to_string(), build_coalgebra(spec)?))
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn example(cli: &Cli, list: bool, input: Option<&str>) -> Result<String> {
    if list {
        return Ok(match cli.format {
            Format::Json => to_json(&BUILTINS.iter().map(|(n, d)| json!({"name": n, "about": d})).collect::<Vec<_>>()),
            Format::Text => BUILTINS.iter().map(|(n, d)| format!("{n:<12} {d}\n")).collect(),
        });
    }
    let (label, c) = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
            (path.to_string(), parse_coalgebra_json(&text)?)
        }
        None => coalgebra(cli)?,
    };
    if cli.format == Format::Json {
        return Ok(to_json(&coalgebra_to_json(&c)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} ({label})", c.name);
    let arities: Vec<usize> = c.arities().collect();
    let _ = writeln!(out, "  dimension {}, coproduct arities {arities:?}", c.dim());
    for g in &c.basis {
        let _ = writeln!(out, "  {:<12} degree {:>2}  weight {}", g.id, g.degree, g.weight);
    }
    let ainf = c.check_ainf_coalgebra();
    let _ = writeln!(out, "  A-infinity relations: {}", if ainf.passed() { "ok" } else { "FAILED" });
    match c.check_cyclic_pairing() {
        Ok(rep) => {
            let _ = writeln!(
                out,
                "  cyclic pairing of degree {}: {}",
                c.pairing.as_ref().map_or(0, |p| p.degree),
                if rep.passed() { "ok" } else { "FAILED" }
            );
        }
        Err(e) => {
            let _ = writeln!(out, "  cyclic pairing: {e}");
        }
    }
    Ok(out)
}

fn bracket(cli: &Cli, lhs: &str, rhs: &str, kind: BracketKind) -> Result<String> {
    let (spec, c) = coalgebra(cli)?;
    let dp =
        DoublePoisson::new(Cobar::with_counit(&c)).map_err(|e| CliError::engine(format!("bracket on {spec}"), e))?;
    let alpha = dp.cobar.alphabet.clone();
    let (r, q) = (parse_words(lhs, &alpha)?, parse_words(rhs, &alpha)?);
    let value = match kind {
        BracketKind::Double => render_lin(&dp.double_bracket(&r, &q), |(u, v)| {
            format!("{} ⊗ {}", alpha.render_word(u), alpha.render_word(v))
        }),
        BracketKind::Loday => render_poly(&alpha, &dp.loday_bracket(&r, &q)),
    };
    Ok(match cli.format {
        Format::Json => to_json(&json!({
            "coalgebra": spec,
            "kind": format!("{kind:?}").to_lowercase(),
            "lhs": render_poly(&alpha, &r),
            "rhs": render_poly(&alpha, &q),
            "value": value,
        })),
        Format::Text => format!("{value}\n"),
    })
}

fn homology(cli: &Cli, which: &str) -> Result<String> {
    let (spec, c) = coalgebra(cli)?;
    let complexes: Vec<Complex> = if which == "all" {
        Complex::ALL.to_vec()
    } else {
        vec![Complex::from_name(which).ok_or_else(|| CliError::Usage(format!("unknown complex `{which}`")))?]
    };
    let cut = Cutoffs::new(cli.max_degree, cli.max_weight);
    let cb = Cobar::new(&c);
    let degrees: Vec<i64> = (0..cli.max_degree).collect();
    let mut tables = Vec::new();
    for cx in complexes {
        let mut blocks = Vec::new();
        for w in 0..=cli.max_weight {
            for &d in &degrees {
                let dim = homology_dim(&cb, cx, d, w, cut)
                    .map_err(|e| CliError::engine(format!("{} block ({d}, {w})", cx.name()), e))?;
                blocks.push((d, w, dim));
            }
        }
        tables.push((cx, blocks));
    }
    if cli.format == Format::Json {
        let v: Vec<_> = tables
            .iter()
            .map(|(cx, blocks)| {
                json!({
                    "coalgebra": spec,
                    "complex": cx.name(),
                    "blocks": blocks.iter().map(|(d, w, n)| json!({"degree": d, "weight": w, "dim": n})).collect::<Vec<_>>(),
                })
            })
            .collect();
        return Ok(to_json(&if v.len() == 1 { v[0].clone() } else { json!(v) }));
    }
    let mut out = String::new();
    for (cx, blocks) in &tables {
        let _ = writeln!(out, "{} homology of {spec}", cx.name());
        let _ = write!(out, "{:>8}", "weight");
        for d in &degrees {
            let _ = write!(out, "{:>6}", format!("d={d}"));
        }
        out.push('\n');
        for w in 0..=cli.max_weight {
            let _ = write!(out, "{w:>8}");
            for (_, _, n) in blocks.iter().filter(|b| b.1 == w) {
                let _ = write!(out, "{n:>6}");
            }
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn render_report(r: &SuiteReport) -> String {
    let mut out = String::new();
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "suite {}: {verdict} ({} ms)", r.suite, r.millis);
    for n in &r.notes {
        let _ = writeln!(out, "  {n}");
    }
    for c in &r.checks {
        let tag = if c.passed() { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "  {tag} {} on {} ({} trials, {} failed)", c.identity, c.example, c.trials, c.failed);
        if let Some(f) = c.failures.first() {
            let _ = writeln!(out, "       inputs: {}", f.inputs.join(", "));
            let _ = writeln!(out, "       lhs:    {}", f.lhs);
            let _ = writeln!(out, "       rhs:    {}", f.rhs);
        }
    }
    out
}

fn verify(cli: &Cli, suite: &str, max_len: Option<usize>) -> Result<(i32, String)> {
    let names: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.0).collect() } else { vec![suite] };
    if let Some(bad) = names.iter().find(|n| !SUITES.iter().any(|s| s.0 == **n)) {
        return Err(CliError::Usage(format!("unknown suite `{bad}`")));
    }
    let cfg = SuiteConfig {
        seed: cli.seed,
        trials: cli.trials,
        max_len,
        examples: cli.coalgebra.clone().map(|c| vec![c]),
        cutoffs: Cutoffs::new(cli.max_degree, cli.max_weight),
    };
    let mut reports = Vec::new();
    for n in names {
        reports.push(run_suite(n, &cfg)?);
    }
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
    let out = match cli.format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&reports),
        Format::Text => reports.iter().map(render_report).collect(),
    };
    Ok((code, out))
}

fn hkr(cli: &Cli, op: HkrOp, m: usize, a: &str, b: Option<&str>, c: Option<&str>) -> Result<String> {
    let usage = |flag: &str| CliError::Usage(format!("--op {op:?} needs --{flag}"));
    let nb = || b.ok_or_else(|| usage("b"));
    let nc = || c.ok_or_else(|| usage("c"));
    let eng = |e| CliError::engine(format!("hkr {op:?}"), e);
    let mut extra = Vec::new();
    let result = match op {
        HkrOp::D => de_rham_d(&parse_form(a, m)?).render(),
        HkrOp::PsiInverse => psi_inverse(&parse_form(a, m)?).render(),
        HkrOp::Psi => psi(&parse_vector(a, m)?).render(),
        HkrOp::Bv => bv_delta(&parse_vector(a, m)?).render(),
        HkrOp::Bracket => hkr_bracket(&parse_form(a, m)?, &parse_form(nb()?, m)?).map_err(eng)?.render(),
        HkrOp::Contraction => {
            let vol = volume_form(m);
            contraction_bracket(&parse_form(a, m)?, &parse_form(nb()?, m)?, Some(&vol)).map_err(eng)?.render()
        }
        HkrOp::Schouten => schouten_bracket(&parse_vector(a, m)?, &parse_vector(nb()?, m)?).map_err(eng)?.render(),
        HkrOp::Jacobiator => {
            let j = jacobiator(&parse_form(a, m)?, &parse_form(nb()?, m)?, &parse_form(nc()?, m)?).map_err(eng)?;
            match exact_primitive(&j) {
                Some(p) => extra.push(("primitive", p.render())),
                None => extra.push(("primitive", String::from("none: not exact"))),
            }
            j.render()
        }
        HkrOp::Primitive => match exact_primitive(&parse_form(a, m)?) {
            Some(p) => p.render(),
            None => String::from("not exact"),
        },
    };
    Ok(match cli.format {
        Format::Json => {
            let mut v = json!({"op": format!("{op:?}").to_lowercase(), "vars": m, "result": result});
            for (k, s) in extra {
                v[k] = json!(s);
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = format!("{result}\n");
            for (k, x) in extra {
                let _ = writeln!(s, "{k}: {x}");
            }
            s
        }
    })
}
