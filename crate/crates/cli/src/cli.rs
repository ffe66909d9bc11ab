//! Command dispatch. Everything is computed into strings so the binary and
//! the tests see identical bytes.
//!
//! Exit codes: 0 success, 1 the computation succeeded but the checked
//! property fails (not rigid, not balanced, not divisible), 2 input errors.

use crate::catalog;
use crate::charstr::parse_laurent;
use crate::file::{parse_manifold_file, parse_rational, serialize_manifold};
use clap::{Parser, Subcommand, ValueEnum};
use ellgenus_core::exact::{Constancy, QSeries, RationalFunc, Scalar};
use ellgenus_core::genus::{
    a_hat_series, elliptic_genus, evaluate_genus, l_series, multiplicative_sequence,
};
use ellgenus_core::localization::{
    check_rigidity, equivariant_a_hat, equivariant_elliptic_genus, equivariant_twisted_signature,
    is_two_balanced, lemma2_verify, theorem_status, BalanceReport, RigidityVerdict, S1ManifoldData,
    TheoremStatus,
};
use ellgenus_core::rseries::{expand_r, format_r_series};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write as _;

const DEFAULT_Q_ORDER: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "ellgenus", version, about = "Exact genera, elliptic genus and S1 localization")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Non-equivariant genus from Pontryagin numbers (fixed points as fallback).
    Compute {
        #[arg(long)]
        manifold: String,
        #[arg(long, value_enum)]
        genus: GenusKind,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
    },
    /// Constancy in lambda of each q-coefficient of the equivariant elliptic genus.
    Rigidity {
        #[arg(long)]
        manifold: String,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
    },
    /// Weight-sum parities at the fixed points.
    Balanced {
        #[arg(long)]
        manifold: String,
    },
    /// Symmetry and (1-t)^3-divisibility of a difference of two characters.
    Lemma2 {
        #[arg(long, allow_hyphen_values = true)]
        char_a: String,
        #[arg(long, allow_hyphen_values = true)]
        char_b: String,
    },
    /// Terms R_0..R_N of the bundle series.
    RSeries {
        #[arg(long)]
        order: usize,
    },
    /// Equivariant twisted signature by fixed-point localization.
    Equivariant {
        #[arg(long)]
        manifold: String,
        /// `trivial`, or `R<k>` for a term of the bundle series.
        #[arg(long)]
        bundle: String,
        /// Evaluate at this value of lambda (a rational `a/b`).
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// List built-in manifolds, or print one as a manifold file.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenusKind {
    #[value(name = "a-hat")]
    AHat,
    L,
    Elliptic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn with_code(code: u8, stdout: String) -> Self {
        Self { code, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                CommandOutput::ok(rendered)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(msg) => CommandOutput::input_error(msg),
    }
}

fn load_manifold(source: &str) -> Result<S1ManifoldData, String> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return catalog::builtin(name).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?;
    parse_manifold_file(&text).map_err(|e| format!("{source}: {e}"))
}

fn render(json_mode: bool, code: u8, text: String, value: Value) -> CommandOutput {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("plain data");
        s.push('\n');
        CommandOutput::with_code(code, s)
    } else {
        CommandOutput::with_code(code, text)
    }
}

fn dispatch(cli: &Cli) -> Result<CommandOutput, String> {
    let j = cli.json;
    match &cli.command {
        Command::Compute { manifold, genus, q_order } => {
            compute(j, &load_manifold(manifold)?, *genus, *q_order)
        }
        Command::Rigidity { manifold, q_order } => rigidity(j, &load_manifold(manifold)?, *q_order),
        Command::Balanced { manifold } => Ok(balanced(j, &load_manifold(manifold)?)),
        Command::Lemma2 { char_a, char_b } => lemma2(j, char_a, char_b),
        Command::RSeries { order } => Ok(r_series(j, *order)),
        Command::Equivariant { manifold, bundle, at } => {
            equivariant(j, &load_manifold(manifold)?, bundle, at.as_deref())
        }
        Command::Catalog { name } => catalog_cmd(j, name.as_deref()),
    }
}

fn format_qseries(s: &QSeries<Scalar>) -> String {
    let mut out = String::new();
    for (i, c) in s.coeffs().iter().enumerate() {
        let term = match i {
            0 => c.to_string(),
            1 => format!("{c}*q"),
            _ => format!("{c}*q^{i}"),
        };
        if i > 0 {
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    let _ = write!(out, " + O(q^{})", s.order() + 1);
    out
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(Scalar::to_string).collect()
}

fn compute(j: bool, m: &S1ManifoldData, genus: GenusKind, q_order: usize) -> Result<CommandOutput, String> {
    let mut text = format!("manifold: {}\n", m.name());
    let value = match genus {
        GenusKind::AHat => {
            let eq = equivariant_a_hat(m).map_err(|e| e.to_string())?;
            let eq_text = match eq.constancy() {
                Constancy::Constant(c) => format!("constant {c}"),
                Constancy::NotConstant(_) => "not constant".to_string(),
            };
            let vanishes = eq.vanishes_at_infinity();
            let number = match m.pontryagin() {
                Some(p) if m.dim().is_multiple_of(4) => {
                    let k = multiplicative_sequence(&a_hat_series(m.dim() as usize / 2), m.dim() / 4)
                        .map_err(|e| e.to_string())?;
                    let v = evaluate_genus(p, &k);
                    let _ = writeln!(text, "a-hat polynomial: {k}");
                    let _ = writeln!(text, "a-hat: {v}");
                    Some(v)
                }
                Some(_) => {
                    let _ = writeln!(text, "a-hat: 0");
                    Some(Scalar::from_integer(0.into()))
                }
                None => {
                    let _ = writeln!(text, "a-hat: unavailable (no pontryagin_numbers)");
                    None
                }
            };
            let _ = writeln!(text, "equivariant a-hat: {eq_text}");
            let _ = writeln!(text, "equivariant a-hat -> 0 as mu -> infinity: {vanishes}");
            json!({
                "manifold": m.name(),
                "genus": "a-hat",
                "value": number.map(|v| v.to_string()),
                "equivariant": eq.to_natural_string(),
                "equivariant_constant": eq.constancy().constant().map(|c| c.to_string()),
                "vanishes_at_infinity": vanishes,
            })
        }
        GenusKind::L => {
            let (v, source) = match m.pontryagin() {
                Some(p) => {
                    let k = multiplicative_sequence(&l_series(m.dim() as usize / 2), m.dim() / 4)
                        .map_err(|e| e.to_string())?;
                    let v = if m.dim().is_multiple_of(4) { evaluate_genus(p, &k) } else { Scalar::from_integer(0.into()) };
                    (v, "pontryagin numbers")
                }
                None => {
                    let sig = equivariant_twisted_signature(m, &ellgenus_core::BundleExpr::trivial())
                        .map_err(|e| e.to_string())?;
                    let v = sig.eval(&Scalar::from_integer(1.into())).map_err(|e| e.to_string())?;
                    (v, "fixed points")
                }
            };
            let _ = writeln!(text, "signature: {v} (from {source})");
            json!({ "manifold": m.name(), "genus": "l", "value": v.to_string(), "source": source })
        }
        GenusKind::Elliptic => {
            let (series, source) = match m.pontryagin() {
                Some(p) => (elliptic_genus(p, q_order), "pontryagin numbers"),
                None => {
                    let eq = equivariant_elliptic_genus(m, q_order).map_err(|e| e.to_string())?;
                    let one = Scalar::from_integer(1.into());
                    let coeffs = eq
                        .coeffs()
                        .iter()
                        .map(|c| c.eval(&one))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| e.to_string())?;
                    (QSeries::new(coeffs, q_order), "fixed points at lambda=1")
                }
            };
            let _ = writeln!(text, "elliptic genus: {} (from {source})", format_qseries(&series));
            json!({
                "manifold": m.name(),
                "genus": "elliptic",
                "q_order": q_order,
                "coefficients": strings(series.coeffs()),
                "source": source,
            })
        }
    };
    Ok(render(j, 0, text, value))
}

fn parities(b: &BalanceReport) -> String {
    let p: Vec<String> = b.parities.iter().map(u8::to_string).collect();
    format!("[{}]", p.join(","))
}

fn balance_line(b: &BalanceReport) -> String {
    format!("balanced: {}, parities {}, primitive: {}", b.balanced, parities(b), b.primitive)
}

fn balance_json(b: &BalanceReport) -> Value {
    json!({
        "balanced": b.balanced,
        "parities": b.parities,
        "weight_gcd": b.weight_gcd,
        "primitive": b.primitive,
    })
}

fn witness_text(v: &RigidityVerdict) -> Option<String> {
    let d = v.first_witness()?;
    let [(x1, v1), (x2, v2)] = d.witness.as_ref()?;
    let var = if d.in_lambda { "lambda" } else { "mu" };
    Some(format!("witness q^{}: value {v1} at {var}={x1}, {v2} at {var}={x2}", d.degree))
}

fn rigidity(j: bool, m: &S1ManifoldData, order: usize) -> Result<CommandOutput, String> {
    let balance = is_two_balanced(m);
    let verdict = check_rigidity(m, order).map_err(|e| e.to_string())?;
    let status = theorem_status(&balance, &verdict);
    let mut text = format!("manifold: {}\n{}\n", m.name(), balance_line(&balance));
    for d in &verdict.degrees {
        match &d.constancy {
            Constancy::Constant(c) => {
                let _ = writeln!(text, "q^{}: constant {c}", d.degree);
            }
            Constancy::NotConstant(r) => {
                let _ = writeln!(text, "q^{}: not constant {}", d.degree, r.to_natural_string());
            }
        }
    }
    let through = verdict.rigid_through.map_or_else(|| "none".to_string(), |k| k.to_string());
    match witness_text(&verdict) {
        Some(w) => {
            let _ = writeln!(text, "rigid_through {through}; {w}");
        }
        None => {
            let _ = writeln!(text, "rigid_through {through}; all coefficients constant");
        }
    }
    let consistent = verdict.consistent_with_pontryagin();
    if verdict.degrees.iter().any(|d| d.cross_check().is_some()) {
        let mismatches: Vec<String> = verdict
            .degrees
            .iter()
            .filter(|d| d.cross_check() == Some(false))
            .map(|d| format!("q^{}", d.degree))
            .collect();
        if mismatches.is_empty() {
            let _ = writeln!(text, "pontryagin cross-check: agrees at lambda=1");
        } else {
            let _ = writeln!(text, "pontryagin cross-check: DISAGREES at {}", mismatches.join(", "));
        }
    }
    let status_text = match status {
        TheoremStatus::Confirmed => "balanced and rigid",
        TheoremStatus::NotApplicable => "not balanced; no rigidity prediction",
        TheoremStatus::Violated => "balanced and effective but NOT rigid",
        TheoremStatus::NonEffective => "balanced only because the action is not effective; not rigid",
    };
    let _ = writeln!(text, "status: {status_text}");
    if !balance.primitive && balance.weight_gcd > 1 {
        let _ = writeln!(text, "warning: weight gcd {} > 1, action is not effective", balance.weight_gcd);
    }
    let code = if verdict.is_rigid() && consistent { 0 } else { 1 };
    let degrees: Vec<Value> = verdict
        .degrees
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "constant": d.constancy.constant().map(|c| c.to_string()),
                "value": d.value.to_natural_string(),
                "witness": d.witness.as_ref().map(|w| w.iter().map(|(x, v)| json!({
                    "at": x.to_string(), "value": v.to_string()
                })).collect::<Vec<_>>()),
                "witness_variable": if d.in_lambda { "lambda" } else { "mu" },
                "at_identity": d.at_identity.as_ref().map(|v| v.to_string()),
                "from_pontryagin": d.from_pontryagin.as_ref().map(|v| v.to_string()),
            })
        })
        .collect();
    let value = json!({
        "manifold": m.name(),
        "balance": balance_json(&balance),
        "q_order": order,
        "degrees": degrees,
        "rigid": verdict.is_rigid(),
        "rigid_through": verdict.rigid_through,
        "consistent_with_pontryagin": consistent,
        "status": format!("{status:?}"),
    });
    Ok(render(j, code, text, value))
}

fn balanced(j: bool, m: &S1ManifoldData) -> CommandOutput {
    let b = is_two_balanced(m);
    let mut text = format!("{}\n", balance_line(&b));
    if !b.primitive && b.weight_gcd > 1 {
        let _ = writeln!(text, "warning: weight gcd {} > 1, action is not effective", b.weight_gcd);
    }
    let mut value = balance_json(&b);
    value["manifold"] = json!(m.name());
    render(j, if b.balanced { 0 } else { 1 }, text, value)
}

fn lemma2(j: bool, a: &str, b: &str) -> Result<CommandOutput, String> {
    let ca = parse_laurent(a).map_err(|e| e.to_string())?;
    let cb = parse_laurent(b).map_err(|e| e.to_string())?;
    let r = lemma2_verify(&ca, &cb).map_err(|e| e.to_string())?;
    let in_t = |p: &ellgenus_core::LaurentPoly| p.halve_exponents().display_in("t").to_string();
    let quotient = r.quotient.as_ref().map(in_t);
    let order = r.one_minus_t_order.map_or_else(|| "infinite (f = 0)".to_string(), |k| k.to_string());
    let mut text = String::new();
    let _ = writeln!(text, "f = {}", in_t(&r.difference));
    let _ = writeln!(text, "symmetric: {}", r.symmetric);
    let _ = writeln!(text, "divisible by (1-t)^3: {}", r.divisible);
    let _ = writeln!(text, "order of (1-t): {order}");
    if let Some(q) = &quotient {
        let _ = writeln!(text, "quotient P(t) = {q}");
    }
    let _ = writeln!(text, "weight sums: {}, {}", r.weight_sum_a, r.weight_sum_b);
    let _ = writeln!(text, "parity_difference: {}", r.parity_difference);
    let value = json!({
        "difference": in_t(&r.difference),
        "symmetric": r.symmetric,
        "divisible": r.divisible,
        "one_minus_t_order": r.one_minus_t_order,
        "quotient": quotient,
        "weight_sum_a": r.weight_sum_a.to_string(),
        "weight_sum_b": r.weight_sum_b.to_string(),
        "parity_difference": r.parity_difference,
    });
    Ok(render(j, if r.symmetric && r.divisible { 0 } else { 1 }, text, value))
}

fn r_series(j: bool, order: usize) -> CommandOutput {
    let rs = expand_r(order);
    let text = format!("{}\n", format_r_series(&rs));
    let value = json!({ "order": order, "terms": rs.iter().map(|r| r.to_string()).collect::<Vec<_>>() });
    render(j, 0, text, value)
}

fn equivariant(j: bool, m: &S1ManifoldData, bundle: &str, at: Option<&str>) -> Result<CommandOutput, String> {
    let index = match bundle {
        "trivial" => 0,
        b => b
            .strip_prefix('R')
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(|| format!("unknown bundle {b:?}; use trivial, R1, R2, ..."))?,
    };
    let w = expand_r(index).pop().expect("at least R0");
    let r: RationalFunc = equivariant_twisted_signature(m, &w).map_err(|e| e.to_string())?;
    let label = if index == 0 { "trivial".to_string() } else { format!("R{index}") };
    let mut text = format!("sign({}, {label})_S1 = {}\n", m.name(), r.to_natural_string());
    let constant = r.constancy().constant().cloned();
    let _ = writeln!(
        text,
        "constant: {}",
        constant.as_ref().map_or_else(|| "no".to_string(), |c| format!("yes, {c}"))
    );
    let mut at_value = None;
    if let Some(at) = at {
        let x = parse_rational(at).ok_or_else(|| format!("--at expects a rational a/b, got {at:?}"))?;
        let v = r.eval_lambda(&x).map_err(|e| format!("cannot evaluate at lambda={x}: {e}"))?;
        let _ = writeln!(text, "value at lambda={x}: {v}");
        at_value = Some((x.to_string(), v.to_string()));
    }
    let value = json!({
        "manifold": m.name(),
        "bundle": label,
        "value": r.to_natural_string(),
        "constant": constant.map(|c| c.to_string()),
        "at": at_value.as_ref().map(|(x, _)| x.clone()),
        "value_at": at_value.map(|(_, v)| v),
    });
    Ok(render(j, 0, text, value))
}

fn catalog_cmd(j: bool, name: Option<&str>) -> Result<CommandOutput, String> {
    match name {
        None => {
            let text: String = catalog::NAMES.iter().map(|n| format!("{n}\n")).collect();
            Ok(render(j, 0, text, json!(catalog::NAMES)))
        }
        Some(n) => {
            let m = catalog::builtin(n).map_err(|e| e.to_string())?;
            Ok(CommandOutput::ok(serialize_manifold(&m)))
        }
    }
}
