use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{EXIT_DEGENERATE, EXIT_LIMIT, EXIT_OK, EXIT_USAGE};
use crate::groebner::{LimitKind, Limits};
use crate::poly::{format_rational, parse_polynomial, parse_rational, MonomialOrder, Rational};
use crate::singularity::{
    modulus_sweep, normal_form, x9_germ, Analyzer, Germ, InvariantReport, LocalDimension, NormalFormSpec, SingularityError, SweepStatus,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    X9,
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    #[arg(long, default_value_t = Limits::default().max_polynomial_degree)]
    pub max_degree: u32,
    #[arg(long, default_value_t = Limits::default().max_pair_count)]
    pub max_pairs: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_polynomial_degree: self.max_degree, max_pair_count: self.max_pairs }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InvariantsArgs {
    /// Catalog normal form.
    #[arg(long, value_enum, ignore_case = true, conflicts_with = "poly", required_unless_present = "poly")]
    pub family: Option<Family>,
    /// X9 modulus `a` as "num/den".
    #[arg(long, allow_hyphen_values = true)]
    pub modulus: Option<String>,
    /// Index of A_k / D_k.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Polynomial text, e.g. "x^5 + y^5 + x^2*y^2".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Comma-separated variables (default: identifiers in the text, sorted).
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "degrevlex")]
    pub order: OrderArg,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Comma-separated moduli, e.g. "0,1/2,3".
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "range")]
    pub values: Option<Vec<String>>,
    /// Inclusive range "start..end", stepped by --step.
    #[arg(long, allow_hyphen_values = true, requires = "step")]
    pub range: Option<String>,
    #[arg(long)]
    pub step: Option<String>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub limits: LimitArgs,
}

fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i + c.len_utf8();
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let name = text[i..end].to_string();
            if !out.contains(&name) {
                out.push(name);
            }
        } else if c.is_ascii_digit() {
            while chars.peek().is_some_and(|&(_, d)| d.is_ascii_digit()) {
                chars.next();
            }
        }
    }
    out.sort();
    out
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("--{name}: {text:?} is not a rational \"num/den\""))
}

enum GermSource {
    Germ(Germ),
    Failed(Value, String),
}

fn build_germ(args: &InvariantsArgs) -> GermSource {
    let fail = |msg: String| GermSource::Failed(json!({ "status": "UsageError", "message": msg }), msg);
    if let Some(text) = &args.poly {
        let vars = args.vars.clone().unwrap_or_else(|| identifiers(text));
        let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        return match parse_polynomial(text, &var_refs) {
            Ok(f) => match Germ::new(f, text.clone()) {
                Ok(g) => GermSource::Germ(g),
                Err(e) => fail(e.to_string()),
            },
            Err(e) => {
                let msg = e.to_string();
                GermSource::Failed(json!({ "status": "ParseError", "position": e.position(), "message": msg }), msg)
            }
        };
    }
    let need = |v: Option<u32>, name: &str| v.ok_or(format!("--{name} is required for this family"));
    let spec = match args.family.expect("clap requires --family or --poly") {
        Family::A => need(args.k, "k").map(|k| NormalFormSpec::A { k }),
        Family::D => need(args.k, "k").map(|k| NormalFormSpec::D { k }),
        Family::E6 => Ok(NormalFormSpec::E6),
        Family::E7 => Ok(NormalFormSpec::E7),
        Family::E8 => Ok(NormalFormSpec::E8),
        Family::X9 => {
            // a = ±2 is allowed through so that it is reported as NonIsolated.
            return match rational_arg("modulus", args.modulus.as_deref().unwrap_or("0")) {
                Ok(a) => GermSource::Germ(x9_germ(&a)),
                Err(e) => fail(e),
            };
        }
        Family::T => need(args.p, "p").and_then(|p| Ok(NormalFormSpec::T { p, q: need(args.q, "q")? })),
    };
    match spec.and_then(|s| normal_form(&s).map_err(|e| e.to_string())) {
        Ok(g) => GermSource::Germ(g),
        Err(e) => fail(e),
    }
}

fn limit_json(k: &LimitKind) -> Value {
    match k {
        LimitKind::Degree(d) => json!({ "kind": "degree", "value": d }),
        LimitKind::PairCount(n) => json!({ "kind": "pair_count", "value": n }),
    }
}

fn report_json(g: &Germ, r: &InvariantReport) -> (Value, i32) {
    let vars = g.variables();
    let dim = |d: LocalDimension| d.finite().map(Value::from).unwrap_or(Value::Null);
    let qh = r.quasihomogeneous.as_ref().map(|q| {
        let (w, d) = q.integral();
        let num = |b: &num_bigint::BigInt| b.to_i64().map(Value::from).unwrap_or_else(|| Value::from(b.to_string()));
        json!({
            "weights": q.weights.iter().map(format_rational).collect::<Vec<_>>(),
            "integer_weights": w.iter().map(num).collect::<Vec<_>>(),
            "integer_degree": num(&d),
        })
    });
    let isolated = r.moduli_gap.is_some();
    let v = json!({
        "status": if isolated { "ok" } else { "NonIsolated" },
        "germ": g.description(),
        "polynomial": g.polynomial().to_string(),
        "variables": vars,
        "mu": dim(r.milnor),
        "tau": dim(r.tjurina),
        "moduli_gap": r.moduli_gap,
        "quasihomogeneous": qh,
        "standard_monomial_count": r.standard_monomials_mu.len(),
        "standard_monomials": r.standard_monomials_mu.iter().map(|m| m.display_with(vars)).collect::<Vec<_>>(),
    });
    (v, if isolated { EXIT_OK } else { EXIT_DEGENERATE })
}

pub fn cmd_invariants(args: &InvariantsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (value, code) = match build_germ(args) {
        GermSource::Failed(v, msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            (v, EXIT_USAGE)
        }
        GermSource::Germ(g) => {
            let order = match args.order {
                OrderArg::Degrevlex => MonomialOrder::Degrevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let germ = Germ::new(g.polynomial().clone().with_order(order), g.description()).expect("same germ");
            match Analyzer::new(order, args.limits.limits()).report(&germ) {
                Ok(r) => report_json(&germ, &r),
                Err(SingularityError::Groebner(crate::groebner::GroebnerError::LimitExceeded(k))) => {
                    let _ = writeln!(stderr, "error: resource limit exceeded");
                    (json!({ "status": "LimitExceeded", "germ": germ.description(), "limit": limit_json(&k) }), EXIT_LIMIT)
                }
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    (json!({ "status": "Error", "message": e.to_string() }), EXIT_USAGE)
                }
            }
        }
    };
    let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&value).expect("json"));
    code
}

fn sweep_values(args: &SweepArgs) -> Result<Vec<Rational>, String> {
    if let Some(vals) = &args.values {
        return vals.iter().map(|v| rational_arg("values", v)).collect();
    }
    let range = args.range.as_deref().ok_or("give --values or --range with --step")?;
    let (start, end) = range.split_once("..").ok_or_else(|| format!("--range {range:?} is not \"start..end\""))?;
    let (start, end) = (rational_arg("range", start)?, rational_arg("range", end)?);
    let step = rational_arg("step", args.step.as_deref().unwrap_or(""))?;
    if step <= Rational::from_integer(0.into()) {
        return Err("--step must be positive".into());
    }
    let mut out = Vec::new();
    let mut a = start;
    while a <= end {
        out.push(a.clone());
        a += &step;
    }
    Ok(out)
}

pub fn cmd_sweep_modulus(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let values = match sweep_values(args) {
        Ok(v) if !v.is_empty() => v,
        Ok(_) => {
            let _ = writeln!(stderr, "error: empty modulus range");
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let rows = modulus_sweep(&values, &args.limits.limits());
    let mut csv = String::from("a_num,a_den,mu,tau,gap,status\n");
    for row in &rows {
        let (mu, tau, gap) = match &row.status {
            SweepStatus::Ok { milnor, tjurina, moduli_gap } => (milnor.to_string(), tjurina.to_string(), moduli_gap.to_string()),
            _ => Default::default(),
        };
        csv += &format!("{},{},{mu},{tau},{gap},{}\n", row.modulus.numer(), row.modulus.denom(), row.status.label());
    }
    let written = match &args.output {
        Some(path) => std::fs::write(path, &csv).map_err(|e| e.to_string()),
        None => stdout.write_all(csv.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if rows.iter().any(|r| matches!(r.status, SweepStatus::Ok { .. })) {
        EXIT_OK
    } else if rows.iter().any(|r| matches!(r.status, SweepStatus::LimitExceeded(_))) {
        EXIT_LIMIT
    } else {
        EXIT_DEGENERATE
    }
}
