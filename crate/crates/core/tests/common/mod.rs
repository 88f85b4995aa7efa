//! Test-only oracles that never touch the Groebner code path.
//!
//! Both work by plain sparse Gaussian elimination over the rationals on
//! "multiply every generator by every monomial" matrices.

#![allow(dead_code)]

use std::collections::BTreeMap;

use kcomb::poly::{Monomial, MonomialOrder, Polynomial, Rational};
use num_traits::{One, Zero};

/// Sparse row-echelon form over `Rational`; column 0 is the largest monomial.
struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    fn insert(&mut self, mut row: BTreeMap<usize, Rational>) {
        loop {
            let Some((&col, lead)) = row.iter().next() else { return };
            match self.pivots.get(&col) {
                Some(prow) => {
                    let factor = lead.clone();
                    for (c, v) in prow {
                        let e = row.entry(*c).or_insert_with(Rational::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(col, row);
                    return;
                }
            }
        }
    }
}

/// Every monomial in `nvars` variables of total degree at most `d`,
/// sorted descending under degrevlex.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        if exps.iter().sum::<u32>() <= d {
            out.push(Monomial::new(exps.clone()));
        }
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by(|a, b| MonomialOrder::Degrevlex.cmp(b, a));
                return out;
            }
            exps[i] += 1;
            if exps[i] <= d {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn row_of(p: &Polynomial, shift: &Monomial, index: &BTreeMap<Monomial, usize>, keep_below: Option<u32>) -> BTreeMap<usize, Rational> {
    let mut row = BTreeMap::new();
    for (m, c) in p.terms() {
        let t = m.mul(shift);
        if let Some(n) = keep_below {
            if t.degree() >= n {
                continue;
            }
        }
        row.insert(index[&t], c.clone());
    }
    row
}

/// Dimension of `Q[x]/I` by truncated Macaulay matrices of growing degree.
///
/// Columns are ordered by descending degrevlex, so non-pivot columns are
/// candidate standard monomials. Near the truncation degree `d` some of them
/// are artifacts awaiting a degree fall, and how deep they reach depends on
/// the ideal, so only monomials of degree at most `d/2` are counted. The
/// count is accepted once it has held for three degrees with the window
/// `(d/3, d/2]` empty. Returns `None` if it never settles by `max_degree`
/// (taken as an infinite-dimensional quotient).
pub fn global_dimension_oracle(generators: &[Polynomial], max_degree: u32) -> Option<usize> {
    let gens: Vec<&Polynomial> = generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return None;
    }
    let nvars = generators[0].nvars();
    let s = gens.iter().map(|g| g.total_degree().unwrap()).max().unwrap().max(1);
    let all = monomials_up_to(nvars, max_degree);
    let index: BTreeMap<Monomial, usize> = all.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new();
    let mut history: Vec<usize> = Vec::new();
    for d in 0..=max_degree {
        // Add m*g with deg(m*g) == d exactly (lower ones are already in).
        for g in &gens {
            let gd = g.total_degree().unwrap();
            if gd > d {
                continue;
            }
            for m in all.iter().filter(|m| m.degree() == d - gd) {
                ech.insert(row_of(g, m, &index, None));
            }
        }
        // The constant monomial is the last column; a pivot there means 1 is in I.
        if ech.pivots.contains_key(&(all.len() - 1)) {
            return Some(0);
        }
        let (lo, hi) = (d / 3, d / 2);
        if hi < lo + s {
            continue;
        }
        let non_pivot: Vec<u32> = all
            .iter()
            .enumerate()
            .filter(|(i, m)| m.degree() <= d && !ech.pivots.contains_key(i))
            .map(|(_, m)| m.degree())
            .collect();
        let estimate = non_pivot.iter().filter(|&&e| e <= hi).count();
        let band_empty = !non_pivot.iter().any(|&e| e > lo && e <= hi);
        history.push(estimate);
        let n = history.len();
        if band_empty && n >= 3 && history[n - 3..].iter().all(|&c| c == estimate) {
            return Some(estimate);
        }
    }
    None
}

/// `dim Q[x] / (I + m^n)`: everything of degree `>= n` is zero.
pub fn truncated_dimension(generators: &[Polynomial], n: u32) -> usize {
    let nvars = generators[0].nvars();
    if n == 0 {
        return 0;
    }
    let all = monomials_up_to(nvars, n - 1);
    let index: BTreeMap<Monomial, usize> = all.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        for m in &all {
            let row = row_of(g, m, &index, Some(n));
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    all.len() - ech.pivots.len()
}

/// Local dimension at the origin: `dim Q[x]/(I + m^n)` for growing `n`
/// until two consecutive values agree. `None` if still growing at `max_n`.
pub fn local_dimension_oracle(generators: &[Polynomial], max_n: u32) -> Option<usize> {
    let mut prev = truncated_dimension(generators, 1);
    for n in 2..=max_n {
        let cur = truncated_dimension(generators, n);
        if cur == prev {
            return Some(cur);
        }
        prev = cur;
    }
    None
}

/// First partial derivatives of `f`.
pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    f.variables().iter().map(|v| f.partial_derivative(v).unwrap()).collect()
}

/// Brute-force local Milnor and Tjurina numbers.
pub fn local_mu_tau(f: &Polynomial, max_n: u32) -> (Option<usize>, Option<usize>) {
    let j = jacobian(f);
    let mut jf = j.clone();
    jf.push(f.clone());
    (local_dimension_oracle(&j, max_n), local_dimension_oracle(&jf, max_n))
}

pub fn one() -> Rational {
    Rational::one()
}

/// Deterministic random ideal: up to 3 variables, up to 3 generators of
/// degree at most 3 with small integer coefficients.
pub fn random_ideal(rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Polynomial> {
    use rand::Rng;
    let nvars = rng.gen_range(1..=3usize);
    let names: Vec<String> = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
    let vars: std::sync::Arc<[String]> = names.into_iter().collect();
    // Mostly square or overdetermined systems so finite quotients show up.
    let ngens = if rng.gen_bool(0.75) { rng.gen_range(nvars..=3) } else { rng.gen_range(1..=3usize) };
    let mut out = Vec::new();
    while out.len() < ngens {
        let p = {
            let nterms = rng.gen_range(1..=4usize);
            let terms: Vec<(Monomial, Rational)> = (0..nterms)
                .map(|_| {
                    let deg = if rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=3u32) };
                    let mut e = vec![0u32; nvars];
                    for _ in 0..deg {
                        e[rng.gen_range(0..nvars)] += 1;
                    }
                    let mut c = rng.gen_range(-3i64..=3);
                    if c == 0 {
                        c = 1;
                    }
                    (Monomial::new(e), Rational::from_integer(c.into()))
                })
                .collect();
            Polynomial::from_terms(vars.clone(), MonomialOrder::Degrevlex, terms).unwrap()
        };
        if !p.is_zero() {
            out.push(p);
        }
    }
    out
}

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("kcomb").chain(args.iter().copied());
    let code = kcomb::cli::run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn baseline_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("baselines").join(name)
}

/// Cell-by-cell comparison: numbers within `rel_tol`, everything else exact.
pub fn csv_close(actual: &str, expected: &str, rel_tol: f64) -> Result<(), String> {
    let (a, e): (Vec<&str>, Vec<&str>) = (actual.lines().collect(), expected.lines().collect());
    if a.len() != e.len() {
        return Err(format!("{} rows vs {} expected", a.len(), e.len()));
    }
    for (row, (la, le)) in a.iter().zip(&e).enumerate() {
        let (ca, ce): (Vec<&str>, Vec<&str>) = (la.split(',').collect(), le.split(',').collect());
        if ca.len() != ce.len() {
            return Err(format!("row {row}: column count differs"));
        }
        for (x, y) in ca.iter().zip(&ce) {
            let ok = match (x.parse::<f64>(), y.parse::<f64>()) {
                (Ok(u), Ok(v)) => (u - v).abs() <= rel_tol * v.abs().max(1.0),
                _ => x == y,
            };
            if !ok {
                return Err(format!("row {row}: {x} vs expected {y}"));
            }
        }
    }
    Ok(())
}

pub fn json_close(actual: &serde_json::Value, expected: &serde_json::Value, rel_tol: f64) -> Result<(), String> {
    use serde_json::Value;
    match (actual, expected) {
        (Value::Number(u), Value::Number(v)) => {
            let (u, v) = (u.as_f64().unwrap(), v.as_f64().unwrap());
            if (u - v).abs() <= rel_tol * v.abs().max(1.0) { Ok(()) } else { Err(format!("{u} vs expected {v}")) }
        }
        (Value::Object(a), Value::Object(e)) => {
            for (k, v) in e {
                let got = a.get(k).ok_or_else(|| format!("missing key {k}"))?;
                json_close(got, v, rel_tol).map_err(|m| format!("{k}: {m}"))?;
            }
            Ok(())
        }
        _ if actual == expected => Ok(()),
        _ => Err(format!("{actual} vs expected {expected}")),
    }
}
