//! Milnor and Tjurina numbers of catalog germs, the X9 modulus sweep and a
//! germ where the two numbers differ.
//!
//! ```bash
//! cargo run --example singularity_invariants
//! ```

use kcomb::groebner::Limits;
use kcomb::poly::{format_rational, parse_polynomial, parse_rational};
use kcomb::singularity::{analyze, modulus_sweep, normal_form, Germ, LocalDimension, NormalFormSpec, SweepStatus};

fn show(label: &str, g: &Germ) {
    let r = analyze(g, &Limits::default()).unwrap();
    let fmt = |d: LocalDimension| d.finite().map_or("inf".to_string(), |n| n.to_string());
    let weights = r
        .quasihomogeneous
        .as_ref()
        .map(|q| q.weights.iter().map(format_rational).collect::<Vec<_>>().join(", "))
        .unwrap_or_else(|| "-".into());
    println!("{label:<12} f = {:<24} mu = {:>3}  tau = {:>3}  weights ({weights})", g.polynomial().to_string(), fmt(r.milnor), fmt(r.tjurina));
}

fn main() {
    let mut specs: Vec<NormalFormSpec> = (1..=5).map(|k| NormalFormSpec::A { k }).collect();
    specs.extend([NormalFormSpec::D { k: 5 }, NormalFormSpec::E6, NormalFormSpec::E7, NormalFormSpec::E8]);
    specs.push(NormalFormSpec::X9 { modulus: parse_rational("1/3").unwrap() });
    for spec in &specs {
        show(&spec.to_string(), &normal_form(spec).unwrap());
    }

    let f = parse_polynomial("x^5 + y^5 + x^2*y^2", &["x", "y"]).unwrap();
    show("T(5,5)", &Germ::new(f, "T(5,5)").unwrap());

    println!("\nX9 modulus sweep:");
    let values: Vec<_> = ["-3", "-2", "-1", "0", "1", "2", "5/2"].iter().map(|s| parse_rational(s).unwrap()).collect();
    for row in modulus_sweep(&values, &Limits::default()) {
        let text = match row.status {
            SweepStatus::Ok { milnor, tjurina, moduli_gap } => format!("mu={milnor} tau={tjurina} gap={moduli_gap}"),
            other => other.label().to_string(),
        };
        println!("  a = {:>4}: {text}", format_rational(&row.modulus));
    }
}
