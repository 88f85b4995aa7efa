//! Stability map over (detuning, coupling modulus) and a bisected pump
//! threshold for comb formation.
//!
//! ```bash
//! cargo run --release --example arnold_tongues
//! ```

use kcomb::comb::*;
use kcomb::dimer::*;

fn main() {
    let grid = RingGrid::new(32).unwrap();
    let config = SimConfig::new(grid, EvolutionConfig::new(2e-3, 20_000, 1_000));
    let base = LLEParams::new(0.0, 1.5, 0.1).with_coupling(CouplingProfile::Cosine { a0: 0.0, a1: 0.1, scale: 1 });

    let detunings = [-0.5, 0.5, 1.5];
    let moduli = [0.0, 0.5, 1.0];
    let map = arnold_tongue_scan(&detunings, &moduli, &base, &config).unwrap();
    print!("{:>9}", "det \\ a");
    for m in &moduli {
        print!("{m:>11}");
    }
    println!();
    for (i, d) in detunings.iter().enumerate() {
        print!("{d:>9}");
        for j in 0..moduli.len() {
            print!("{:>11}", map.get(i, j).label());
        }
        println!();
    }

    let fine = SimConfig::new(RingGrid::new(64).unwrap(), EvolutionConfig::new(2e-3, 60_000, 1_500));
    let t = bisect_threshold(2.0, 4.0, 6, |p| {
        let mut cell = base.clone();
        cell.pump_amplitude = p.sqrt();
        Ok(is_stable_localized(&run_cell(&cell, &fine)?, &fine))
    })
    .unwrap();
    println!("\nthreshold at detuning 0: {} p* = {:?} (bracket {:.4})", t.status.label(), t.p_star, t.bracket_width);
}
