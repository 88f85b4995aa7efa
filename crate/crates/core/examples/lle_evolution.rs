//! Evolves the coupled two-ring Lugiato-Lefever system from a noisy flat state
//! and prints the energy and comb spectrum along the way.
//!
//! ```bash
//! cargo run --release --example lle_evolution
//! ```

use kcomb::comb::{power_spectrum, SpectrumSource};
use kcomb::dimer::*;
use num_complex::Complex64;

fn main() {
    let grid = RingGrid::new(64).unwrap();
    let params = LLEParams::new(1.0, 1.6, 0.1).with_coupling(CouplingProfile::Cosine { a0: 0.0, a1: 0.1, scale: 1 });

    println!("flat intracavity powers at detuning 1.0, pump power {:.2}:", params.power());
    for rho in homogeneous_steady_states(params.detuning, params.power()) {
        println!("  rho = {rho:.6}  residual {:.1e}", steady_state_residual(params.detuning, params.power(), rho));
    }

    let flat = flat_steady_field(&grid, &params);
    let start = DimerField::from_fn(&grid, |th| {
        let kick = Complex64::new(1e-3 * (5.0 * th).cos(), 0.0);
        (flat.a[0] + kick, kick)
    });
    let evolution = EvolutionConfig::new(2e-3, 40_000, 4_000);
    let traj = evolve(&start, &params, &evolution).unwrap();
    for (t, s) in traj.times.iter().zip(&traj.snapshots) {
        let [ra, rb] = s.rms();
        println!("t = {t:>5.1}  energy {:>10.4}  rms |A| {ra:.4}  rms |B| {rb:.4}", s.energy());
    }
    let stability = classify_stability(&traj, &StabilityConfig::default());
    println!("classified as {}", stability.label());

    let spec = power_spectrum(traj.last(), SpectrumSource::Sum);
    println!("strongest modes:");
    let mut modes: Vec<(i64, f64)> = grid.modes().map(|k| (k, spec.at(k))).collect();
    modes.sort_by(|a, b| b.1.total_cmp(&a.1));
    for (k, p) in modes.iter().take(6) {
        println!("  k = {k:>3}  P = {p:.4e}");
    }
}
