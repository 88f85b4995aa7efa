//! Hann-windowed periodogram of a beat signal: peak, FWHM and the Parseval
//! check, first on a synthetic tone and then on a simulated comb.
//!
//! ```bash
//! cargo run --release --example beat_note
//! ```

use std::f64::consts::PI;

use kcomb::comb::*;
use kcomb::dimer::*;

fn main() {
    let (n, dt) = (2048, 0.01);
    let tone: Vec<f64> = (0..n).map(|j| (2.0 * PI * 7.3 * j as f64 * dt).sin()).collect();
    let note = beat_note_psd(&tone, dt, Window::Hann).unwrap();
    let integral: f64 = note.psd.iter().sum::<f64>() * note.resolution;
    println!("tone at 7.3: peak {:.4}  fwhm {:.4}  resolution {:.4}", note.peak_frequency, note.fwhm, note.resolution);
    println!("integrated psd {integral:.6} vs windowed mean square {:.6}", note.time_domain_power);

    let grid = RingGrid::new(64).unwrap();
    let params = LLEParams::new(0.5, 1.5, 0.1).with_coupling(CouplingProfile::Cosine { a0: 0.0, a1: 0.1, scale: 1 });
    let start = flat_steady_field(&grid, &params);
    let noisy = DimerField::from_fn(&grid, |th| (start.a[0] * (1.0 + 1e-3 * (6.0 * th).cos()), start.b[0]));
    let warmup = evolve(&noisy, &params, &EvolutionConfig::new(2e-3, 30_000, 30_000)).unwrap();
    let beat = BeatConfig { samples: 1024, sample_every: 50, carrier: 1.0, window: Window::Hann };
    let (series, harmonic) = beat_signal(warmup.last(), &params, &EvolutionConfig::new(2e-3, 1, 1), &beat).unwrap();
    let note = beat_note_psd(&series, 2e-3 * 50.0, Window::Hann).unwrap();
    println!("comb beat on harmonic {harmonic}: peak {:.4}  fwhm {:.4}", note.peak_frequency, note.fwhm);
}
