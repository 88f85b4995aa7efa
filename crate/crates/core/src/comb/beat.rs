use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::CombError;
use crate::dimer::{evolve_with, DimerField, EvolutionConfig, LLEParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Window {
    #[default]
    Hann,
    Rectangular,
}

impl Window {
    fn weights(self, n: usize) -> Vec<f64> {
        match self {
            Window::Rectangular => vec![1.0; n],
            // Periodic Hann.
            Window::Hann => (0..n).map(|j| 0.5 - 0.5 * (2.0 * PI * j as f64 / n as f64).cos()).collect(),
        }
    }
}

/// One-sided periodogram of a real series.
#[derive(Debug, Clone, PartialEq)]
pub struct BeatNote {
    /// `0, df, .., N/2 df` with `df = 1 / (N dt)`.
    pub freqs: Vec<f64>,
    pub psd: Vec<f64>,
    pub peak_frequency: f64,
    /// Full width at half maximum of the dominant line, linear
    /// interpolation between bins.
    pub fwhm: f64,
    /// `1 / (N dt)`.
    pub resolution: f64,
    /// Window-weighted mean square of the detrended series; equals
    /// `sum(psd) * df`.
    pub time_domain_power: f64,
}

pub const MIN_SAMPLES: usize = 256;

/// PSD and linewidth of the strongest line.
///
/// The mean is removed first. With weights `w_j`, the PSD is
/// `|X_k|^2 dt / sum w_j^2` (doubled off DC and Nyquist), so it integrates
/// to `sum (w_j x_j)^2 / sum w_j^2`, the plain mean square when the window
/// is rectangular.
pub fn beat_note_psd(samples: &[f64], dt: f64, window: Window) -> Result<BeatNote, CombError> {
    let n = samples.len();
    if n < MIN_SAMPLES {
        return Err(CombError::TooFewSamples(n));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(CombError::InvalidConfig(format!("dt must be positive, got {dt}")));
    }
    let mean = samples.iter().sum::<f64>() / n as f64;
    let scale = samples.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let detrended: Vec<f64> = samples.iter().map(|x| x - mean).collect();
    if detrended.iter().all(|x| x.abs() <= 1e-12 * scale) {
        return Err(CombError::NoLine);
    }
    let w = window.weights(n);
    let w2: f64 = w.iter().map(|v| v * v).sum();
    let mut buf: Vec<Complex64> = detrended.iter().zip(&w).map(|(x, wj)| Complex64::new(x * wj, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let df = 1.0 / (n as f64 * dt);
    let psd: Vec<f64> = (0..=n / 2)
        .map(|k| {
            let one_sided = if k == 0 || 2 * k == n { 1.0 } else { 2.0 };
            one_sided * buf[k].norm_sqr() * dt / w2
        })
        .collect();
    let freqs: Vec<f64> = (0..=n / 2).map(|k| k as f64 * df).collect();
    let time_domain_power = detrended.iter().zip(&w).map(|(x, wj)| (x * wj).powi(2)).sum::<f64>() / w2;

    let peak = (1..psd.len()).max_by(|&a, &b| psd[a].total_cmp(&psd[b]).then(b.cmp(&a))).unwrap();
    let half = psd[peak] / 2.0;
    let cross = |from: usize, step: isize| -> f64 {
        let mut i = from as isize;
        loop {
            let next = i + step;
            if next < 0 || next as usize >= psd.len() {
                return i as f64;
            }
            let (pi, pn) = (psd[i as usize], psd[next as usize]);
            if pn < half {
                return i as f64 + step as f64 * (pi - half) / (pi - pn);
            }
            i = next;
        }
    };
    let fwhm = (cross(peak, 1) - cross(peak, -1)) * df;
    Ok(BeatNote { freqs, psd, peak_frequency: peak as f64 * df, fwhm, resolution: df, time_domain_power })
}

/// Settings for sampling a beat signal from a simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeatConfig {
    pub samples: usize,
    pub sample_every: u64,
    /// Carrier standing in for the repetition rate, in units of `1/t`.
    pub carrier: f64,
    #[serde(default)]
    pub window: Window,
}

/// Fourier coefficient `q` of the intensity `|A|^2`.
fn intensity_harmonic(a: &[Complex64], q: usize) -> Complex64 {
    let m = a.len();
    a.iter()
        .enumerate()
        .map(|(j, z)| Complex64::from_polar(z.norm_sqr(), -2.0 * PI * (q * j) as f64 / m as f64))
        .sum::<Complex64>()
        / m as f64
}

/// The beat signal `Re[I_q(t) exp(i 2 pi carrier t)]` after the warm-up
/// run, where `I_q` is the strongest nonzero harmonic of `|A|^2` in the
/// warmed-up field, and the harmonic order `q` chosen.
pub fn beat_signal(
    start: &DimerField,
    params: &LLEParams,
    evolution: &EvolutionConfig,
    beat: &BeatConfig,
) -> Result<(Vec<f64>, usize), CombError> {
    let m = start.len();
    let q = (1..m / 2)
        .max_by(|&a, &b| intensity_harmonic(&start.a, a).norm().total_cmp(&intensity_harmonic(&start.a, b).norm()).then(b.cmp(&a)))
        .unwrap_or(1);
    let dt_sample = evolution.dt * beat.sample_every as f64;
    let mut series = Vec::with_capacity(beat.samples);
    let cfg = EvolutionConfig { steps: beat.samples as u64 * beat.sample_every, record_every: beat.samples as u64 * beat.sample_every, ..*evolution };
    let traj = evolve_with(start, params, &cfg, |step, field| {
        if step % beat.sample_every == 0 {
            let t = series.len() as f64 * dt_sample;
            series.push((intensity_harmonic(&field.a, q) * Complex64::from_polar(1.0, 2.0 * PI * beat.carrier * t)).re);
        }
    })?;
    if traj.is_blowup() {
        return Err(CombError::ReferenceBlowup);
    }
    Ok((series, q))
}
