use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::{DimerField, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stability {
    Stable,
    Unstable,
    Blowup,
    Undecided,
}

impl Stability {
    pub fn label(self) -> &'static str {
        match self {
            Stability::Stable => "Stable",
            Stability::Unstable => "Unstable",
            Stability::Blowup => "Blowup",
            Stability::Undecided => "Undecided",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StabilityConfig {
    pub epsilon: f64,
    /// Fraction of the recordings, counted from the end, that is inspected.
    pub trailing_fraction: f64,
    /// Spectra with total power below this are treated as zero.
    pub power_floor: f64,
}

impl Default for StabilityConfig {
    fn default() -> Self {
        StabilityConfig { epsilon: 1e-6, trailing_fraction: 0.5, power_floor: 1e-20 }
    }
}

/// `|FFT(A)_k|^2 / M` followed by the same for B, FFT order.
pub(crate) fn mode_powers(field: &DimerField) -> Vec<f64> {
    let m = field.len();
    let fft = FftPlanner::new().plan_fft_forward(m);
    let mut out = Vec::with_capacity(2 * m);
    for f in [&field.a, &field.b] {
        let mut buf = f.clone();
        fft.process(&mut buf);
        out.extend(buf.iter().map(|z| z.norm_sqr() / m as f64));
    }
    out
}

/// Classifies by the relative L2 change of the mode-power spectrum between
/// consecutive snapshots in the trailing window.
///
/// `Stable` when every change is below `epsilon`; `Unstable` when every
/// change in the second half of the window is at or above it; `Undecided`
/// for mixed windows (still settling) or windows with fewer than two
/// comparisons.
pub fn classify_stability(traj: &Trajectory, config: &StabilityConfig) -> Stability {
    if traj.is_blowup() {
        return Stability::Blowup;
    }
    let n = traj.snapshots.len();
    let window = ((n as f64 * config.trailing_fraction).ceil() as usize).min(n);
    if window < 3 {
        return Stability::Undecided;
    }
    let spectra: Vec<Vec<f64>> = traj.snapshots[n - window..].iter().map(mode_powers).collect();
    let changes: Vec<f64> = spectra
        .windows(2)
        .map(|w| {
            let norm = |s: &[f64]| s.iter().map(|v| v * v).sum::<f64>().sqrt();
            let (p0, p1) = (w[0].iter().sum::<f64>(), w[1].iter().sum::<f64>());
            if p0.max(p1) < config.power_floor {
                return 0.0;
            }
            let diff = w[0].iter().zip(&w[1]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            diff / norm(&w[0]).max(norm(&w[1]))
        })
        .collect();
    if changes.iter().all(|&c| c < config.epsilon) {
        Stability::Stable
    } else if changes[changes.len() / 2..].iter().all(|&c| c >= config.epsilon) {
        Stability::Unstable
    } else {
        Stability::Undecided
    }
}
