use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::CombError;
use crate::dimer::{DimerField, RingGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumSource {
    A,
    /// `|A_k|^2 + |B_k|^2`
    #[default]
    Sum,
}

/// Mode powers in ascending order `k = -M/2 .. M/2 - 1`.
///
/// `power[k] = |sum_j A_j e^{-i k theta_j}|^2 / M`, so that
/// `sum_k power[k] = sum_j |A_j|^2 = M * mean(|A|^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub power: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.power.len()
    }

    pub fn is_empty(&self) -> bool {
        self.power.is_empty()
    }

    pub fn mode(&self, index: usize) -> i64 {
        index as i64 - (self.power.len() / 2) as i64
    }

    pub fn at(&self, k: i64) -> f64 {
        self.power[(k + (self.power.len() / 2) as i64) as usize]
    }

    pub fn total(&self) -> f64 {
        self.power.iter().sum()
    }

    /// Share of the power outside `k = 0`.
    pub fn sideband_fraction(&self) -> f64 {
        let total = self.total();
        if total == 0.0 {
            0.0
        } else {
            (total - self.at(0)) / total
        }
    }
}

pub fn power_spectrum(field: &DimerField, source: SpectrumSource) -> Spectrum {
    let m = field.len();
    let grid = RingGrid::new(m).expect("field lives on a valid grid");
    let fft = FftPlanner::new().plan_fft_forward(m);
    let mut total = vec![0.0; m];
    let fields: &[&Vec<_>] = match source {
        SpectrumSource::A => &[&field.a],
        SpectrumSource::Sum => &[&field.a, &field.b],
    };
    for f in fields {
        let mut buf = (*f).clone();
        fft.process(&mut buf);
        for (t, z) in total.iter_mut().zip(&buf) {
            *t += z.norm_sqr() / m as f64;
        }
    }
    Spectrum { power: grid.to_ascending(&total) }
}

/// Bhattacharyya overlap `sum sqrt(p q) / sqrt(sum p * sum q)` in `[0, 1]`.
///
/// Exactly 1 for identical inputs; 0 when only one of them is zero.
pub fn spectral_fidelity(s1: &Spectrum, s2: &Spectrum) -> Result<f64, CombError> {
    if s1.len() != s2.len() {
        return Err(CombError::LengthMismatch(s1.len(), s2.len()));
    }
    let (t1, t2) = (s1.total(), s2.total());
    if t1 == 0.0 && t2 == 0.0 {
        return Err(CombError::ZeroSpectrum);
    }
    if s1 == s2 {
        return Ok(1.0);
    }
    if t1 == 0.0 || t2 == 0.0 {
        return Ok(0.0);
    }
    let overlap: f64 = s1.power.iter().zip(&s2.power).map(|(p, q)| (p * q).sqrt()).sum();
    Ok((overlap / (t1 * t2).sqrt()).clamp(0.0, 1.0))
}
