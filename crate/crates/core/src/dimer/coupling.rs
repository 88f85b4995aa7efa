use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{LleError, RingGrid};

/// Real coupling symbol `a(k)` between the two fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CouplingProfile {
    Constant { a0: f64 },
    /// `a0 + a1 cos(2 pi k scale / M)`
    Cosine { a0: f64, a1: f64, scale: i64 },
    /// One value per mode in ascending order `k = -M/2 .. M/2 - 1`.
    Table { values: Vec<f64> },
}

impl Default for CouplingProfile {
    fn default() -> Self {
        CouplingProfile::Constant { a0: 0.0 }
    }
}

impl CouplingProfile {
    pub fn validate(&self, grid: &RingGrid) -> Result<(), LleError> {
        let finite = match self {
            CouplingProfile::Constant { a0 } => a0.is_finite(),
            CouplingProfile::Cosine { a0, a1, .. } => a0.is_finite() && a1.is_finite(),
            CouplingProfile::Table { values } => {
                if values.len() != grid.mode_count() {
                    return Err(LleError::TableLength { expected: grid.mode_count(), found: values.len() });
                }
                values.iter().all(|v| v.is_finite())
            }
        };
        if finite {
            Ok(())
        } else {
            Err(LleError::NonFinite("coupling"))
        }
    }

    /// Continuous interpolant at real mode number `k`. Tables are
    /// interpolated linearly and wrap around the zone.
    pub fn value_at(&self, k: f64, m: usize) -> f64 {
        match self {
            CouplingProfile::Constant { a0 } => *a0,
            CouplingProfile::Cosine { a0, a1, scale } => a0 + a1 * (2.0 * PI * k * *scale as f64 / m as f64).cos(),
            CouplingProfile::Table { values } => {
                let n = values.len() as f64;
                let x = (k + n / 2.0).rem_euclid(n);
                let i = x.floor() as usize % values.len();
                let frac = x - x.floor();
                let j = (i + 1) % values.len();
                values[i] * (1.0 - frac) + values[j] * frac
            }
        }
    }

    /// `a(k)` for every mode, ascending.
    pub fn values(&self, grid: &RingGrid) -> Vec<f64> {
        grid.modes().map(|k| self.value_at(k as f64, grid.mode_count())).collect()
    }

    /// Same shape with its offset moved to `a`: `a0 := a` for the analytic
    /// kinds, a rigid shift of the mean for tables.
    pub fn with_modulus(&self, a: f64) -> CouplingProfile {
        match self {
            CouplingProfile::Constant { .. } => CouplingProfile::Constant { a0: a },
            CouplingProfile::Cosine { a1, scale, .. } => CouplingProfile::Cosine { a0: a, a1: *a1, scale: *scale },
            CouplingProfile::Table { values } => {
                let mean = values.iter().sum::<f64>() / values.len() as f64;
                CouplingProfile::Table { values: values.iter().map(|v| v - mean + a).collect() }
            }
        }
    }
}
