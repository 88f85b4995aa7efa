use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{CouplingProfile, LleError, RingGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PumpMode {
    /// Pump drives field A only (single bus waveguide).
    #[default]
    AOnly,
    Symmetric,
}

/// Switches for the loss and Kerr terms; both on in any physical run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Terms {
    pub loss: bool,
    pub kerr: bool,
}

impl Default for Terms {
    fn default() -> Self {
        Terms { loss: true, kerr: true }
    }
}

fn unit_factors() -> [f64; 2] {
    [1.0, 1.0]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LLEParams {
    pub detuning: f64,
    /// Power is `pump_amplitude^2`.
    pub pump_amplitude: f64,
    pub dispersion_d2: f64,
    #[serde(default)]
    pub coupling: CouplingProfile,
    /// `+1` focusing, `-1` defocusing.
    #[serde(default = "KerrSign::focusing")]
    pub kerr_sign: KerrSign,
    #[serde(default)]
    pub pump_mode: PumpMode,
    /// Per-field multipliers on the detuning; disorder acts here.
    #[serde(default = "unit_factors")]
    pub detuning_factors: [f64; 2],
    #[serde(default)]
    pub terms: Terms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub struct KerrSign(i8);

impl KerrSign {
    pub fn focusing() -> Self {
        KerrSign(1)
    }

    pub fn defocusing() -> Self {
        KerrSign(-1)
    }

    pub fn value(self) -> f64 {
        self.0 as f64
    }
}

impl TryFrom<i8> for KerrSign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 | -1 => Ok(KerrSign(v)),
            _ => Err(format!("kerr_sign must be +1 or -1, got {v}")),
        }
    }
}

impl From<KerrSign> for i8 {
    fn from(s: KerrSign) -> i8 {
        s.0
    }
}

impl LLEParams {
    /// Uncoupled, focusing, pump on A, loss and Kerr on.
    pub fn new(detuning: f64, pump_amplitude: f64, dispersion_d2: f64) -> Self {
        LLEParams {
            detuning,
            pump_amplitude,
            dispersion_d2,
            coupling: CouplingProfile::default(),
            kerr_sign: KerrSign::focusing(),
            pump_mode: PumpMode::AOnly,
            detuning_factors: unit_factors(),
            terms: Terms::default(),
        }
    }

    pub fn with_coupling(mut self, coupling: CouplingProfile) -> Self {
        self.coupling = coupling;
        self
    }

    pub fn power(&self) -> f64 {
        self.pump_amplitude * self.pump_amplitude
    }

    /// Detuning seen by field `0` (A) or `1` (B).
    pub fn field_detuning(&self, field: usize) -> f64 {
        self.detuning * self.detuning_factors[field]
    }

    pub fn validate(&self, grid: &RingGrid) -> Result<(), LleError> {
        let scalars = [self.detuning, self.pump_amplitude, self.dispersion_d2, self.detuning_factors[0], self.detuning_factors[1]];
        if scalars.iter().any(|v| !v.is_finite()) {
            return Err(LleError::NonFinite("parameters"));
        }
        if self.pump_amplitude < 0.0 {
            return Err(LleError::NegativePump(self.pump_amplitude));
        }
        self.coupling.validate(grid)
    }
}

/// The two intracavity fields sampled at the grid points `theta_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DimerField {
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
}

impl DimerField {
    pub fn zeros(grid: &RingGrid) -> Self {
        Self::flat(grid, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn flat(grid: &RingGrid, a: Complex64, b: Complex64) -> Self {
        let m = grid.mode_count();
        DimerField { a: vec![a; m], b: vec![b; m] }
    }

    pub fn from_fn(grid: &RingGrid, f: impl Fn(f64) -> (Complex64, Complex64)) -> Self {
        let (a, b) = (0..grid.mode_count()).map(|j| f(grid.theta(j))).unzip();
        DimerField { a, b }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn field(&self, i: usize) -> &[Complex64] {
        if i == 0 {
            &self.a
        } else {
            &self.b
        }
    }

    /// `sum_j |A_j|^2 + |B_j|^2`.
    pub fn energy(&self) -> f64 {
        self.a.iter().chain(&self.b).map(|z| z.norm_sqr()).sum()
    }

    /// Root-mean-square amplitude of each field.
    pub fn rms(&self) -> [f64; 2] {
        let m = self.len() as f64;
        [0, 1].map(|i| (self.field(i).iter().map(|z| z.norm_sqr()).sum::<f64>() / m).sqrt())
    }

    pub fn is_finite(&self) -> bool {
        self.a.iter().chain(&self.b).all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest pointwise distance to `other`, relative to the largest
    /// amplitude of `other`.
    pub fn relative_distance(&self, other: &DimerField) -> f64 {
        let scale = other.a.iter().chain(&other.b).map(|z| z.norm()).fold(0.0, f64::max);
        let diff = self.a.iter().chain(&self.b).zip(other.a.iter().chain(&other.b)).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}
