//! Two coupled Lugiato-Lefever fields on a ring, in normalized units.
//!
//! ```text
//! dA/dt = -(1 + i D_A) A + i s |A|^2 A + i (d2/2) A_thth + i K[B] + F
//! dB/dt = -(1 + i D_B) B + i s |B|^2 B + i (d2/2) B_thth + i K[A] (+ F)
//! ```
//!
//! `K` multiplies mode `k` by the real coupling `a(k)`, `s` is the Kerr sign
//! and `D_A`, `D_B` are the detuning times the per-field factors (both 1
//! unless disorder is applied). The pump `F` drives A only unless
//! [`PumpMode::Symmetric`] is chosen. The lattice of dimers is treated in
//! the Bloch picture: one dimer, with the momentum dependence carried by
//! `a(k)`.

mod coupling;
mod disorder;
mod export;
mod grid;
mod integrator;
mod params;
mod stability;
mod steady;

pub use coupling::CouplingProfile;
pub use disorder::{apply_disorder, derive_seed, keyed_uniform, DisorderSpec, DisorderTarget, Stream};
pub use export::{fourier_coefficients, read_trajectory_binary, write_trajectory_binary, write_trajectory_csv};
pub use grid::RingGrid;
pub use integrator::{evolve, evolve_with, EvolutionConfig, Integrator, Trajectory};
pub use params::{DimerField, KerrSign, LLEParams, PumpMode, Terms};
pub use stability::{classify_stability, Stability, StabilityConfig};
pub use steady::{homogeneous_steady_states, steady_state_residual};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LleError {
    #[error("mode count must be a power of two >= 16, got {0}")]
    InvalidGrid(usize),
    #[error("coupling table has {found} values, grid has {expected} modes")]
    TableLength { expected: usize, found: usize },
    #[error("fields A and B have lengths {a} and {b}")]
    FieldLength { a: usize, b: usize },
    #[error("non-finite {0}")]
    NonFinite(&'static str),
    #[error("pump amplitude must be >= 0, got {0}")]
    NegativePump(f64),
    #[error("{0}")]
    InvalidConfig(String),
}

/// The equations the integrator solves, as plain text.
pub fn governing_model() -> &'static str {
    "dA/dt = -(1 + i*detuning_A)*A + i*kerr_sign*|A|^2*A + i*(d2/2)*d^2A/dtheta^2 + i*K[B] + pump_amplitude\n\
     dB/dt = -(1 + i*detuning_B)*B + i*kerr_sign*|B|^2*B + i*(d2/2)*d^2B/dtheta^2 + i*K[A] (+ pump_amplitude if symmetric)\n\
     K: Fourier multiplier with real symbol a(k); detuning_X = detuning * detuning_factor_X\n"
}

/// A flat field at the lowest homogeneous steady state of the uncoupled
/// resonator on A, with B empty.
pub fn flat_steady_field(grid: &RingGrid, params: &LLEParams) -> DimerField {
    use num_complex::Complex64;
    let rho = homogeneous_steady_states(params.detuning, params.power())[0];
    // A (1 + i (detuning - rho)) = F
    let a = Complex64::new(params.pump_amplitude, 0.0) / Complex64::new(1.0, params.detuning - rho);
    DimerField::flat(grid, a, Complex64::new(0.0, 0.0))
}
