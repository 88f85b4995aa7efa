//! Observables and parameter scans on top of [`crate::dimer`]: power
//! spectra and fidelity, comb teeth of a coupling profile, stability maps,
//! pump-threshold surfaces, disorder statistics and beat-note spectra.
//!
//! Scans are parallel maps over independent cells or realizations and
//! always return results in grid order, so outputs do not depend on the
//! number of worker threads.

mod beat;
pub mod csv;
mod disorder;
mod scan;
mod spectrum;
mod teeth;

pub use beat::{beat_note_psd, beat_signal, BeatConfig, BeatNote, Window, MIN_SAMPLES};
pub use disorder::{
    disorder_fidelity_curve, pinning_from_spectra, pinning_report, FidelityCurve, FidelityPoint, PinningReport, ToothPinning,
    DEFAULT_TOOTH_THRESHOLD,
};
pub use scan::{
    arnold_tongue_scan, bisect_threshold, initial_condition, is_stable_localized, power_threshold_scan, run_cell, CellRun, EPSurface,
    Grid2, SimConfig, StabilityMap, Threshold, ThresholdStatus, MAX_BISECTIONS,
};
pub use spectrum::{power_spectrum, spectral_fidelity, Spectrum, SpectrumSource};
pub use teeth::{comb_teeth, Crossings, Tooth};

use thiserror::Error;

use crate::dimer::LleError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CombError {
    #[error("spectra have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("both spectra are zero")]
    ZeroSpectrum,
    #[error("{0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("{0} grid must be strictly increasing and finite")]
    NonIncreasingGrid(&'static str),
    #[error("invalid bracket [{0}, {1}]")]
    InvalidBracket(f64, f64),
    #[error("at most 20 bisections, got {0}")]
    TooManyBisections(u32),
    #[error("need at least 2 realizations, got {0}")]
    TooFewRealizations(usize),
    #[error("reference spectrum has no teeth")]
    NoTeeth,
    #[error("series is constant: no line")]
    NoLine,
    #[error("need at least 256 samples, got {0}")]
    TooFewSamples(usize),
    #[error("reference run blew up")]
    ReferenceBlowup,
    #[error("{0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Lle(#[from] LleError),
}
