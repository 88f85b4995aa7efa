use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{power_spectrum, CombError, Spectrum, SpectrumSource};
use crate::dimer::{
    classify_stability, evolve, flat_steady_field, keyed_uniform, DimerField, EvolutionConfig, LLEParams, RingGrid, Stability,
    StabilityConfig, Stream, Trajectory,
};

/// Everything a single simulated cell needs besides its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimConfig {
    pub grid: RingGrid,
    pub evolution: EvolutionConfig,
    #[serde(default)]
    pub stability: StabilityConfig,
    /// Noise added to the flat start, relative to its amplitude.
    #[serde(default = "default_noise")]
    pub noise: f64,
    #[serde(default)]
    pub noise_seed: u64,
    #[serde(default)]
    pub spectrum: SpectrumSource,
    /// A state counts as localized (multi-mode) when more than this share
    /// of its power sits outside `k = 0`.
    #[serde(default = "default_sideband_threshold")]
    pub sideband_threshold: f64,
}

fn default_noise() -> f64 {
    1e-4
}

fn default_sideband_threshold() -> f64 {
    1e-6
}

impl SimConfig {
    pub fn new(grid: RingGrid, evolution: EvolutionConfig) -> Self {
        SimConfig {
            grid,
            evolution,
            stability: StabilityConfig::default(),
            noise: default_noise(),
            noise_seed: 0,
            spectrum: SpectrumSource::default(),
            sideband_threshold: default_sideband_threshold(),
        }
    }
}

/// Flat steady state of the uncoupled resonator on A (lowest root), B empty,
/// plus complex noise `noise * |A_flat| * (u + i v)` on both fields, with
/// `u, v` keyed by `(noise_seed, stream, point)`. A zero pump gives an
/// exactly zero field.
pub fn initial_condition(params: &LLEParams, config: &SimConfig) -> DimerField {
    let grid = &config.grid;
    let mut field = flat_steady_field(grid, params);
    let scale = config.noise * field.a[0].norm();
    if scale > 0.0 {
        let m = grid.mode_count();
        for (f, values) in [&mut field.a, &mut field.b].into_iter().enumerate() {
            for (j, z) in values.iter_mut().enumerate() {
                let idx = (f * m + j) as u64;
                let u = keyed_uniform(config.noise_seed, Stream::NoiseRe, idx);
                let v = keyed_uniform(config.noise_seed, Stream::NoiseIm, idx);
                *z += Complex64::new(u, v) * scale;
            }
        }
    }
    field
}

/// Result of evolving one parameter point from [`initial_condition`].
#[derive(Debug, Clone, PartialEq)]
pub struct CellRun {
    pub stability: Stability,
    pub spectrum: Spectrum,
    pub trajectory: Trajectory,
}

pub fn run_cell(params: &LLEParams, config: &SimConfig) -> Result<CellRun, CombError> {
    let traj = evolve(&initial_condition(params, config), params, &config.evolution)?;
    let stability = classify_stability(&traj, &config.stability);
    let spectrum = power_spectrum(traj.last(), config.spectrum);
    Ok(CellRun { stability, spectrum, trajectory: traj })
}

fn check_axis(name: &'static str, axis: &[f64]) -> Result<(), CombError> {
    if axis.is_empty() {
        return Err(CombError::EmptyGrid(name));
    }
    if axis.windows(2).any(|w| !(w[0] < w[1])) || axis.iter().any(|v| !v.is_finite()) {
        return Err(CombError::NonIncreasingGrid(name));
    }
    Ok(())
}

/// Row-major cells over `(detuning, modulus)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2<T> {
    pub detunings: Vec<f64>,
    pub moduli: Vec<f64>,
    /// `cells[i * moduli.len() + j]` belongs to `(detunings[i], moduli[j])`.
    pub cells: Vec<T>,
}

impl<T> Grid2<T> {
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.cells[i * self.moduli.len() + j]
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, &T)> {
        let nm = self.moduli.len();
        self.cells.iter().enumerate().map(move |(n, c)| (self.detunings[n / nm], self.moduli[n % nm], c))
    }
}

/// Runs `f` on every `(detuning, modulus)` cell as a parallel map; results
/// come back in row-major order whatever the scheduling.
fn map_cells<T: Send>(
    detunings: &[f64],
    moduli: &[f64],
    base: &LLEParams,
    f: impl Fn(LLEParams) -> Result<T, CombError> + Sync,
) -> Result<Grid2<T>, CombError> {
    check_axis("detuning", detunings)?;
    check_axis("modulus", moduli)?;
    let cells = (0..detunings.len() * moduli.len())
        .into_par_iter()
        .map(|n| {
            let mut p = base.clone();
            p.detuning = detunings[n / moduli.len()];
            p.coupling = base.coupling.with_modulus(moduli[n % moduli.len()]);
            f(p)
        })
        .collect::<Result<Vec<T>, CombError>>()?;
    Ok(Grid2 { detunings: detunings.to_vec(), moduli: moduli.to_vec(), cells })
}

pub type StabilityMap = Grid2<Stability>;

/// Stability of every `(detuning, modulus)` cell. A blow-up is a cell
/// value, not an error.
pub fn arnold_tongue_scan(detunings: &[f64], moduli: &[f64], base: &LLEParams, config: &SimConfig) -> Result<StabilityMap, CombError> {
    map_cells(detunings, moduli, base, |p| Ok(run_cell(&p, config)?.stability))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThresholdStatus {
    Found,
    /// The predicate already holds at the lower end of the bracket.
    AtLowerBound,
    /// The predicate fails at the upper end of the bracket.
    NotFound,
}

impl ThresholdStatus {
    pub fn label(self) -> &'static str {
        match self {
            ThresholdStatus::Found => "Found",
            ThresholdStatus::AtLowerBound => "AtLowerBound",
            ThresholdStatus::NotFound => "NotFound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Threshold {
    /// Midpoint of the final bracket; `None` when not found.
    pub p_star: Option<f64>,
    pub bracket_width: f64,
    pub status: ThresholdStatus,
}

/// Bisection for the smallest `P` in `[lo, hi]` where `holds(P)`, assuming
/// the predicate switches from false to true once. After `iterations`
/// halvings the bracket width is `(hi - lo) / 2^iterations`.
pub fn bisect_threshold(lo: f64, hi: f64, iterations: u32, mut holds: impl FnMut(f64) -> Result<bool, CombError>) -> Result<Threshold, CombError> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(CombError::InvalidBracket(lo, hi));
    }
    if !holds(hi)? {
        return Ok(Threshold { p_star: None, bracket_width: hi - lo, status: ThresholdStatus::NotFound });
    }
    if holds(lo)? {
        return Ok(Threshold { p_star: Some(lo), bracket_width: 0.0, status: ThresholdStatus::AtLowerBound });
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..iterations {
        let mid = 0.5 * (a + b);
        if holds(mid)? {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(Threshold { p_star: Some(0.5 * (a + b)), bracket_width: b - a, status: ThresholdStatus::Found })
}

/// The stable-localized-state predicate: the run is classified `Stable`
/// and its final spectrum is not concentrated at `k = 0`.
pub fn is_stable_localized(run: &CellRun, config: &SimConfig) -> bool {
    run.stability == Stability::Stable && run.spectrum.sideband_fraction() > config.sideband_threshold
}

pub type EPSurface = Grid2<Threshold>;

pub const MAX_BISECTIONS: u32 = 20;

/// Threshold pump power `P = pump_amplitude^2` for a stable localized state
/// in every `(detuning, modulus)` cell.
pub fn power_threshold_scan(
    detunings: &[f64],
    moduli: &[f64],
    bracket: (f64, f64),
    iterations: u32,
    base: &LLEParams,
    config: &SimConfig,
) -> Result<EPSurface, CombError> {
    if iterations > MAX_BISECTIONS {
        return Err(CombError::TooManyBisections(iterations));
    }
    if !(bracket.0 >= 0.0 && bracket.0 < bracket.1) {
        return Err(CombError::InvalidBracket(bracket.0, bracket.1));
    }
    map_cells(detunings, moduli, base, |p| {
        bisect_threshold(bracket.0, bracket.1, iterations, |power| {
            let mut q = p.clone();
            q.pump_amplitude = power.sqrt();
            Ok(is_stable_localized(&run_cell(&q, config)?, config))
        })
    })
}
