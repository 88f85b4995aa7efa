use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use super::{DimerField, LLEParams, LleError, PumpMode, RingGrid};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolutionConfig {
    pub dt: f64,
    pub steps: u64,
    pub record_every: u64,
    #[serde(default = "default_blowup_bound")]
    pub blowup_bound: f64,
}

fn default_blowup_bound() -> f64 {
    1e6
}

impl EvolutionConfig {
    pub fn new(dt: f64, steps: u64, record_every: u64) -> Self {
        EvolutionConfig { dt, steps, record_every, blowup_bound: default_blowup_bound() }
    }

    pub fn validate(&self) -> Result<(), LleError> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(LleError::InvalidConfig(format!("dt must be positive, got {}", self.dt)));
        }
        if self.steps == 0 || self.record_every == 0 {
            return Err(LleError::InvalidConfig("steps and record_every must be positive".into()));
        }
        if !(self.blowup_bound > 0.0) {
            return Err(LleError::InvalidConfig("blowup_bound must be positive".into()));
        }
        Ok(())
    }

    pub fn horizon(&self) -> f64 {
        self.dt * self.steps as f64
    }
}

/// Recorded snapshots at `t = n * record_every * dt`, starting with the
/// initial field. A blow-up stops the run; `blowup_step` names the step.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub grid: RingGrid,
    pub times: Vec<f64>,
    pub snapshots: Vec<DimerField>,
    pub blowup_step: Option<u64>,
}

impl Trajectory {
    pub fn last(&self) -> &DimerField {
        self.snapshots.last().expect("initial snapshot is always recorded")
    }

    pub fn is_blowup(&self) -> bool {
        self.blowup_step.is_some()
    }
}

/// `exp(A)` for a small dense complex matrix by scaling and squaring a
/// Taylor series.
fn expm<const N: usize>(a: [[Complex64; N]; N]) -> [[Complex64; N]; N] {
    let norm = (0..N).map(|j| (0..N).map(|i| a[i][j].norm()).sum::<f64>()).fold(0.0, f64::max);
    let squarings = if norm > 0.25 { (norm / 0.25).log2().ceil() as u32 } else { 0 };
    let scale = 0.5f64.powi(squarings as i32);
    let mul = |x: &[[Complex64; N]; N], y: &[[Complex64; N]; N]| {
        let mut out = [[Complex64::new(0.0, 0.0); N]; N];
        for i in 0..N {
            for j in 0..N {
                out[i][j] = (0..N).map(|k| x[i][k] * y[k][j]).sum();
            }
        }
        out
    };
    let mut scaled = a;
    for row in scaled.iter_mut() {
        for v in row.iter_mut() {
            *v *= scale;
        }
    }
    let mut result = [[Complex64::new(0.0, 0.0); N]; N];
    for (i, row) in result.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    let mut term = result;
    for n in 1..30 {
        term = mul(&term, &scaled);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v /= n as f64;
            }
        }
        let mut small = true;
        for i in 0..N {
            for j in 0..N {
                result[i][j] += term[i][j];
                small &= term[i][j].norm() <= 1e-18 * result[i][j].norm().max(1e-300);
            }
        }
        if small {
            break;
        }
    }
    for _ in 0..squarings {
        result = mul(&result, &result);
    }
    result
}

/// Strang split-step integrator: half Kerr rotation, exact linear step
/// (loss, detuning, dispersion, coupling and pump) per mode, half Kerr.
pub struct Integrator {
    grid: RingGrid,
    kerr: Option<f64>,
    half_dt: f64,
    /// Per FFT index, the 2x2 propagator of the linear part.
    propagators: Vec<[[Complex64; 2]; 2]>,
    /// Pump contribution to the k = 0 coefficients over one step.
    pump_kick: [Complex64; 2],
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
}

impl Integrator {
    pub fn new(grid: RingGrid, params: &LLEParams, dt: f64) -> Result<Self, LleError> {
        params.validate(&grid)?;
        let m = grid.mode_count();
        let loss = if params.terms.loss { 1.0 } else { 0.0 };
        let a_of_k = params.coupling.values(&grid);
        let half = (m / 2) as i64;
        let mut propagators = Vec::with_capacity(m);
        let mut generator_k0 = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..m {
            let k = grid.fft_mode(i);
            let disp = 0.5 * params.dispersion_d2 * (k * k) as f64;
            let diag = |f: usize| Complex64::new(-loss, -(params.field_detuning(f) + disp));
            let off = I * a_of_k[(k + half) as usize];
            let l = [[diag(0), off], [off, diag(1)]];
            if k == 0 {
                generator_k0 = l;
            }
            propagators.push(expm(l.map(|row| row.map(|v| v * dt))));
        }
        // Pump enters only at k = 0; in unnormalized FFT units it is M * F.
        // The affine step is read off exp([[L, f], [0, 0]] dt).
        let f = params.pump_amplitude * m as f64;
        let f_b = match params.pump_mode {
            PumpMode::AOnly => 0.0,
            PumpMode::Symmetric => f,
        };
        let zero = Complex64::new(0.0, 0.0);
        let aug = [
            [generator_k0[0][0], generator_k0[0][1], Complex64::new(f, 0.0)],
            [generator_k0[1][0], generator_k0[1][1], Complex64::new(f_b, 0.0)],
            [zero, zero, zero],
        ];
        let aug = expm(aug.map(|row| row.map(|v| v * dt)));
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(m);
        let inverse = planner.plan_fft_inverse(m);
        let scratch_len = forward.get_inplace_scratch_len().max(inverse.get_inplace_scratch_len());
        Ok(Integrator {
            grid,
            kerr: params.terms.kerr.then(|| params.kerr_sign.value()),
            half_dt: 0.5 * dt,
            propagators,
            pump_kick: [aug[0][2], aug[1][2]],
            forward,
            inverse,
            scratch: vec![zero; scratch_len],
        })
    }

    pub fn grid(&self) -> &RingGrid {
        &self.grid
    }

    /// Kerr rotation over `halves * dt / 2`.
    fn kerr_rotation(&self, field: &mut DimerField, halves: f64) {
        if let Some(sign) = self.kerr {
            let s = sign * self.half_dt * halves;
            for z in field.a.iter_mut().chain(field.b.iter_mut()) {
                *z *= Complex64::from_polar(1.0, s * z.norm_sqr());
            }
        }
    }

    fn linear_step(&mut self, field: &mut DimerField) {
        self.forward.process_with_scratch(&mut field.a, &mut self.scratch);
        self.forward.process_with_scratch(&mut field.b, &mut self.scratch);
        for (i, p) in self.propagators.iter().enumerate() {
            let (x, y) = (field.a[i], field.b[i]);
            field.a[i] = p[0][0] * x + p[0][1] * y;
            field.b[i] = p[1][0] * x + p[1][1] * y;
        }
        field.a[0] += self.pump_kick[0];
        field.b[0] += self.pump_kick[1];
        self.inverse.process_with_scratch(&mut field.a, &mut self.scratch);
        self.inverse.process_with_scratch(&mut field.b, &mut self.scratch);
        let inv_m = 1.0 / self.grid.mode_count() as f64;
        for z in field.a.iter_mut().chain(field.b.iter_mut()) {
            *z *= inv_m;
        }
    }

    /// One Strang step of length `dt`.
    pub fn step(&mut self, field: &mut DimerField) {
        self.kerr_rotation(field, 1.0);
        self.linear_step(field);
        self.kerr_rotation(field, 1.0);
    }
}

/// Integrates from `initial` and records snapshots.
pub fn evolve(initial: &DimerField, params: &LLEParams, config: &EvolutionConfig) -> Result<Trajectory, LleError> {
    run(initial, params, config, None::<fn(u64, &DimerField)>)
}

/// As [`evolve`], calling `observer(step, field)` after every step.
pub fn evolve_with(
    initial: &DimerField,
    params: &LLEParams,
    config: &EvolutionConfig,
    observer: impl FnMut(u64, &DimerField),
) -> Result<Trajectory, LleError> {
    run(initial, params, config, Some(observer))
}

fn run(
    initial: &DimerField,
    params: &LLEParams,
    config: &EvolutionConfig,
    mut observer: Option<impl FnMut(u64, &DimerField)>,
) -> Result<Trajectory, LleError> {
    config.validate()?;
    let grid = RingGrid::new(initial.a.len())?;
    if initial.b.len() != initial.a.len() {
        return Err(LleError::FieldLength { a: initial.a.len(), b: initial.b.len() });
    }
    if !initial.is_finite() {
        return Err(LleError::NonFinite("initial field"));
    }
    let mut integrator = Integrator::new(grid, params, config.dt)?;
    let mut field = initial.clone();
    let mut traj = Trajectory { grid, times: vec![0.0], snapshots: vec![field.clone()], blowup_step: None };
    // Between points where the field is looked at, the closing Kerr half
    // step of one step and the opening one of the next are merged; the
    // rotation keeps |A| and |B|, so this is the same map.
    let mut open_half = false;
    for step in 1..=config.steps {
        integrator.kerr_rotation(&mut field, if open_half { 2.0 } else { 1.0 });
        integrator.linear_step(&mut field);
        open_half = true;
        let [ra, rb] = field.rms();
        if !(ra <= config.blowup_bound && rb <= config.blowup_bound) {
            traj.blowup_step = Some(step);
            break;
        }
        let record = step % config.record_every == 0;
        if record || observer.is_some() || step == config.steps {
            integrator.kerr_rotation(&mut field, 1.0);
            open_half = false;
        }
        if let Some(obs) = observer.as_mut() {
            obs(step, &field);
        }
        if record {
            traj.times.push(step as f64 * config.dt);
            traj.snapshots.push(field.clone());
        }
    }
    Ok(traj)
}
