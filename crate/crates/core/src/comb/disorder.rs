use rayon::prelude::*;

use super::{initial_condition, power_spectrum, spectral_fidelity, CombError, SimConfig, Spectrum};
use crate::dimer::{apply_disorder, derive_seed, evolve, DisorderSpec, DisorderTarget, LLEParams};

/// One disordered run: its final spectrum, or `None` after a blow-up.
fn realization(base: &LLEParams, config: &SimConfig, targets: &[DisorderTarget], eta: f64, seed: u64) -> Result<Option<Spectrum>, CombError> {
    let spec = DisorderSpec { strength: eta, seed, targets: targets.to_vec() };
    let params = apply_disorder(base, &spec, &config.grid)?;
    let traj = evolve(&initial_condition(base, config), &params, &config.evolution)?;
    Ok((!traj.is_blowup()).then(|| power_spectrum(traj.last(), config.spectrum)))
}

fn reference_spectrum(base: &LLEParams, config: &SimConfig) -> Result<Spectrum, CombError> {
    realization(base, config, &[], 0.0, 0)?.ok_or(CombError::ReferenceBlowup)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FidelityPoint {
    pub eta: f64,
    pub mean: f64,
    /// Sample standard deviation over the realizations.
    pub std: f64,
    pub blowup_count: usize,
    pub fidelities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FidelityCurve {
    pub realizations: usize,
    pub points: Vec<FidelityPoint>,
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Fidelity of disordered spectra against the undisordered one.
///
/// Realization `r` at grid index `i` uses seed
/// `derive_seed([master_seed, i, r])`; a blow-up scores 0 and is counted.
pub fn disorder_fidelity_curve(
    etas: &[f64],
    realizations: usize,
    base: &LLEParams,
    targets: &[DisorderTarget],
    config: &SimConfig,
    master_seed: u64,
) -> Result<FidelityCurve, CombError> {
    if realizations < 2 {
        return Err(CombError::TooFewRealizations(realizations));
    }
    if etas.is_empty() {
        return Err(CombError::EmptyGrid("eta"));
    }
    if etas.windows(2).any(|w| !(w[0] < w[1])) || etas.iter().any(|e| !(*e >= 0.0)) {
        return Err(CombError::NonIncreasingGrid("eta"));
    }
    let reference = reference_spectrum(base, config)?;
    let runs = (0..etas.len() * realizations)
        .into_par_iter()
        .map(|n| {
            let (i, r) = (n / realizations, n % realizations);
            let seed = derive_seed(&[master_seed, i as u64, r as u64]);
            match realization(base, config, targets, etas[i], seed)? {
                Some(s) => Ok(Some(spectral_fidelity(&reference, &s)?)),
                None => Ok(None),
            }
        })
        .collect::<Result<Vec<Option<f64>>, CombError>>()?;
    let points = etas
        .iter()
        .zip(runs.chunks(realizations))
        .map(|(&eta, chunk)| {
            let fidelities: Vec<f64> = chunk.iter().map(|f| f.unwrap_or(0.0)).collect();
            let (mean, std) = mean_std(&fidelities);
            FidelityPoint { eta, mean, std, blowup_count: chunk.iter().filter(|f| f.is_none()).count(), fidelities }
        })
        .collect();
    Ok(FidelityCurve { realizations, points })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ToothPinning {
    pub k: i64,
    /// Largest `|center - reference center|` over realizations, in modes.
    pub drift_max: f64,
    pub drift_rms: f64,
    /// Sample variance of the tooth's windowed power.
    pub amp_var: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PinningReport {
    pub realizations: usize,
    pub blowup_count: usize,
    pub teeth: Vec<ToothPinning>,
}

pub const DEFAULT_TOOTH_THRESHOLD: f64 = 1e-3;
const MAX_WINDOW: usize = 4;

/// Teeth of `reference` (local maxima above `rel_threshold * peak`, the
/// spectrum treated as periodic) tracked through `realizations`.
///
/// Each tooth owns the window of `w` modes on either side, `w` being half
/// the gap to the nearest other tooth, clamped to `1..=4`; its center is the
/// power-weighted mean offset in that window and its amplitude the window's
/// total power.
pub fn pinning_from_spectra(reference: &Spectrum, realizations: &[Spectrum], rel_threshold: f64) -> Result<PinningReport, CombError> {
    if realizations.len() < 2 {
        return Err(CombError::TooFewRealizations(realizations.len()));
    }
    let m = reference.len();
    if let Some(bad) = realizations.iter().find(|s| s.len() != m) {
        return Err(CombError::LengthMismatch(m, bad.len()));
    }
    let p = &reference.power;
    let peak = p.iter().cloned().fold(0.0, f64::max);
    let at = |i: isize| p[i.rem_euclid(m as isize) as usize];
    let teeth: Vec<usize> = (0..m)
        .filter(|&i| {
            let i = i as isize;
            p[i as usize] > 0.0 && p[i as usize] >= rel_threshold * peak && at(i) > at(i - 1) && at(i) >= at(i + 1)
        })
        .collect();
    if teeth.is_empty() {
        return Err(CombError::NoTeeth);
    }
    let measure = |s: &Spectrum, center: usize, w: usize| -> (f64, f64) {
        let (mut total, mut moment) = (0.0, 0.0);
        for off in -(w as isize)..=(w as isize) {
            let v = s.power[(center as isize + off).rem_euclid(m as isize) as usize];
            total += v;
            moment += off as f64 * v;
        }
        (if total > 0.0 { moment / total } else { 0.0 }, total)
    };
    let report = teeth
        .iter()
        .map(|&t| {
            let gap = teeth
                .iter()
                .filter(|&&u| u != t)
                .map(|&u| {
                    let d = t.abs_diff(u);
                    d.min(m - d)
                })
                .min()
                .unwrap_or(2 * MAX_WINDOW);
            let w = (gap / 2).clamp(1, MAX_WINDOW);
            let (c_ref, _) = measure(reference, t, w);
            let (drifts, amps): (Vec<f64>, Vec<f64>) = realizations
                .iter()
                .map(|s| {
                    let (c, a) = measure(s, t, w);
                    ((c - c_ref).abs(), a)
                })
                .unzip();
            let n = drifts.len() as f64;
            ToothPinning {
                k: reference.mode(t),
                drift_max: drifts.iter().cloned().fold(0.0, f64::max),
                drift_rms: (drifts.iter().map(|d| d * d).sum::<f64>() / n).sqrt(),
                amp_var: mean_std(&amps).1.powi(2),
            }
        })
        .collect();
    Ok(PinningReport { realizations: realizations.len(), blowup_count: 0, teeth: report })
}

/// `R` disordered runs at fixed `eta` against the undisordered reference.
/// Seeds are `derive_seed([master_seed, r])`; blown-up runs are left out of
/// the statistics and counted.
pub fn pinning_report(
    eta: f64,
    realizations: usize,
    base: &LLEParams,
    targets: &[DisorderTarget],
    config: &SimConfig,
    master_seed: u64,
    rel_threshold: f64,
) -> Result<PinningReport, CombError> {
    if realizations < 2 {
        return Err(CombError::TooFewRealizations(realizations));
    }
    let reference = reference_spectrum(base, config)?;
    let spectra = (0..realizations)
        .into_par_iter()
        .map(|r| realization(base, config, targets, eta, derive_seed(&[master_seed, r as u64])))
        .collect::<Result<Vec<_>, CombError>>()?;
    let blowups = spectra.iter().filter(|s| s.is_none()).count();
    let kept: Vec<Spectrum> = spectra.into_iter().flatten().collect();
    let mut report = pinning_from_spectra(&reference, &kept, rel_threshold)?;
    report.blowup_count = blowups;
    Ok(report)
}
