//! One CSV per artifact. Floats carry 17 significant digits.

use std::io::{self, Write};

use super::{BeatNote, EPSurface, FidelityCurve, PinningReport, StabilityMap};

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_stability_map(map: &StabilityMap, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "detuning,modulus,class")?;
    for (d, a, s) in map.iter() {
        writeln!(out, "{},{},{}", float(d), float(a), s.label())?;
    }
    Ok(())
}

/// `p_star` is empty for `NotFound` cells.
pub fn write_eps_surface(surface: &EPSurface, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "detuning,modulus,p_star,bracket_width,status")?;
    for (d, a, t) in surface.iter() {
        let p = t.p_star.map(float).unwrap_or_default();
        writeln!(out, "{},{},{},{},{}", float(d), float(a), p, float(t.bracket_width), t.status.label())?;
    }
    Ok(())
}

pub fn write_fidelity_curve(curve: &FidelityCurve, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "eta,mean,std,blowup_count")?;
    for p in &curve.points {
        writeln!(out, "{},{},{},{}", float(p.eta), float(p.mean), float(p.std), p.blowup_count)?;
    }
    Ok(())
}

pub fn write_pinning(report: &PinningReport, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "tooth_k,drift_max,drift_rms,amp_var")?;
    for t in &report.teeth {
        writeln!(out, "{},{},{},{}", t.k, float(t.drift_max), float(t.drift_rms), float(t.amp_var))?;
    }
    Ok(())
}

pub fn write_psd(note: &BeatNote, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "freq,power")?;
    for (f, p) in note.freqs.iter().zip(&note.psd) {
        writeln!(out, "{},{}", float(*f), float(*p))?;
    }
    Ok(())
}
