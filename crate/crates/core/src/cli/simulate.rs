use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use super::config::sha256_hex;
use super::{RunConfig, SimArgs, EXIT_OK, EXIT_USAGE};
use crate::comb::{
    arnold_tongue_scan, beat_note_psd, beat_signal, comb_teeth, csv, disorder_fidelity_curve, pinning_report, power_threshold_scan,
    run_cell, CombError, Crossings,
};
use crate::dimer::{write_trajectory_binary, write_trajectory_csv};
use crate::poly::format_rational;

type Artifacts = Vec<(&'static str, Vec<u8>)>;

fn sink(f: impl FnOnce(&mut Vec<u8>) -> std::io::Result<()>) -> Vec<u8> {
    let mut buf = Vec::new();
    f(&mut buf).expect("writing to memory");
    buf
}

fn simulate(c: &RunConfig) -> Result<(Artifacts, Value), CombError> {
    let sim = c.sim().map_err(CombError::InvalidConfig)?;
    let run = run_cell(&c.params, &sim)?;
    let mut spectrum = String::from("mode_k,power\n");
    for (i, p) in run.spectrum.power.iter().enumerate() {
        spectrum += &format!("{},{}\n", run.spectrum.mode(i), csv::float(*p));
    }
    let levels = c.levels().map_err(CombError::InvalidConfig)?;
    let mut teeth = String::from("level,k,kind\n");
    for t in comb_teeth(&c.params.coupling, c.modes, &levels) {
        let level = format_rational(&t.level);
        match t.crossings {
            Crossings::Degenerate => teeth += &format!("{level},,degenerate\n"),
            Crossings::Points(ks) => {
                for k in ks {
                    teeth += &format!("{level},{},crossing\n", csv::float(k));
                }
            }
        }
    }
    let summary = json!({
        "stability": run.stability.label(),
        "blowup_step": run.trajectory.blowup_step,
        "snapshots": run.trajectory.snapshots.len(),
        "sideband_fraction": run.spectrum.sideband_fraction(),
    });
    Ok((
        vec![
            ("trajectory.csv", sink(|b| write_trajectory_csv(&run.trajectory, b))),
            ("trajectory.bin", sink(|b| write_trajectory_binary(&run.trajectory, b))),
            ("spectrum.csv", spectrum.into_bytes()),
            ("teeth.csv", teeth.into_bytes()),
        ],
        summary,
    ))
}

fn execute(command: &str, c: &RunConfig) -> Result<(Artifacts, Value), CombError> {
    let sim = c.sim().map_err(CombError::InvalidConfig)?;
    match command {
        "simulate" => simulate(c),
        "tongues" => {
            let map = arnold_tongue_scan(&c.tongues.detunings, &c.tongues.moduli, &c.params, &sim)?;
            let stable = map.cells.iter().filter(|s| **s == crate::dimer::Stability::Stable).count();
            Ok((vec![("stability_map.csv", sink(|b| csv::write_stability_map(&map, b)))], json!({ "cells": map.cells.len(), "stable": stable })))
        }
        "eps" => {
            let e = &c.eps;
            let surface = power_threshold_scan(&e.detunings, &e.moduli, (e.p_lo, e.p_hi), e.iterations, &c.params, &sim)?;
            let found = surface.cells.iter().filter(|t| t.p_star.is_some()).count();
            Ok((vec![("eps_surface.csv", sink(|b| csv::write_eps_surface(&surface, b)))], json!({ "cells": surface.cells.len(), "found": found })))
        }
        "disorder" => {
            let d = &c.disorder;
            let curve = disorder_fidelity_curve(&d.etas, d.realizations, &c.params, &d.targets, &sim, c.master_seed)?;
            Ok((vec![("fidelity_curve.csv", sink(|b| csv::write_fidelity_curve(&curve, b)))], json!({ "realizations": curve.realizations })))
        }
        "pinning" => {
            let p = &c.pinning;
            let report = pinning_report(p.eta, p.realizations, &c.params, &p.targets, &sim, c.master_seed, p.tooth_threshold)?;
            Ok((
                vec![("pinning.csv", sink(|b| csv::write_pinning(&report, b)))],
                json!({ "realizations": report.realizations, "blowup_count": report.blowup_count, "teeth": report.teeth.len() }),
            ))
        }
        "beatnote" => {
            let warm = run_cell(&c.params, &sim)?;
            if warm.trajectory.is_blowup() {
                return Err(CombError::ReferenceBlowup);
            }
            let (series, harmonic) = beat_signal(warm.trajectory.last(), &c.params, &c.evolution, &c.beatnote)?;
            let note = beat_note_psd(&series, c.evolution.dt * c.beatnote.sample_every as f64, c.beatnote.window)?;
            let summary = json!({
                "harmonic": harmonic,
                "peak_frequency": note.peak_frequency,
                "fwhm": note.fwhm,
                "resolution": note.resolution,
            });
            let summary_bytes = (serde_json::to_string_pretty(&summary).expect("json") + "\n").into_bytes();
            Ok((vec![("psd.csv", sink(|b| csv::write_psd(&note, b))), ("beatnote.json", summary_bytes)], summary))
        }
        other => unreachable!("unknown simulation command {other}"),
    }
}

fn write_outputs(dir: &Path, files: &[(&str, Vec<u8>)]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, bytes) in files {
        std::fs::write(dir.join(name), bytes)?;
    }
    Ok(())
}

pub fn dispatch(command: &str, args: &SimArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let config = match args.resolve(command) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.workers {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let started = Instant::now();
    let result = pool.install(|| execute(command, &config));
    let wall = started.elapsed().as_secs_f64();
    let (mut files, summary) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let outputs: Vec<Value> = files.iter().map(|(name, bytes)| json!({ "file": name, "sha256": sha256_hex(bytes), "bytes": bytes.len() })).collect();
    let manifest = json!({
        "command": command,
        "version": concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION")),
        "inputs_sha256": config.inputs_hash(command),
        "master_seed": config.master_seed,
        "workers": pool.current_num_threads(),
        "wall_time_seconds": wall,
        "outputs": outputs,
        "summary": summary,
    });
    files.push(("config.json", config.to_pretty_json().into_bytes()));
    files.push(("manifest.json", (serde_json::to_string_pretty(&manifest).expect("json") + "\n").into_bytes()));
    let dir = config.output_dir.clone().expect("resolved");
    if let Err(e) = write_outputs(&dir, &files) {
        let _ = writeln!(stderr, "error: writing {}: {e}", dir.display());
        return EXIT_USAGE;
    }
    let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&json!({ "output_dir": dir, "manifest": manifest })).expect("json"));
    EXIT_OK
}
