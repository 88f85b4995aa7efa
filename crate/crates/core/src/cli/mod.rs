//! The `kcomb` command line: algebraic invariants and the simulation
//! pipelines, each writing CSV artifacts plus a config echo and a manifest.
//!
//! Exit codes: 0 success, 1 usage/parse/config error, 2 degenerate result
//! (non-isolated singularity), 3 resource limit exceeded.

mod config;
mod invariants;
mod simulate;

pub use config::{DisorderSection, EpsSection, PinningSection, RunConfig, TongueSection};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable naming the output directory when neither a flag
/// nor the config file sets one.
pub const OUTPUT_DIR_ENV: &str = "KCOMB_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "kcomb", version, about = "Singularity invariants and coupled Kerr dimer comb simulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor and Tjurina numbers of a germ, as JSON.
    Invariants(invariants::InvariantsArgs),
    /// X9 invariants over a list or range of moduli, as CSV.
    SweepModulus(invariants::SweepArgs),
    /// One run from the seeded flat start: trajectory, spectrum, teeth.
    Simulate(SimArgs),
    /// Stability map over detuning x modulus.
    Tongues(SimArgs),
    /// Pump-power threshold surface over detuning x modulus.
    Eps(SimArgs),
    /// Fidelity against disorder strength.
    Disorder(SimArgs),
    /// Tooth pinning across disorder realizations.
    Pinning(SimArgs),
    /// Beat-note PSD and linewidth.
    Beatnote(SimArgs),
}

/// Flags shared by the simulation subcommands; each overrides the
/// matching config key.
#[derive(Debug, Clone, Default, Args)]
pub struct SimArgs {
    /// JSON run config; defaults are used for missing keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads for the parallel map (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub modes: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub steps: Option<u64>,
    #[arg(long)]
    pub record_every: Option<u64>,
    #[arg(long)]
    pub detuning: Option<f64>,
    #[arg(long)]
    pub pump: Option<f64>,
    /// Comma-separated detuning grid (tongues, eps).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub detunings: Option<Vec<f64>>,
    /// Comma-separated modulus grid (tongues, eps).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub moduli: Option<Vec<f64>>,
    /// Comma-separated disorder strengths (disorder).
    #[arg(long, value_delimiter = ',')]
    pub etas: Option<Vec<f64>>,
    /// Disorder strength (pinning).
    #[arg(long)]
    pub eta: Option<f64>,
    /// Realization count (disorder, pinning).
    #[arg(long)]
    pub realizations: Option<usize>,
}

impl SimArgs {
    /// Defaults, then the config file, then flags.
    pub fn resolve(&self, command: &str) -> Result<RunConfig, String> {
        let mut c = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        if let Some(v) = &self.output_dir {
            c.output_dir = Some(v.clone());
        }
        if c.output_dir.is_none() {
            c.output_dir = Some(std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("kcomb-out")));
        }
        if let Some(v) = self.seed {
            c.master_seed = v;
        }
        if let Some(v) = self.modes {
            c.modes = v;
        }
        if let Some(v) = self.dt {
            c.evolution.dt = v;
        }
        if let Some(v) = self.steps {
            c.evolution.steps = v;
        }
        if let Some(v) = self.record_every {
            c.evolution.record_every = v;
        }
        if let Some(v) = self.detuning {
            c.params.detuning = v;
        }
        if let Some(v) = self.pump {
            c.params.pump_amplitude = v;
        }
        if let Some(v) = &self.detunings {
            match command {
                "eps" => c.eps.detunings = v.clone(),
                _ => c.tongues.detunings = v.clone(),
            }
        }
        if let Some(v) = &self.moduli {
            match command {
                "eps" => c.eps.moduli = v.clone(),
                _ => c.tongues.moduli = v.clone(),
            }
        }
        if let Some(v) = &self.etas {
            c.disorder.etas = v.clone();
        }
        if let Some(v) = self.eta {
            c.pinning.eta = v;
        }
        if let Some(v) = self.realizations {
            c.disorder.realizations = v;
            c.pinning.realizations = v;
        }
        c.validate()?;
        Ok(c)
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match cli.command {
        Command::Invariants(a) => invariants::cmd_invariants(&a, stdout, stderr),
        Command::SweepModulus(a) => invariants::cmd_sweep_modulus(&a, stdout, stderr),
        Command::Simulate(a) => simulate::dispatch("simulate", &a, stdout, stderr),
        Command::Tongues(a) => simulate::dispatch("tongues", &a, stdout, stderr),
        Command::Eps(a) => simulate::dispatch("eps", &a, stdout, stderr),
        Command::Disorder(a) => simulate::dispatch("disorder", &a, stdout, stderr),
        Command::Pinning(a) => simulate::dispatch("pinning", &a, stdout, stderr),
        Command::Beatnote(a) => simulate::dispatch("beatnote", &a, stdout, stderr),
    }
}

/// [`run_with`] on the process arguments and standard streams.
pub fn main() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
