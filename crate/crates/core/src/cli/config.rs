use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::comb::{BeatConfig, SimConfig, SpectrumSource, Window, DEFAULT_TOOTH_THRESHOLD};
use crate::dimer::{CouplingProfile, DisorderTarget, EvolutionConfig, LLEParams, RingGrid, StabilityConfig};
use crate::groebner::Limits;
use crate::poly::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TongueSection {
    pub detunings: Vec<f64>,
    pub moduli: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EpsSection {
    pub detunings: Vec<f64>,
    pub moduli: Vec<f64>,
    /// Bracket on the pump power `P`.
    pub p_lo: f64,
    pub p_hi: f64,
    pub iterations: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DisorderSection {
    pub etas: Vec<f64>,
    pub realizations: usize,
    pub targets: Vec<DisorderTarget>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PinningSection {
    pub eta: f64,
    pub realizations: usize,
    pub targets: Vec<DisorderTarget>,
    pub tooth_threshold: f64,
}

/// Everything a simulation subcommand reads. Missing keys take the
/// defaults below; unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub master_seed: u64,
    pub output_dir: Option<PathBuf>,
    pub modes: usize,
    pub params: LLEParams,
    pub evolution: EvolutionConfig,
    pub stability: StabilityConfig,
    pub noise: f64,
    pub spectrum: SpectrumSource,
    pub sideband_threshold: f64,
    /// Levels `a(k) = level` marked by `simulate`, as `"num/den"` strings.
    pub levels: Vec<String>,
    pub tongues: TongueSection,
    pub eps: EpsSection,
    pub disorder: DisorderSection,
    pub pinning: PinningSection,
    pub beatnote: BeatConfig,
    pub limits: Limits,
}

impl Default for TongueSection {
    fn default() -> Self {
        TongueSection { detunings: vec![-0.5, 0.0, 0.5, 1.0, 1.5], moduli: vec![0.0, 0.25, 0.5, 0.75, 1.0] }
    }
}

impl Default for EpsSection {
    fn default() -> Self {
        EpsSection { detunings: vec![0.0, 0.5, 1.0], moduli: vec![0.0, 0.5, 1.0], p_lo: 0.5, p_hi: 4.0, iterations: 8 }
    }
}

impl Default for DisorderSection {
    fn default() -> Self {
        DisorderSection {
            etas: vec![0.0, 0.05, 0.1, 0.15, 0.2, 0.3],
            realizations: 15,
            targets: vec![DisorderTarget::Detuning, DisorderTarget::Coupling],
        }
    }
}

impl Default for PinningSection {
    fn default() -> Self {
        PinningSection {
            eta: 0.1,
            realizations: 15,
            targets: vec![DisorderTarget::Detuning, DisorderTarget::Coupling],
            tooth_threshold: DEFAULT_TOOTH_THRESHOLD,
        }
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            master_seed: 1,
            output_dir: None,
            modes: 64,
            params: LLEParams::new(0.5, 1.5, 0.1).with_coupling(CouplingProfile::Cosine { a0: 0.0, a1: 0.1, scale: 1 }),
            evolution: EvolutionConfig::new(2e-3, 75_000, 1_500),
            stability: StabilityConfig::default(),
            noise: 1e-4,
            spectrum: SpectrumSource::Sum,
            sideband_threshold: 1e-6,
            levels: vec!["0".into(), "1/20".into()],
            tongues: TongueSection::default(),
            eps: EpsSection::default(),
            disorder: DisorderSection::default(),
            pinning: PinningSection::default(),
            beatnote: BeatConfig { samples: 1024, sample_every: 50, carrier: 1.0, window: Window::Hann },
            limits: Limits::default(),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid config: {e}"))
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn grid(&self) -> Result<RingGrid, String> {
        RingGrid::new(self.modes).map_err(|e| e.to_string())
    }

    pub fn validate(&self) -> Result<(), String> {
        let grid = self.grid()?;
        self.params.validate(&grid).map_err(|e| e.to_string())?;
        self.evolution.validate().map_err(|e| e.to_string())?;
        if !(self.noise >= 0.0 && self.noise.is_finite()) {
            return Err(format!("noise must be >= 0, got {}", self.noise));
        }
        self.levels()?;
        Ok(())
    }

    pub fn levels(&self) -> Result<Vec<Rational>, String> {
        self.levels.iter().map(|s| parse_rational(s).ok_or_else(|| format!("level {s:?} is not a rational \"num/den\""))).collect()
    }

    pub fn sim(&self) -> Result<SimConfig, String> {
        Ok(SimConfig {
            grid: self.grid()?,
            evolution: self.evolution,
            stability: self.stability,
            noise: self.noise,
            noise_seed: self.master_seed,
            spectrum: self.spectrum,
            sideband_threshold: self.sideband_threshold,
        })
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes") + "\n"
    }

    /// SHA-256 of the subcommand name and the compact JSON of the
    /// effective config, leaving out `output_dir`.
    pub fn inputs_hash(&self, command: &str) -> String {
        let inputs = RunConfig { output_dir: None, ..self.clone() };
        let mut h = Sha256::new();
        h.update(command.as_bytes());
        h.update([0u8]);
        h.update(serde_json::to_string(&inputs).expect("config serializes").as_bytes());
        hex(&h.finalize())
    }
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex(&Sha256::digest(bytes))
}
