use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CouplingProfile, LLEParams, LleError, RingGrid};

/// Streams of the keyed generator; one per perturbed or sampled quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Detuning = 0,
    Coupling = 1,
    NoiseRe = 2,
    NoiseIm = 3,
}

/// Uniform value in `[-1, 1)` determined by `(seed, stream, index)` alone.
///
/// ChaCha8 keyed by `seed`, on stream `stream`, read at word position
/// `2 * index`: no state is shared between calls.
pub fn keyed_uniform(seed: u64, stream: Stream, index: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng.set_word_pos(2 * index as u128);
    2.0 * rng.gen::<f64>() - 1.0
}

/// Mixes several integers into one seed (SplitMix64 finalizer per word).
pub fn derive_seed(parts: &[u64]) -> u64 {
    let mut h = 0x9E37_79B9_7F4A_7C15u64;
    for &p in parts {
        let mut z = h ^ p.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        h = z ^ (z >> 31);
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DisorderTarget {
    Detuning,
    Coupling,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisorderSpec {
    /// Relative strength.
    pub strength: f64,
    pub seed: u64,
    pub targets: Vec<DisorderTarget>,
}

/// Replaces each targeted quantity `q` by `q (1 + strength u)`: per field
/// for the detuning (through `detuning_factors`), per mode for the coupling
/// (which becomes a table).
pub fn apply_disorder(params: &LLEParams, spec: &DisorderSpec, grid: &RingGrid) -> Result<LLEParams, LleError> {
    if !(spec.strength >= 0.0 && spec.strength.is_finite()) {
        return Err(LleError::InvalidConfig(format!("disorder strength must be >= 0, got {}", spec.strength)));
    }
    let mut out = params.clone();
    if spec.strength == 0.0 {
        return Ok(out);
    }
    let eta = spec.strength;
    if spec.targets.contains(&DisorderTarget::Detuning) {
        for (i, f) in out.detuning_factors.iter_mut().enumerate() {
            *f *= 1.0 + eta * keyed_uniform(spec.seed, Stream::Detuning, i as u64);
        }
    }
    if spec.targets.contains(&DisorderTarget::Coupling) {
        let values = params.coupling.values(grid);
        out.coupling = CouplingProfile::Table {
            values: values.iter().enumerate().map(|(i, v)| v * (1.0 + eta * keyed_uniform(spec.seed, Stream::Coupling, i as u64))).collect(),
        };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keyed_values_are_stateless() {
        let a = keyed_uniform(7, Stream::Coupling, 3);
        let _ = keyed_uniform(7, Stream::Coupling, 2);
        assert_eq!(a, keyed_uniform(7, Stream::Coupling, 3));
        assert_ne!(a, keyed_uniform(7, Stream::Detuning, 3));
        assert_ne!(a, keyed_uniform(8, Stream::Coupling, 3));
        let vals: Vec<f64> = (0..1000).map(|i| keyed_uniform(1, Stream::NoiseRe, i)).collect();
        assert!(vals.iter().all(|v| (-1.0..1.0).contains(v)));
        let mean = vals.iter().sum::<f64>() / 1000.0;
        assert!(mean.abs() < 0.1);
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(&[1, 2]), derive_seed(&[2, 1]));
        assert_eq!(derive_seed(&[5, 0, 3]), derive_seed(&[5, 0, 3]));
    }
}
