use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::LleError;

/// Periodic grid of `M` points on the ring, `M` a power of two, `M >= 16`.
///
/// Mode numbers run over `-M/2 .. M/2 - 1`. Arrays in k-space are kept in
/// FFT order (`0, 1, .., M/2 - 1, -M/2, .., -1`) internally and in ascending
/// mode order whenever they leave the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct RingGrid {
    m: usize,
}

impl RingGrid {
    pub fn new(mode_count: usize) -> Result<Self, LleError> {
        if mode_count < 16 || !mode_count.is_power_of_two() {
            return Err(LleError::InvalidGrid(mode_count));
        }
        Ok(RingGrid { m: mode_count })
    }

    pub fn mode_count(&self) -> usize {
        self.m
    }

    pub fn theta(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.m as f64
    }

    /// Mode number stored at FFT index `i`.
    pub fn fft_mode(&self, i: usize) -> i64 {
        let m = self.m as i64;
        let i = i as i64;
        if i < m / 2 {
            i
        } else {
            i - m
        }
    }

    /// FFT index holding mode `k`.
    pub fn fft_index(&self, k: i64) -> usize {
        k.rem_euclid(self.m as i64) as usize
    }

    /// `-M/2 ..= M/2 - 1`.
    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let half = (self.m / 2) as i64;
        -half..half
    }

    /// Reorders an FFT-ordered array into ascending mode order.
    pub fn to_ascending<T: Clone>(&self, fft_ordered: &[T]) -> Vec<T> {
        self.modes().map(|k| fft_ordered[self.fft_index(k)].clone()).collect()
    }
}

impl TryFrom<usize> for RingGrid {
    type Error = LleError;

    fn try_from(m: usize) -> Result<Self, LleError> {
        RingGrid::new(m)
    }
}

impl From<RingGrid> for usize {
    fn from(g: RingGrid) -> usize {
        g.m
    }
}
