use std::io::{self, Write};

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{DimerField, Trajectory};

/// Fourier coefficients `c_k` with `A(theta) = sum_k c_k e^{i k theta}`,
/// ascending `k`.
pub fn fourier_coefficients(field: &[Complex64]) -> Vec<Complex64> {
    let m = field.len();
    let mut buf = field.to_vec();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let half = m / 2;
    (0..m).map(|i| buf[(i + half) % m] / m as f64).collect()
}

fn snapshot_coefficients(s: &DimerField) -> [Vec<Complex64>; 2] {
    [fourier_coefficients(&s.a), fourier_coefficients(&s.b)]
}

/// CSV with header `snapshot_index,field,mode_k,re,im`, one row per
/// Fourier coefficient, 17 significant digits.
pub fn write_trajectory_csv(traj: &Trajectory, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "snapshot_index,field,mode_k,re,im")?;
    for (n, s) in traj.snapshots.iter().enumerate() {
        for (name, coeffs) in ["A", "B"].iter().zip(snapshot_coefficients(s)) {
            for (k, c) in traj.grid.modes().zip(coeffs) {
                writeln!(out, "{n},{name},{k},{:.16e},{:.16e}", c.re, c.im)?;
            }
        }
    }
    Ok(())
}

/// Little-endian dump: `u64 M`, `u64 snapshot count`, then per snapshot
/// the coefficients of A and then B, ascending `k`, as `f64` pairs
/// `(re, im)`.
pub fn write_trajectory_binary(traj: &Trajectory, mut out: impl Write) -> io::Result<()> {
    out.write_all(&(traj.grid.mode_count() as u64).to_le_bytes())?;
    out.write_all(&(traj.snapshots.len() as u64).to_le_bytes())?;
    for s in &traj.snapshots {
        for coeffs in snapshot_coefficients(s) {
            for c in coeffs {
                out.write_all(&c.re.to_le_bytes())?;
                out.write_all(&c.im.to_le_bytes())?;
            }
        }
    }
    Ok(())
}

/// Inverse of [`write_trajectory_binary`]: `(M, snapshots of [A, B] coefficients)`.
pub fn read_trajectory_binary(bytes: &[u8]) -> io::Result<(usize, Vec<[Vec<Complex64>; 2]>)> {
    let bad = || io::Error::new(io::ErrorKind::InvalidData, "truncated trajectory dump");
    let word = |i: usize| -> io::Result<[u8; 8]> { bytes.get(8 * i..8 * i + 8).ok_or_else(bad)?.try_into().map_err(|_| bad()) };
    let m = u64::from_le_bytes(word(0)?) as usize;
    let count = u64::from_le_bytes(word(1)?) as usize;
    if bytes.len() != 16 + count * 2 * m * 16 {
        return Err(bad());
    }
    let mut pos = 2;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut pair = [Vec::with_capacity(m), Vec::with_capacity(m)];
        for f in pair.iter_mut() {
            for _ in 0..m {
                let re = f64::from_le_bytes(word(pos)?);
                let im = f64::from_le_bytes(word(pos + 1)?);
                f.push(Complex64::new(re, im));
                pos += 2;
            }
        }
        out.push(pair);
    }
    Ok((m, out))
}
