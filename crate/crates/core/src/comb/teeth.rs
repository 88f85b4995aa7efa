use num_traits::ToPrimitive;

use crate::dimer::CouplingProfile;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum Crossings {
    /// Real mode numbers `k*` with `a(k*) = level`, ascending.
    Points(Vec<f64>),
    /// `a(k) - level` vanishes at every sampled mode.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tooth {
    pub level: Rational,
    pub crossings: Crossings,
}

/// Where the coupling profile meets each level.
///
/// The profile is sampled at the integer modes (with the zone edge
/// wrapping around); each sign change is refined by bisection on the
/// continuous interpolant, and samples that hit the level exactly are
/// reported as they are.
pub fn comb_teeth(profile: &CouplingProfile, m: usize, levels: &[Rational]) -> Vec<Tooth> {
    let half = (m / 2) as i64;
    levels
        .iter()
        .map(|level| {
            let target = level.to_f64().expect("finite level");
            let d = |k: f64| profile.value_at(k, m) - target;
            let samples: Vec<f64> = (-half..half).map(|k| d(k as f64)).collect();
            if samples.iter().all(|&v| v == 0.0) {
                return Tooth { level: level.clone(), crossings: Crossings::Degenerate };
            }
            let mut points = Vec::new();
            for (i, k) in (-half..half).enumerate() {
                let (v0, v1) = (samples[i], samples[(i + 1) % samples.len()]);
                if v0 == 0.0 {
                    points.push(k as f64);
                } else if v0 * v1 < 0.0 {
                    let mut root = bisect(&d, k as f64, (k + 1) as f64);
                    if root >= half as f64 {
                        root -= m as f64;
                    }
                    points.push(root);
                }
            }
            points.sort_by(f64::total_cmp);
            Tooth { level: level.clone(), crossings: Crossings::Points(points) }
        })
        .collect()
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if f(lo).abs() <= f(hi).abs() {
        lo
    } else {
        hi
    }
}
