/// Residual of the flat-state relation `rho (1 + (detuning - rho)^2) - power`.
pub fn steady_state_residual(detuning: f64, power: f64, rho: f64) -> f64 {
    rho * (1.0 + (detuning - rho).powi(2)) - power
}

/// Intracavity powers `rho >= 0` of the flat steady states of a single
/// resonator with the given detuning and pump power, ascending. A double
/// root is listed twice.
pub fn homogeneous_steady_states(detuning: f64, power: f64) -> Vec<f64> {
    assert!(power >= 0.0 && power.is_finite() && detuning.is_finite(), "power must be finite and >= 0");
    if power == 0.0 {
        return vec![0.0];
    }
    let f = |rho: f64| steady_state_residual(detuning, power, rho);
    let tol = 1e-13 * power.max(1.0);
    let snap = |v: f64| if v.abs() <= tol { 0.0 } else { v };
    // All roots lie in (0, power] since f(0) = -power and f(rho) >= rho - power.
    let disc = detuning * detuning - 3.0;
    let mut critical: Vec<f64> = if disc >= 0.0 {
        let r = disc.sqrt();
        vec![(2.0 * detuning - r) / 3.0, (2.0 * detuning + r) / 3.0]
    } else {
        Vec::new()
    };
    critical.retain(|&c| c > 0.0 && c < power);
    critical.dedup();

    let mut roots = Vec::new();
    let mut knots = vec![0.0];
    knots.extend(&critical);
    knots.push(power);
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (snap(f(lo)), snap(f(hi)));
        if flo * fhi < 0.0 {
            roots.push(bisect(&f, lo, hi));
        }
    }
    for &c in &critical {
        if snap(f(c)) == 0.0 {
            roots.push(c);
            roots.push(c);
        }
    }
    if snap(f(power)) == 0.0 && !roots.iter().any(|&r| (r - power).abs() <= tol) {
        roots.push(power);
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let sign_lo = f(lo).signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid).signum() == sign_lo {
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
