use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Germ;
use crate::poly::Rational;

/// Weights `w` with `sum_i w_i u_i = 1` for every exponent vector `u` of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiHomogeneity {
    /// Weights normalized to weighted degree 1.
    pub weights: Vec<Rational>,
}

impl QuasiHomogeneity {
    pub fn degree(&self) -> Rational {
        Rational::one()
    }

    /// Smallest integer weights and the matching integer degree,
    /// e.g. `(1, 1), 4` for `x^4 + y^4 + a x^2 y^2`.
    pub fn integral(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self.weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled: Vec<BigInt> = self.weights.iter().map(|w| (w * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = scaled.iter().fold(lcm.clone(), |acc, w| acc.gcd(w));
        (scaled.iter().map(|w| w / &g).collect(), lcm / g)
    }
}

/// Solves the weight system over Q; `None` when it is inconsistent.
///
/// Underdetermined systems get free weights set to zero; any solution gives
/// the Euler relation `f = sum_i w_i x_i df/dx_i`.
pub fn is_quasihomogeneous(g: &Germ) -> Option<QuasiHomogeneity> {
    let f = g.polynomial();
    let n = f.nvars();
    // Augmented rows [u_1 .. u_n | 1].
    let mut rows: Vec<Vec<Rational>> = f
        .terms()
        .map(|(m, _)| {
            let mut r: Vec<Rational> = m.exponents().iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect();
            r.push(Rational::one());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[rank].clone();
                for (v, pv) in rows[r].iter_mut().zip(pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut weights = vec![Rational::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        weights[col] = rows[r][n].clone();
    }
    Some(QuasiHomogeneity { weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, parse_rational};

    fn qh(s: &str) -> Option<QuasiHomogeneity> {
        is_quasihomogeneous(&Germ::new(parse_polynomial(s, &["x", "y"]).unwrap(), s).unwrap())
    }

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn x9_weights() {
        let q = qh("x^4 + y^4 + 7/3*x^2*y^2").unwrap();
        assert_eq!(q.weights, vec![r("1/4"), r("1/4")]);
        assert_eq!(q.integral(), (vec![BigInt::from(1), BigInt::from(1)], BigInt::from(4)));
    }

    #[test]
    fn brieskorn_weights() {
        let q = qh("x^3 + y^5").unwrap();
        assert_eq!(q.weights, vec![r("1/3"), r("1/5")]);
        assert_eq!(q.degree(), r("1"));
        assert_eq!(q.integral(), (vec![BigInt::from(5), BigInt::from(3)], BigInt::from(15)));
    }

    #[test]
    fn t55_is_not_quasihomogeneous() {
        assert_eq!(qh("x^5 + y^5 + x^2*y^2"), None);
    }

    #[test]
    fn underdetermined_system() {
        let q = qh("x^2*y").unwrap();
        // One equation, two unknowns: 2 w_x + w_y = 1.
        assert_eq!(&q.weights[0] * r("2") + &q.weights[1], r("1"));
    }
}
