use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Germ, SingularityError};
use crate::poly::{format_rational, Monomial, MonomialOrder, Polynomial, Rational};

/// Normal forms of plane singularities, all in the variables `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormSpec {
    /// `x^(k+1) + y^2`, `k >= 1`
    A { k: u32 },
    /// `x^(k-1) + x y^2`, `k >= 4`
    D { k: u32 },
    E6,
    E7,
    E8,
    /// `x^4 + y^4 + a x^2 y^2`, `a^2 != 4`
    X9 { modulus: Rational },
    /// `x^p + y^q + x^2 y^2`, `1/p + 1/q < 1/2`
    T { p: u32, q: u32 },
}

impl fmt::Display for NormalFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalFormSpec::A { k } => write!(f, "A{k}"),
            NormalFormSpec::D { k } => write!(f, "D{k}"),
            NormalFormSpec::E6 => write!(f, "E6"),
            NormalFormSpec::E7 => write!(f, "E7"),
            NormalFormSpec::E8 => write!(f, "E8"),
            NormalFormSpec::X9 { modulus } => write!(f, "X9(a={})", format_rational(modulus)),
            NormalFormSpec::T { p, q } => write!(f, "T({p},{q})"),
        }
    }
}

fn xy() -> std::sync::Arc<[String]> {
    ["x".to_string(), "y".to_string()].into_iter().collect()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sum of `c * x^i * y^j` terms.
fn build(terms: &[(u32, u32, Rational)]) -> Polynomial {
    Polynomial::from_terms(
        xy(),
        MonomialOrder::Degrevlex,
        terms.iter().map(|(i, j, c)| (Monomial::new(vec![*i, *j]), c.clone())),
    )
    .expect("two variables")
}

/// `x^4 + y^4 + a x^2 y^2` for any `a`, including the degenerate `a = ±2`.
pub fn x9_germ(a: &Rational) -> Germ {
    let f = build(&[(4, 0, int(1)), (0, 4, int(1)), (2, 2, a.clone())]);
    Germ::new(f, format!("X9(a={})", format_rational(a))).expect("origin is critical")
}

/// Builds the germ of a catalog family after checking its parameters.
pub fn normal_form(spec: &NormalFormSpec) -> Result<Germ, SingularityError> {
    let bad = |msg: String| Err(SingularityError::InvalidParameter(msg));
    let f = match spec {
        NormalFormSpec::A { k } => {
            if *k < 1 {
                return bad(format!("A_k needs k >= 1, got {k}"));
            }
            build(&[(k + 1, 0, int(1)), (0, 2, int(1))])
        }
        NormalFormSpec::D { k } => {
            if *k < 4 {
                return bad(format!("D_k needs k >= 4, got {k}"));
            }
            build(&[(k - 1, 0, int(1)), (1, 2, int(1))])
        }
        NormalFormSpec::E6 => build(&[(3, 0, int(1)), (0, 4, int(1))]),
        NormalFormSpec::E7 => build(&[(3, 0, int(1)), (1, 3, int(1))]),
        NormalFormSpec::E8 => build(&[(3, 0, int(1)), (0, 5, int(1))]),
        NormalFormSpec::X9 { modulus } => {
            if modulus * modulus == int(4) {
                return bad(format!("X9 needs a^2 != 4, got a = {}", format_rational(modulus)));
            }
            return Ok(x9_germ(modulus));
        }
        NormalFormSpec::T { p, q } => {
            // 1/p + 1/q < 1/2  <=>  2(p + q) < p q
            if *p == 0 || *q == 0 || 2 * (p + q) >= p * q {
                return bad(format!("T_pq needs 1/p + 1/q < 1/2, got p = {p}, q = {q}"));
            }
            build(&[(*p, 0, int(1)), (0, *q, int(1)), (2, 2, Rational::one())])
        }
    };
    debug_assert!(!f.is_zero() && f.constant_term().is_zero());
    Germ::new(f, spec.to_string())
}
