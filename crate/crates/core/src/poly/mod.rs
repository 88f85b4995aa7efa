//! Exact sparse multivariate polynomials over the rationals.
//!
//! Coefficients are [`Rational`] (arbitrary precision, always in lowest
//! terms). A [`Polynomial`] carries its variable names and the monomial
//! order under which its terms are kept sorted; arithmetic between
//! polynomials over different variable lists is an error.

mod monomial;
mod order;
mod parser;
mod polynomial;
mod rational;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parser::{parse_polynomial, ParseError};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational, Rational};

use thiserror::Error;

/// Errors raised by polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} values, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
}
