//! Milnor and Tjurina numbers of plane (and higher) germs, the moduli gap
//! `mu - tau`, quasi-homogeneity, a catalog of normal forms and the X9
//! modulus sweep.
//!
//! Both numbers are dimensions of local algebras at the origin,
//! `Q[x]_m / I` with `I = J_f` (Milnor) or `I = J_f + <f>` (Tjurina). They
//! are computed as `dim Q[x] / (I + m^N)` once that sequence stops growing
//! in `N`: the sequence strictly increases until it settles and then stays
//! constant, so two equal values for `N < N'` mean it has settled. This
//! agrees with the global quotient dimension whenever the origin is the only
//! critical point, and stays correct for germs such as `x^5 + y^5 + x^2 y^2`
//! that have further critical points elsewhere.

mod catalog;
mod quasi;

pub use catalog::{normal_form, x9_germ, NormalFormSpec};
pub use quasi::{is_quasihomogeneous, QuasiHomogeneity};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{buchberger, quotient_dimension, GroebnerError, Ideal, LimitKind, Limits, QuotientDimension};
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("germ is constant")]
    ConstantGerm,
    #[error("origin is not a critical point of f")]
    NotCritical,
    #[error("invalid normal-form parameter: {0}")]
    InvalidParameter(String),
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl SingularityError {
    pub fn is_limit(&self) -> bool {
        matches!(self, SingularityError::Groebner(GroebnerError::LimitExceeded(_)))
    }
}

/// A polynomial with a critical point at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Germ {
    f: Polynomial,
    description: String,
}

impl Germ {
    pub fn new(f: Polynomial, description: impl Into<String>) -> Result<Self, SingularityError> {
        if f.is_constant() {
            return Err(SingularityError::ConstantGerm);
        }
        let origin = vec![Rational::from_integer(0.into()); f.nvars()];
        if f.evaluate(&origin)? != Rational::from_integer(0.into()) {
            return Err(SingularityError::NotCritical);
        }
        for i in 0..f.nvars() {
            if f.derivative_at(i).evaluate(&origin)? != Rational::from_integer(0.into()) {
                return Err(SingularityError::NotCritical);
            }
        }
        Ok(Germ { f, description: description.into() })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn variables(&self) -> &[String] {
        self.f.variables()
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn scaled(&self, c: &Rational) -> Germ {
        Germ { f: self.f.scale(c), description: self.description.clone() }
    }
}

/// Local-algebra dimension; `Infinite` marks a non-isolated singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LocalDimension {
    Finite(usize),
    Infinite,
}

impl LocalDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            LocalDimension::Finite(n) => Some(n),
            LocalDimension::Infinite => None,
        }
    }
}

/// Ideal generated by all nonzero first partials of the germ.
pub fn jacobian_ideal(g: &Germ, order: MonomialOrder) -> Result<Ideal, SingularityError> {
    let partials: Vec<Polynomial> = (0..g.f.nvars()).map(|i| g.f.derivative_at(i)).collect();
    Ideal::new(partials, order).map_err(|e| match e {
        GroebnerError::EmptyIdeal => SingularityError::ConstantGerm,
        other => other.into(),
    })
}

/// Computes local invariants with a fixed order and limits.
#[derive(Debug, Clone, Copy, Default)]
pub struct Analyzer {
    pub order: MonomialOrder,
    pub limits: Limits,
}

/// Local dimension of `ideal` at the origin plus a monomial basis of it.
pub fn local_dimension(ideal: &Ideal, limits: &Limits) -> Result<(LocalDimension, Vec<Monomial>), GroebnerError> {
    let global = buchberger(ideal, limits)?;
    if global.is_unit_ideal() {
        return Ok((LocalDimension::Finite(0), Vec::new()));
    }
    let global_dim = quotient_dimension(&global).dimension();
    let base = Ideal::new(global.elements().to_vec(), ideal.order())?;
    let cap = limits.max_polynomial_degree.max(1);
    let mut n = 1u32;
    let mut previous: Option<QuotientDimension> = None;
    loop {
        let current = quotient_dimension(&buchberger(&base.plus_maximal_power(n)?, limits)?);
        let dim = current.dimension().expect("m^n makes the quotient finite");
        if global_dim == Some(dim) || previous.as_ref().and_then(|p| p.dimension()) == Some(dim) {
            return Ok((LocalDimension::Finite(dim), current.standard_monomials().to_vec()));
        }
        if n >= cap {
            return match global_dim {
                // Settling is guaranteed by n = global_dim + 1.
                Some(_) => Err(GroebnerError::LimitExceeded(LimitKind::Degree(n))),
                None => Ok((LocalDimension::Infinite, Vec::new())),
            };
        }
        previous = Some(current);
        n = (n * 2).min(cap);
    }
}

impl Analyzer {
    pub fn new(order: MonomialOrder, limits: Limits) -> Self {
        Analyzer { order, limits }
    }

    pub fn milnor(&self, g: &Germ) -> Result<LocalDimension, SingularityError> {
        Ok(self.milnor_with_basis(g)?.0)
    }

    fn milnor_with_basis(&self, g: &Germ) -> Result<(LocalDimension, Vec<Monomial>), SingularityError> {
        Ok(local_dimension(&jacobian_ideal(g, self.order)?, &self.limits)?)
    }

    pub fn tjurina(&self, g: &Germ) -> Result<LocalDimension, SingularityError> {
        let ideal = jacobian_ideal(g, self.order)?.extended([g.f.clone()])?;
        Ok(local_dimension(&ideal, &self.limits)?.0)
    }

    pub fn moduli_gap(&self, g: &Germ) -> Result<i64, SingularityError> {
        match (self.milnor(g)?, self.tjurina(g)?) {
            (LocalDimension::Finite(mu), LocalDimension::Finite(tau)) => Ok(mu as i64 - tau as i64),
            _ => Err(SingularityError::NonIsolated),
        }
    }

    /// Dimension of the global quotient `Q[x]/J_f`, which counts every
    /// affine critical point, not just the origin.
    pub fn global_milnor(&self, g: &Germ) -> Result<QuotientDimension, SingularityError> {
        Ok(quotient_dimension(&buchberger(&jacobian_ideal(g, self.order)?, &self.limits)?))
    }

    pub fn report(&self, g: &Germ) -> Result<InvariantReport, SingularityError> {
        let (milnor, standard_monomials_mu) = self.milnor_with_basis(g)?;
        let tjurina = self.tjurina(g)?;
        let moduli_gap = match (milnor, tjurina) {
            (LocalDimension::Finite(mu), LocalDimension::Finite(tau)) => Some(mu as i64 - tau as i64),
            _ => None,
        };
        Ok(InvariantReport {
            milnor,
            tjurina,
            moduli_gap,
            quasihomogeneous: is_quasihomogeneous(g),
            standard_monomials_mu,
        })
    }
}

pub fn milnor_number(g: &Germ, limits: &Limits) -> Result<LocalDimension, SingularityError> {
    Analyzer::new(MonomialOrder::Degrevlex, *limits).milnor(g)
}

pub fn tjurina_number(g: &Germ, limits: &Limits) -> Result<LocalDimension, SingularityError> {
    Analyzer::new(MonomialOrder::Degrevlex, *limits).tjurina(g)
}

/// `mu - tau`; fails with [`SingularityError::NonIsolated`] if either is infinite.
pub fn moduli_gap(g: &Germ, limits: &Limits) -> Result<i64, SingularityError> {
    Analyzer::new(MonomialOrder::Degrevlex, *limits).moduli_gap(g)
}

pub fn analyze(g: &Germ, limits: &Limits) -> Result<InvariantReport, SingularityError> {
    Analyzer::new(MonomialOrder::Degrevlex, *limits).report(g)
}

/// Output of [`analyze`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub milnor: LocalDimension,
    pub tjurina: LocalDimension,
    /// `mu - tau` when both are finite.
    pub moduli_gap: Option<i64>,
    pub quasihomogeneous: Option<QuasiHomogeneity>,
    /// Monomial basis of the Milnor algebra (empty when infinite).
    pub standard_monomials_mu: Vec<Monomial>,
}

/// One row of a modulus sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub modulus: Rational,
    pub status: SweepStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepStatus {
    Ok { milnor: usize, tjurina: usize, moduli_gap: i64 },
    NonIsolated,
    LimitExceeded(LimitKind),
}

impl SweepStatus {
    pub fn label(&self) -> &'static str {
        match self {
            SweepStatus::Ok { .. } => "ok",
            SweepStatus::NonIsolated => "NonIsolated",
            SweepStatus::LimitExceeded(_) => "LimitExceeded",
        }
    }
}

/// Milnor/Tjurina numbers of `x^4 + y^4 + a x^2 y^2` for each modulus.
///
/// Degenerate moduli (`a = ±2`) produce a `NonIsolated` row instead of
/// failing the sweep. Rows are computed in parallel and returned in input
/// order.
pub fn modulus_sweep(a_values: &[Rational], limits: &Limits) -> Vec<SweepRow> {
    a_values
        .par_iter()
        .map(|a| {
            let germ = catalog::x9_germ(a);
            let status = match Analyzer::new(MonomialOrder::Degrevlex, *limits).report(&germ) {
                Ok(InvariantReport { milnor: LocalDimension::Finite(mu), tjurina: LocalDimension::Finite(tau), .. }) => {
                    SweepStatus::Ok { milnor: mu, tjurina: tau, moduli_gap: mu as i64 - tau as i64 }
                }
                Ok(_) => SweepStatus::NonIsolated,
                Err(SingularityError::Groebner(GroebnerError::LimitExceeded(k))) => SweepStatus::LimitExceeded(k),
                Err(e) => unreachable!("X9 germ is always valid: {e}"),
            };
            SweepRow { modulus: a.clone(), status }
        })
        .collect()
}
