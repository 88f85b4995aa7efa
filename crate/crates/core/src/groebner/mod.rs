//! Buchberger's algorithm over the rationals, reduced bases, ideal
//! membership and quotient-algebra dimension by standard monomials.

mod quotient;

pub use quotient::{quotient_dimension, QuotientDimension};

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("ideal has no nonzero generators")]
    EmptyIdeal,
    #[error("generators do not share one variable list")]
    VariableMismatch,
    #[error("basis is empty")]
    EmptyBasis,
    #[error("limit exceeded: {0}")]
    LimitExceeded(LimitKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitKind {
    /// An intermediate polynomial exceeded the degree bound.
    Degree(u32),
    /// More critical pairs were processed than allowed.
    PairCount(usize),
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitKind::Degree(d) => write!(f, "polynomial degree {d} above max_polynomial_degree"),
            LimitKind::PairCount(n) => write!(f, "{n} pairs processed, above max_pair_count"),
        }
    }
}

/// Termination guard for [`buchberger`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Limits {
    pub max_polynomial_degree: u32,
    pub max_pair_count: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_polynomial_degree: 60, max_pair_count: 20_000 }
    }
}

/// A polynomial ideal given by generators and the order used to compute with it.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl Ideal {
    /// Drops zero generators and re-sorts the rest under `order`.
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
        let first = generators.first().ok_or(GroebnerError::EmptyIdeal)?;
        if generators.iter().any(|g| g.variables() != first.variables()) {
            return Err(GroebnerError::VariableMismatch);
        }
        Ok(Ideal { generators, order })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        self.generators[0].variables()
    }

    /// Adds generators (zeros are ignored).
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(gens, self.order)
    }

    /// The ideal plus the `n`-th power of the maximal ideal at the origin,
    /// i.e. every monomial of total degree `n`.
    pub fn plus_maximal_power(&self, n: u32) -> Result<Ideal, GroebnerError> {
        let vars: Arc<[String]> = self.generators[0].variables().iter().cloned().collect();
        let monomials = monomials_of_degree(vars.len(), n)
            .into_iter()
            .map(|m| Polynomial::monomial_in(vars.clone(), m, num_traits::One::one()));
        self.extended(monomials)
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `n`.
pub fn monomials_of_degree(nvars: usize, n: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if n == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(nvars, n, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// A Groebner basis; when `reduced`, elements are monic, mutually
/// irreducible, and sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.elements.first().map(|g| g.nvars()).unwrap_or(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().map(|m| m.is_one()).unwrap_or(false))
    }
}

/// Multivariate division remainder of `f` by `basis` under `order`.
///
/// The remainder has no term divisible by any leading monomial of the
/// basis, and `f - remainder` lies in the ideal the basis generates.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial, GroebnerError> {
    if basis.is_empty() {
        return Err(GroebnerError::EmptyBasis);
    }
    if basis.iter().any(|g| g.variables() != f.variables()) {
        return Err(GroebnerError::VariableMismatch);
    }
    let sorted: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.clone().with_order(order)).collect();
    Ok(reduce(f.clone().with_order(order), &sorted))
}

/// Full reduction; all polynomials must share variables and order.
fn reduce(mut p: Polynomial, basis: &[Polynomial]) -> Polynomial {
    let vars = p.vars_arc();
    let order = p.order();
    let mut remainder = Vec::new();
    while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let glm = g.leading_monomial()?;
            lm.div(glm).map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => {
                let c = lc / g.leading_coeff().expect("nonzero");
                p = p.sub_scaled(&c, &q, g);
            }
            None => {
                remainder.push(p.pop_leading().expect("nonempty"));
            }
        }
    }
    remainder.reverse();
    Polynomial::from_sorted(vars, order, remainder)
}

/// True iff `f` reduces to zero against the reduced basis.
pub fn ideal_membership(f: &Polynomial, basis: &GroebnerBasis) -> bool {
    if basis.elements.is_empty() {
        return f.is_zero();
    }
    normal_form(f, &basis.elements, basis.order).map(|r| r.is_zero()).unwrap_or(false)
}

/// S-polynomial of `f` and `g` (both in the same order).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).expect("lcm"), &gc.clone());
    let b = g.mul_term(&l.div(gm).expect("lcm"), &fc.clone());
    a.add_unchecked(&b.neg())
}

/// Computes the reduced Groebner basis of `ideal`.
///
/// Uses the coprime-leading-term and chain criteria to skip pairs, keeps
/// intermediate polynomials primitive, and fails with
/// [`GroebnerError::LimitExceeded`] rather than running away.
pub fn buchberger(ideal: &Ideal, limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
    let order = ideal.order;
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in &ideal.generators {
        check_degree(g, limits)?;
        let g = g.primitive();
        if g.is_constant() {
            return Ok(unit_basis(&g, order));
        }
        basis.push(g);
    }
    // Pairs (i, j) with i < j still to process, and pairs already handled.
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pending.is_empty() {
        // Normal selection strategy: smallest lcm first.
        let idx = (0..pending.len())
            .min_by(|&a, &b| {
                let la = pair_lcm(&basis, pending[a]);
                let lb = pair_lcm(&basis, pending[b]);
                order.cmp(&la, &lb).then_with(|| pending[a].cmp(&pending[b]))
            })
            .expect("nonempty");
        let (i, j) = pending.swap_remove(idx);
        done.insert((i, j));
        processed += 1;
        if processed > limits.max_pair_count {
            return Err(GroebnerError::LimitExceeded(LimitKind::PairCount(processed)));
        }
        let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && done.contains(&ordered(i, k))
                && done.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(s, &basis);
        if r.is_zero() {
            continue;
        }
        check_degree(&r, limits)?;
        let r = r.primitive();
        if r.is_constant() {
            return Ok(unit_basis(&r, order));
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pending.push((k, n));
        }
    }
    Ok(reduce_basis(basis, order))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
}

fn check_degree(p: &Polynomial, limits: &Limits) -> Result<(), GroebnerError> {
    match p.total_degree() {
        Some(d) if d > limits.max_polynomial_degree => Err(GroebnerError::LimitExceeded(LimitKind::Degree(d))),
        _ => Ok(()),
    }
}

fn unit_basis(c: &Polynomial, order: MonomialOrder) -> GroebnerBasis {
    GroebnerBasis { elements: vec![c.monic().with_order(order)], order, reduced: true }
}

/// Minimalizes, inter-reduces, normalizes to monic and sorts.
fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        // Sorted ascending, so any divisor of lm is already present.
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let lead = minimal[i].leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        // The leading term is irreducible by minimality; reduce the tail.
        let mut tail = minimal[i].clone();
        tail.pop_leading();
        let tail = if others.is_empty() { tail } else { reduce(tail, &others) };
        let head = Polynomial::monomial_in(tail.vars_arc(), lead.0, lead.1).with_order(order);
        reduced.push(head.add_unchecked(&tail).monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    GroebnerBasis { elements: reduced, order, reduced: true }
}

/// Computes the reduced basis of the ideal generated by `generators`.
pub fn groebner_basis(
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis, GroebnerError> {
    buchberger(&Ideal::new(generators, order)?, limits)
}
