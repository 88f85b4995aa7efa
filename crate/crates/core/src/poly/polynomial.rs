use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::rational_from_i64;
use super::{format_rational, Monomial, MonomialOrder, PolyError, Rational};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are stored in ascending order under `order`, so the leading term
/// is the last element. No stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<[String]>,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_in(vars.iter().map(|s| s.to_string()).collect())
    }

    pub(crate) fn zero_in(vars: Arc<[String]>) -> Self {
        Polynomial { vars, order: MonomialOrder::default(), terms: Vec::new() }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(p.nvars()), c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(vars: Arc<[String]>, order: MonomialOrder, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let nvars = vars.len();
        let mut collected: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(PolyError::ArityMismatch { expected: nvars, found: m.nvars() });
            }
            collected.push((m, c));
        }
        collected.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(collected.len());
        for (m, c) in collected {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { vars, order, terms })
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn variable(vars: &[&str], name: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        p.terms.push((Monomial::pure_power(p.nvars(), idx, 1), Rational::one()));
        Ok(p)
    }

    pub fn monomial_in(vars: Arc<[String]>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub(crate) fn vars_arc(&self) -> Arc<[String]> {
        self.vars.clone()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Same polynomial with terms re-sorted under `order`.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if self.order != order {
            self.order = order;
            self.terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        }
        self
    }

    /// Terms from leading to trailing.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter().rev().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    fn check_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch { left: self.vars.join(","), right: other.vars.join(",") })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial { vars: self.vars.clone(), order: self.order, terms: Vec::new() };
        }
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial { vars: self.vars.clone(), order: self.order, terms: Vec::new() };
        }
        // Multiplying by a monomial preserves the order of terms.
        Polynomial {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let other_terms;
        let rhs: &[(Monomial, Rational)] = if other.order == self.order {
            &other.terms
        } else {
            other_terms = other.clone().with_order(self.order).terms;
            &other_terms
        };
        Polynomial { vars: self.vars.clone(), order: self.order, terms: merge(self.order, &self.terms, rhs) }
    }

    /// `self - c * m * g`, the basic reduction step.
    pub(crate) fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.order, g.order);
        let scaled: Vec<(Monomial, Rational)> = g.terms.iter().map(|(t, k)| (t.mul(m), -(k * c))).collect();
        Polynomial { vars: self.vars.clone(), order: self.order, terms: merge(self.order, &self.terms, &scaled) }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let other = if other.order == self.order { other.clone() } else { other.clone().with_order(self.order) };
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            let row: Vec<(Monomial, Rational)> = other.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect();
            acc = merge(self.order, &acc, &row);
        }
        Polynomial { vars: self.vars.clone(), order: self.order, terms: acc }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::monomial_in(self.vars.clone(), Monomial::one(self.nvars()), Rational::one())
            .with_order(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let idx = self.var_index(var)?;
        Ok(self.derivative_at(idx))
    }

    pub(crate) fn derivative_at(&self, idx: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[idx] > 0).map(|(m, c)| {
            let e = m.exponents()[idx];
            let mut ex = m.exponents().to_vec();
            ex[idx] -= 1;
            (Monomial::new(ex), c * rational_from_i64(e as i64))
        });
        Polynomial::from_terms(self.vars.clone(), self.order, terms).expect("arity preserved")
    }

    /// Exact value at a rational point, one value per variable.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Removes the rational content: divides by gcd(numerators)/lcm(denominators),
    /// leaving coprime integer coefficients with a positive leading one.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = num_bigint::BigInt::zero();
        let mut l = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut content = Rational::new(g, l);
        if self.leading_coeff().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        if content.is_one() {
            self.clone()
        } else {
            self.scale(&content.recip())
        }
    }

    /// Drops the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop()
    }

    /// Builds from terms already sorted ascending under `order` without zeros.
    pub(crate) fn from_sorted(vars: Arc<[String]>, order: MonomialOrder, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Less));
        Polynomial { vars, order, terms }
    }
}

fn merge(
    order: MonomialOrder,
    a: &[(Monomial, Rational)],
    b: &[(Monomial, Rational)],
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars != other.vars {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.clone().with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono = m.display_with(&self.vars);
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, parse_rational};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn ring_op_examples() {
        assert_eq!(p("x+y").checked_add(&p("x-y")).unwrap(), p("2*x"));
        assert_eq!(p("x+y").checked_mul(&p("x-y")).unwrap(), p("x^2-y^2"));
        assert!(p("x^2*y").scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn variable_mismatch_is_error() {
        let q = parse_polynomial("x", &["x", "z"]).unwrap();
        assert!(matches!(p("x").checked_add(&q), Err(PolyError::VariableMismatch { .. })));
        assert!(matches!(p("x").checked_mul(&q), Err(PolyError::VariableMismatch { .. })));
    }

    #[test]
    fn derivative_examples() {
        let f = p("x^4 + y^4 + 2*x^2*y^2");
        assert_eq!(f.partial_derivative("x").unwrap(), p("4*x^3 + 4*x*y^2"));
        assert_eq!(p("x^2+y^2").partial_derivative("y").unwrap(), p("2*y"));
        assert!(p("y^5").partial_derivative("x").unwrap().is_zero());
        assert!(matches!(f.partial_derivative("z"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn evaluate_examples() {
        let r = |s: &str| parse_rational(s).unwrap();
        assert_eq!(p("x^2+y^2").evaluate(&[r("3"), r("4")]).unwrap(), r("25"));
        assert_eq!(p("x^4+y^4+2*x^2*y^2").evaluate(&[r("1"), r("1")]).unwrap(), r("4"));
        assert_eq!(p("x*y + 7/3").evaluate(&[r("0"), r("0")]).unwrap(), r("7/3"));
        assert!(matches!(p("x").evaluate(&[r("1")]), Err(PolyError::ArityMismatch { .. })));
    }

    #[test]
    fn canonical_format() {
        assert_eq!(p("y^4 + (3/2)*x^2*y^2 + x^4").to_string(), "x^4 + 3/2*x^2*y^2 + y^4");
        assert_eq!(p("-x + 1").to_string(), "-x + 1");
        assert_eq!(p("0*x").to_string(), "0");
        assert_eq!(p("-1/2").to_string(), "-1/2");
    }

    #[test]
    fn primitive_and_monic() {
        let f = p("4/3*x^3 + 2/9*x*y^2");
        assert_eq!(f.primitive(), p("6*x^3 + x*y^2"));
        assert_eq!(p("-2*x + 4").primitive(), p("x - 2"));
        assert_eq!(f.monic(), p("x^3 + 1/6*x*y^2"));
    }

    #[test]
    fn order_does_not_affect_equality() {
        let f = p("x + y^2");
        let g = f.clone().with_order(MonomialOrder::Lex);
        assert_eq!(f, g);
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[1, 0]);
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[0, 2]);
    }
}
