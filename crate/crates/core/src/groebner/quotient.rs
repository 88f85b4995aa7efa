use super::GroebnerBasis;
use crate::poly::Monomial;

/// Vector-space dimension of `k[x] / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite { dimension: usize, standard_monomials: Vec<Monomial> },
    Infinite,
}

impl QuotientDimension {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite { dimension, .. } => Some(*dimension),
            QuotientDimension::Infinite => None,
        }
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        match self {
            QuotientDimension::Finite { standard_monomials, .. } => standard_monomials,
            QuotientDimension::Infinite => &[],
        }
    }
}

/// Counts the standard monomials of a Groebner basis.
///
/// The quotient is finite exactly when every variable has a pure power
/// among the leading monomials; the standard monomials then fit in the box
/// bounded by those powers. They are returned in ascending order of the
/// basis' monomial order.
pub fn quotient_dimension(basis: &GroebnerBasis) -> QuotientDimension {
    if basis.is_unit_ideal() {
        return QuotientDimension::Finite { dimension: 0, standard_monomials: Vec::new() };
    }
    let nvars = basis.nvars();
    let leading = basis.leading_monomials();
    let mut bounds: Vec<Option<u32>> = vec![None; nvars];
    for m in &leading {
        if let Some((var, e)) = m.as_pure_power() {
            bounds[var] = Some(bounds[var].map_or(e, |b| b.min(e)));
        }
    }
    let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
        return QuotientDimension::Infinite;
    };
    let mut standard = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leading.iter().any(|l| l.divides(&m)) {
            standard.push(m);
        }
        // Odometer over the box.
        let mut i = 0;
        loop {
            if i == nvars {
                let order = basis.order();
                standard.sort_by(|a, b| order.cmp(a, b));
                return QuotientDimension::Finite { dimension: standard.len(), standard_monomials: standard };
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, Limits};
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn dim(gens: &[&str]) -> QuotientDimension {
        let gens = gens.iter().map(|s| parse_polynomial(s, &["x", "y"]).unwrap()).collect();
        quotient_dimension(&groebner_basis(gens, MonomialOrder::Degrevlex, &Limits::default()).unwrap())
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn maximal_ideal() {
        assert_eq!(dim(&["x", "y"]), QuotientDimension::Finite { dimension: 1, standard_monomials: vec![m(&[0, 0])] });
    }

    #[test]
    fn box_of_exponents() {
        let d = dim(&["x^2", "y^3"]);
        assert_eq!(d.dimension(), Some(6));
        let mut got = d.standard_monomials().to_vec();
        got.sort();
        let mut want = vec![m(&[0, 0]), m(&[1, 0]), m(&[0, 1]), m(&[1, 1]), m(&[0, 2]), m(&[1, 2])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn non_isolated() {
        assert_eq!(dim(&["x"]), QuotientDimension::Infinite);
    }

    #[test]
    fn unit_ideal_has_dimension_zero() {
        assert_eq!(dim(&["x", "x - 1"]).dimension(), Some(0));
        // A single point away from the origin still counts.
        assert_eq!(dim(&["x + 1", "y"]).dimension(), Some(1));
    }
}
