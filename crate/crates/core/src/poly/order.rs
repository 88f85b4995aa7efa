use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Global monomial orders. Variables are ranked by their position in the
/// variable list, the first being largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Degrevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // Smaller exponent in the last differing variable wins.
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::Degrevlex;
        // x^4 > x^2 y^2 > y^4
        assert_eq!(o.cmp(&m(&[4, 0]), &m(&[2, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 2]), &m(&[0, 4])), Ordering::Greater);
        // xz^... : x y^2 vs x^2 z in (x,y,z): degrevlex prefers smaller z power
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 0, 0])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono3(), b in mono3(), w in mono3()) {
            for o in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&w), &b.mul(&w)));
                prop_assert_ne!(o.cmp(&Monomial::one(3), &a), Ordering::Greater);
            }
        }
    }
}
