use kcomb::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

const VARS: &[&str] = &["x", "y", "z"];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn polynomial(max_degree: u32) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((proptest::collection::vec(0u32..=max_degree, 3), rational()), 0..6).prop_map(
        move |terms| {
            let terms = terms.into_iter().map(|(mut e, c)| {
                // Keep total degree within bound.
                while e.iter().sum::<u32>() > max_degree {
                    let i = e.iter().position(|&v| v > 0).unwrap();
                    e[i] -= 1;
                }
                (Monomial::new(e), c)
            });
            Polynomial::from_terms(VARS.iter().map(|s| s.to_string()).collect(), MonomialOrder::Degrevlex, terms)
                .unwrap()
        },
    )
}

fn all_reduced(p: &Polynomial) -> bool {
    p.terms().all(|(_, c)| c.numer().gcd(c.denom()).is_one() && c.denom() > &BigInt::from(0) && c.numer() != &BigInt::from(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(p in polynomial(4), q in polynomial(4), r in polynomial(4)) {
        let add = |a: &Polynomial, b: &Polynomial| a.checked_add(b).unwrap();
        let mul = |a: &Polynomial, b: &Polynomial| a.checked_mul(b).unwrap();
        prop_assert_eq!(add(&add(&p, &q), &r), add(&p, &add(&q, &r)));
        prop_assert_eq!(mul(&mul(&p, &q), &r), mul(&p, &mul(&q, &r)));
        prop_assert_eq!(add(&p, &q), add(&q, &p));
        prop_assert_eq!(mul(&p, &q), mul(&q, &p));
        prop_assert_eq!(mul(&p, &add(&q, &r)), add(&mul(&p, &q), &mul(&p, &r)));
        prop_assert!(p.checked_sub(&p).unwrap().is_zero());
        let pq = mul(&p, &q);
        prop_assert!(all_reduced(&pq));
        prop_assert!(all_reduced(&add(&p, &r)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn format_parse_round_trip(p in polynomial(5)) {
        let text = p.to_string();
        let back = parse_polynomial(&text, VARS).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn lex_format_round_trip(p in polynomial(5)) {
        let p = p.with_order(MonomialOrder::Lex);
        let back = Polynomial::parse_with_order(&p.to_string(), VARS, MonomialOrder::Lex).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn derivative_is_linear_and_leibniz(p in polynomial(4), q in polynomial(4), c in rational()) {
        for v in VARS {
            let d = |a: &Polynomial| a.partial_derivative(v).unwrap();
            let lin = p.scale(&c).checked_add(&q).unwrap();
            prop_assert_eq!(d(&lin), d(&p).scale(&c).checked_add(&d(&q)).unwrap());
            let prod = p.checked_mul(&q).unwrap();
            let leibniz = d(&p).checked_mul(&q).unwrap().checked_add(&p.checked_mul(&d(&q)).unwrap()).unwrap();
            prop_assert_eq!(d(&prod), leibniz);
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in polynomial(3), q in polynomial(3), pt in proptest::collection::vec(rational(), 3)) {
        let sum = p.checked_add(&q).unwrap().evaluate(&pt).unwrap();
        let prod = p.checked_mul(&q).unwrap().evaluate(&pt).unwrap();
        let (a, b) = (p.evaluate(&pt).unwrap(), q.evaluate(&pt).unwrap());
        prop_assert_eq!(sum, &a + &b);
        prop_assert_eq!(prod, a * b);
    }
}

#[test]
fn constant_term_at_origin() {
    let p = parse_polynomial("3*x^2*y - 5/7 + z", VARS).unwrap();
    let origin = vec![Rational::from_integer(0.into()); 3];
    assert_eq!(p.evaluate(&origin).unwrap(), p.constant_term());
}
