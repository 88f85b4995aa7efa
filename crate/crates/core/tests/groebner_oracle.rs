mod common;

use kcomb::groebner::{
    buchberger, groebner_basis, ideal_membership, normal_form, quotient_dimension, s_polynomial, Ideal, Limits,
};
use kcomb::poly::{MonomialOrder, Polynomial};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ideals(count: usize, seed: u64) -> Vec<Vec<Polynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| common::random_ideal(&mut rng)).collect()
}

fn oracle_degree(nvars: usize) -> u32 {
    match nvars {
        1 => 20,
        2 => 24,
        _ => 26,
    }
}

#[test]
fn quotient_dimension_matches_linear_algebra_oracle() {
    for (i, gens) in ideals(60, 11).into_iter().enumerate() {
        if gens.iter().all(|g| g.is_zero()) {
            continue;
        }
        let gb = groebner_basis(gens.clone(), MonomialOrder::Degrevlex, &Limits::default()).unwrap();
        let dim = quotient_dimension(&gb).dimension();
        let oracle = common::global_dimension_oracle(&gens, oracle_degree(gens[0].nvars()));
        assert_eq!(dim, oracle, "ideal #{i}: {gens:?}");
    }
}

#[test]
fn buchberger_criterion_holds_after_the_fact() {
    for gens in ideals(80, 12) {
        for order in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
            let gb = groebner_basis(gens.clone(), order, &Limits::default()).unwrap();
            let el = gb.elements();
            for i in 0..el.len() {
                for j in i + 1..el.len() {
                    assert!(normal_form(&s_polynomial(&el[i], &el[j]), el, order).unwrap().is_zero());
                }
            }
            for g in gens.iter().filter(|g| !g.is_zero()) {
                assert!(ideal_membership(g, &gb), "generator {g} not in its own ideal");
            }
            // Reduced: monic and no term divisible by another leading monomial.
            for (i, g) in el.iter().enumerate() {
                assert!(num_traits::One::is_one(g.leading_coeff().unwrap()));
                for (j, h) in el.iter().enumerate() {
                    if i != j {
                        let lm = h.leading_monomial().unwrap();
                        assert!(g.terms().all(|(m, _)| !lm.divides(m)));
                    }
                }
            }
        }
    }
}

#[test]
fn reduced_basis_is_independent_of_generator_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for gens in ideals(80, 13) {
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let a = groebner_basis(gens, MonomialOrder::Degrevlex, &Limits::default()).unwrap();
        let b = groebner_basis(shuffled, MonomialOrder::Degrevlex, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn lex_and_degrevlex_dimensions_agree() {
    for gens in ideals(100, 14) {
        let d = |o| quotient_dimension(&groebner_basis(gens.clone(), o, &Limits::default()).unwrap()).dimension();
        assert_eq!(d(MonomialOrder::Degrevlex), d(MonomialOrder::Lex), "{gens:?}");
    }
}

#[test]
fn normal_form_is_idempotent_and_stays_in_coset() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for gens in ideals(60, 15) {
        let ideal = Ideal::new(gens.clone(), MonomialOrder::Degrevlex).unwrap();
        let gb = buchberger(&ideal, &Limits::default()).unwrap();
        let f = common::random_ideal(&mut rng)
            .into_iter()
            .find(|p| p.variables() == gens[0].variables())
            .unwrap_or_else(|| gens[0].pow(2));
        let r = normal_form(&f, gb.elements(), gb.order()).unwrap();
        assert_eq!(normal_form(&r, gb.elements(), gb.order()).unwrap(), r);
        assert!(ideal_membership(&f.checked_sub(&r).unwrap(), &gb));
    }
}
