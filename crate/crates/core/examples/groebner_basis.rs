//! Reduced Groebner bases, ideal membership and the standard monomials of a
//! zero-dimensional quotient.
//!
//! ```bash
//! cargo run --example groebner_basis
//! ```

use kcomb::groebner::{groebner_basis, ideal_membership, normal_form, quotient_dimension, Limits};
use kcomb::poly::{parse_polynomial, MonomialOrder};

fn main() {
    let vars = ["x", "y"];
    let gens = vec![
        parse_polynomial("x^2 + y^2 - 1", &vars).unwrap(),
        parse_polynomial("x - y", &vars).unwrap(),
    ];

    for order in [MonomialOrder::Lex, MonomialOrder::Degrevlex] {
        let gb = groebner_basis(gens.clone(), order, &Limits::default()).unwrap();
        println!("{order:?} basis:");
        for g in gb.elements() {
            println!("  {g}");
        }
        let q = quotient_dimension(&gb);
        let monos: Vec<String> = q.standard_monomials().iter().map(|m| m.display_with(gb.elements()[0].variables())).collect();
        println!("  dim Q[x,y]/I = {:?}, standard monomials {monos:?}", q.dimension());

        let f = parse_polynomial("x^3*y - x*y^3 + 2*x*y", &vars).unwrap();
        let r = normal_form(&f, gb.elements(), order).unwrap();
        println!("  {f}  reduces to  {r}");
        let member = parse_polynomial("x^3 - y^3", &vars).unwrap();
        println!("  x^3 - y^3 in I? {}", ideal_membership(&member, &gb));
    }

    // A one-dimensional quotient has no finite basis of standard monomials.
    let line = groebner_basis(vec![parse_polynomial("x*y", &vars).unwrap()], MonomialOrder::Degrevlex, &Limits::default()).unwrap();
    println!("dim Q[x,y]/(xy) = {:?}", quotient_dimension(&line).dimension());
}
