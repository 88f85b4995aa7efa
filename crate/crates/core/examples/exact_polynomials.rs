//! Parse, combine and differentiate polynomials with exact rational coefficients.
//!
//! ```bash
//! cargo run --example exact_polynomials
//! ```

use kcomb::poly::{parse_polynomial, parse_rational, MonomialOrder, Polynomial};

fn main() {
    let vars = ["x", "y"];
    let f = parse_polynomial("x^4 + y^4 + 3/2*x^2*y^2", &vars).unwrap();
    let g = parse_polynomial("(x - y)^2", &vars).unwrap();

    println!("f        = {f}");
    println!("g        = {g}");
    println!("f + g    = {}", f.checked_add(&g).unwrap());
    println!("f * g    = {}", f.checked_mul(&g).unwrap());
    println!("df/dx    = {}", f.partial_derivative("x").unwrap());
    println!("df/dy    = {}", f.partial_derivative("y").unwrap());

    // Same polynomial, different term order.
    let lex = Polynomial::parse_with_order("y^3 + x*y + x^2", &vars, MonomialOrder::Lex).unwrap();
    let grevlex = lex.clone().with_order(MonomialOrder::Degrevlex);
    println!("lex      : {lex}");
    println!("degrevlex: {grevlex}");

    let half = parse_rational("1/2").unwrap();
    let point = vec![half.clone(), -half];
    println!("f(1/2, -1/2) = {}", kcomb::poly::format_rational(&f.evaluate(&point).unwrap()));

    match parse_polynomial("x^2 + *y", &vars) {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error at {:?}: {e}", e.position()),
    }
}
