//! Factorization of the radicand and the case of each prime dividing 3a.
//!
//! cargo run --example classify_primes -- 1000000007000000063

use nonic::{classify_prime, index_valuation, Int, NonicField};

fn main() -> nonic::Result<()> {
    let a: Int = std::env::args().nth(1).map_or(Int::from(-414_720i64), |s| s.parse().expect("integer"));
    let field = NonicField::new(a)?;
    if field.was_normalized() {
        println!("{} normalized to {}", field.raw(), field.a());
    }
    println!("a = {}", field.factorization());
    for p in field.relevant_primes() {
        let case = classify_prime(&field, &p);
        println!("p = {p}: case {}, v_p(a) = {}, v_p(I) = {}", case.tag, field.v(&p), index_valuation(&field, &case));
    }
    Ok(())
}
