//! Gluing p-integral bases into one global basis. The canonical form does
//! not depend on the order of the primes.
//!
//! cargo run --example glue_bases -- 108

use nonic::{canonicalize, glue, local_data, NonicField};

fn main() -> nonic::Result<()> {
    let a: i64 = std::env::args().nth(1).map_or(108, |s| s.parse().expect("integer"));
    let field = NonicField::new(a)?;
    let mut bases: Vec<_> = local_data(&field)?.into_iter().map(|(_, _, b)| b).collect();
    for b in &bases {
        println!("p = {}: exponents {:?}", b.p, b.exponents());
    }
    let g = glue(&bases, field.a())?;
    println!("glued:\n{g}");
    println!("denominators {:?}, index {}", g.denominators().iter().map(|d| d.to_string()).collect::<Vec<_>>(), g.index());
    bases.reverse();
    println!("reversed order gives same basis: {}", glue(&bases, field.a())? == g);
    let mut gens = g.elements().to_vec();
    gens.rotate_left(3);
    println!("canonical form is stable: {}", canonicalize(&gens)? == g);
    Ok(())
}
