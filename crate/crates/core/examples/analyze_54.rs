//! Integral basis and discriminant of Q(θ), θ⁹ = 54, from the closed formulas.
//!
//! cargo run --example analyze_54

use nonic::{discriminant, glue, local_data, total_index, NonicField};

fn main() -> nonic::Result<()> {
    let field = NonicField::new(54)?;
    println!("a = {}", field.factorization());
    let local = local_data(&field)?;
    for (case, v, basis) in &local {
        println!("p = {}: case {}, v_p(I) = {v}, exponents {:?}", case.p, case.tag, basis.exponents());
        for (j, slot) in basis.slots.iter().enumerate() {
            println!("  [{j}] ({}) / {}^{}", slot.numerator, case.p, slot.exponent);
        }
    }
    let bases: Vec<_> = local.into_iter().map(|(_, _, b)| b).collect();
    let global = glue(&bases, field.a())?;
    println!("global basis:\n{global}");
    println!("I = {}", total_index(&field));
    println!("d_K = {}", discriminant(&field)?);
    Ok(())
}
