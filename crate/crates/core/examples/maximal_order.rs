//! Round-2 maximal order of Q(θ), θ⁹ = a, started from Z[θ].
//!
//! cargo run --example maximal_order -- 5103

use nonic::oracle::{maximal_order_with_log, module_index, trace_discriminant};
use nonic::NonicField;

fn main() -> nonic::Result<()> {
    let a: i64 = std::env::args().nth(1).map_or(5103, |s| s.parse().expect("integer"));
    let field = NonicField::new(a)?;
    let max = maximal_order_with_log(&field)?;
    for step in &max.steps {
        println!("p = {}: [O : Z[θ]] = {}", step.p, step.index);
    }
    println!("index {}", module_index(&max.order)?);
    println!("basis:\n{}", max.order.to_global_basis()?);
    println!("d_K = {}", trace_discriminant(&max.order, field.a()));
    println!("ring: {}", max.order.is_ring(field.a()));
    Ok(())
}
