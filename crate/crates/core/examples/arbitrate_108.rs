//! The 2-adic part of x⁹ − 108 settled by the maximal-order oracle: the
//! index formula, the round-2 order and the trace form all agree on
//! v₂(I) = 4 and d_K = 2⁸·3¹⁸, and θ⁴/2 is not integral.
//!
//! cargo run --example arbitrate_108

use nonic::arith::vp;
use nonic::oracle::{is_algebraic_integer_by_powers, maximal_order_with_log, module_index, trace_discriminant};
use nonic::reference::{discrepancy_notes, EXAMPLE_108_DISC, EXAMPLE_108_V2};
use nonic::{classify_prime, discriminant, index_valuation, is_algebraic_integer, Int, NonicField, Rat, ThetaPoly};

fn main() -> nonic::Result<()> {
    let field = NonicField::new(108)?;
    let two = Int::from(2);
    let v2 = index_valuation(&field, &classify_prime(&field, &two));
    println!("closed form: v_2(I) = {v2} (published {EXAMPLE_108_V2})");

    let max = maximal_order_with_log(&field)?;
    for step in &max.steps {
        println!("round 2 at p = {}: index {}", step.p, step.index);
    }
    let index = module_index(&max.order)?;
    println!("oracle: [O_K : Z[θ]] = {index}, v_2 = {}", vp(&index, &two)?);

    let x = ThetaPoly::theta_pow(4).scale(&Rat::new(Int::from(1), two));
    println!(
        "θ^4/2 integral: charpoly {}, powers {}, in O_K {}",
        is_algebraic_integer(&x, field.a()),
        is_algebraic_integer_by_powers(&x, field.a()),
        max.order.contains(&x)
    );
    println!("d_K: formula {}, trace form {}", discriminant(&field)?, trace_discriminant(&max.order, field.a()));
    println!("published d_K = {EXAMPLE_108_DISC}");
    for note in discrepancy_notes(&field, true) {
        println!("note: {note}");
    }
    Ok(())
}
