//! Second-order data for fields with 3 | v₃(a): key polynomial, φ-expansion,
//! V-polygon, the counts N₁ and N₂, and the resulting 3-integral basis.
//!
//! cargo run --example second_order -- 270 54 108 7290 5103 2916

use nonic::newton::{gmn_p_basis, second_order};
use nonic::NonicField;

fn main() -> nonic::Result<()> {
    let mut args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    if args.is_empty() {
        args = vec![270, 54, 108, 729 * 10, 729 * 7, 729 * 4];
    }
    for a in args {
        let field = NonicField::new(a)?;
        let so = second_order(&field)?;
        println!("x^9 - {a}: φ = {}, ψ = {}, λ = {}", so.key.phi, so.key.psi, so.key.valuation().lambda());
        for (i, c) in so.expansion.coeffs.iter().enumerate() {
            println!("  a_{i} = {c}");
        }
        let verts: Vec<String> = so.v_polygon.vertices().iter().map(|(x, y)| format!("({x},{y})")).collect();
        println!("  V-polygon {}", verts.join(" "));
        println!("  N1 = {}, N2 = {}, v_3(I) = {}", so.n1, so.n2, so.index());
        println!("  exponents {:?}", gmn_p_basis(&field)?.exponents());
    }
    Ok(())
}
