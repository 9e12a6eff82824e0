//! First-order Newton polygons, residual polynomials and Ore's index count.
//!
//! cargo run --example newton_polygons

use nonic::newton::{defining_poly, first_order_polygon, is_p_regular, ore_index, residual_polys};
use nonic::poly::IntPoly;
use nonic::Int;

fn show(label: &str, g: &IntPoly, p: i64) -> nonic::Result<()> {
    let p = Int::from(p);
    let polygon = first_order_polygon(g, &p)?;
    println!("{label} at p = {p}");
    let verts: Vec<String> = polygon.vertices().iter().map(|(x, y)| format!("({x},{y})")).collect();
    println!("  vertices {}", verts.join(" "));
    for r in residual_polys(g, &p)? {
        println!("  slope {}: residual {}", r.edge.slope(), r.poly);
    }
    match ore_index(g, &p) {
        Ok(v) => println!("  p-regular, v_p(index) = {v}"),
        Err(e) => println!("  {e}"),
    }
    println!("  regular: {}", is_p_regular(g, &p)?);
    Ok(())
}

fn main() -> nonic::Result<()> {
    let quartic = IntPoly::from_i64(&[-5, 0, 0, 0, 1]).taylor_shift(&Int::from(5));
    show("(x+5)^4 - 5", &quartic, 2)?;
    show("x^9 - 108", &defining_poly(&Int::from(108)), 2)?;
    show("x^9 - 108", &defining_poly(&Int::from(108)), 3)?;
    for a in [10, 26, 80] {
        let g = defining_poly(&Int::from(a)).taylor_shift(&Int::from(a));
        show(&format!("(x+{a})^9 - {a}"), &g, 3)?;
    }
    Ok(())
}
