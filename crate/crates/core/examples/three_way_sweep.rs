//! Compare the closed-form, Newton-polygon and round-2 results for every
//! valid radicand in a range.
//!
//! cargo run --release --example three_way_sweep -- -200 200
//!
//! An optional third argument `s` sweeps the radicands `s·n` instead, e.g.
//! `-- -40 40 729` for the fields with `v₃(a) = 6`.

use std::time::Instant;

use nonic::glue::glue;
use nonic::newton::newton_local_data;
use nonic::oracle::{maximal_order, module_index, OrderModule};
use nonic::{local_data, total_index, Error, NonicField};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer bound")).collect();
    let (lo, hi, scale) = match args[..] {
        [lo, hi] => (lo, hi, 1),
        [lo, hi, s] => (lo, hi, s),
        _ => (-60, 60, 1),
    };
    let start = Instant::now();
    let (mut fields, mut bad) = (0, 0);
    for n in lo..=hi {
        let a = scale * n;
        let field = match NonicField::new(a) {
            Ok(f) if !f.was_normalized() => f,
            Ok(_) | Err(Error::Reducible(_)) => continue,
            Err(e) => panic!("a = {a}: {e}"),
        };
        fields += 1;
        let bases = |l: Vec<(nonic::PrimeCase, u32, nonic::PIntegralBasis)>| {
            l.into_iter().map(|(_, _, b)| b).collect::<Vec<_>>()
        };
        let closed = glue(&bases(local_data(&field).unwrap()), field.a()).unwrap();
        let newton = newton_local_data(&field).and_then(|l| glue(&bases(l), field.a()));
        let oracle = maximal_order(&field).unwrap();
        let closed_m = OrderModule::from_basis(&closed).unwrap();
        let agree_newton = newton.as_ref().is_ok_and(|n| *n == closed);
        let agree_oracle = oracle == closed_m;
        let index_ok = module_index(&oracle).unwrap() == total_index(&field).value();
        if !(agree_newton && agree_oracle && index_ok) {
            bad += 1;
            println!(
                "a = {a}: newton {} oracle {} index {}",
                match &newton {
                    Ok(_) => agree_newton.to_string(),
                    Err(e) => e.to_string(),
                },
                agree_oracle,
                index_ok
            );
        }
    }
    println!("{fields} fields, {bad} disagreements, {:.1?}", start.elapsed());
}
