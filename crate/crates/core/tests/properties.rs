mod common;

use proptest::prelude::*;

use common::closed_bases;
use nonic::arith::{int_pow, is_prime, lattice_count, lattice_count_closed};
use nonic::glue::discriminant_for_index;
use nonic::newton::{newton_local_data, phi_expansion};
use nonic::oracle::{is_algebraic_integer_by_powers, maximal_order};
use nonic::poly::IntPoly;
use nonic::polygon::NewtonPolygon;
use nonic::{
    canonicalize, classify_prime, factorize, glue, index_valuation, is_algebraic_integer, total_index,
    Error, FactorConfig, Int, NonicField, OrderModule, Rat, ThetaPoly,
};

fn valid_field(a: i64) -> Option<NonicField> {
    match NonicField::new(a) {
        Ok(f) if !f.was_normalized() => Some(f),
        Ok(_) | Err(Error::Reducible(_)) => None,
        Err(e) => panic!("a = {a}: {e}"),
    }
}

fn radicand(bound: i64) -> impl Strategy<Value = i64> {
    prop_oneof![2..=bound, -bound..=-2]
}

/// Radicands with extra powers of 2 and 3 so every case tag is reached.
fn structured_radicand() -> impl Strategy<Value = i64> {
    (0u32..9, 0u32..9, 1i64..400, any::<bool>())
        .prop_map(|(e2, e3, m, neg)| {
            let a = 2i64.pow(e2) * 3i64.pow(e3) * m;
            if neg { -a } else { a }
        })
        .prop_filter("|a| >= 2", |a| a.abs() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_is_complete(n in 2i64..=1_000_000_000_000, neg in any::<bool>()) {
        let n = Int::from(if neg { -n } else { n });
        let f = factorize(&n, &FactorConfig::default()).unwrap();
        prop_assert_eq!(f.value(), n);
        let ps: Vec<&Int> = f.primes().collect();
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for p in ps {
            prop_assert!(is_prime(p).unwrap());
        }
    }

    #[test]
    fn lattice_count_closed_form(t in 1u64..5000, b in 1u64..5000) {
        prop_assert_eq!(lattice_count(t, b), lattice_count_closed(t, b));
    }

    #[test]
    fn integrality_methods_agree(
        a in prop::sample::select(vec![2i64, 5, 10, 54, 108, 270, -26, 80, 1458]),
        nums in prop::collection::vec(-30i64..30, 9),
        dens in prop::collection::vec(prop::sample::select(vec![1i64, 1, 2, 3, 9, 27]), 9),
    ) {
        let a = Int::from(a);
        let beta = ThetaPoly::new(std::array::from_fn(|i| Rat::new(Int::from(nums[i]), Int::from(dens[i]))));
        prop_assert_eq!(is_algebraic_integer(&beta, &a), is_algebraic_integer_by_powers(&beta, &a));
    }

    #[test]
    fn closed_form_invariants(a in structured_radicand()) {
        let Some(f) = valid_field(a) else { return Ok(()) };
        let bases = closed_bases(&f);
        for b in &bases {
            let ex = b.exponents();
            prop_assert!(ex.windows(2).all(|w| w[0] <= w[1]), "a = {}: {:?}", a, ex);
            prop_assert_eq!(ex.iter().sum::<u32>(), index_valuation(&f, &classify_prime(&f, &b.p)));
        }
        let g = glue(&bases, f.a()).unwrap();
        let index = total_index(&f);
        prop_assert_eq!(g.index(), index.value());
        prop_assert!(g.denominators_chain());
        let disc = discriminant_for_index(&f, &index).unwrap();
        prop_assert_eq!(
            disc.value() * index.value().pow(2),
            int_pow(&Int::from(3), 18) * f.a().pow(8)
        );
    }

    #[test]
    fn glue_ignores_prime_order(a in structured_radicand(), rot in 0usize..4) {
        let Some(f) = valid_field(a) else { return Ok(()) };
        let mut bases = closed_bases(&f);
        let g = glue(&bases, f.a()).unwrap();
        let n = bases.len();
        bases.rotate_left(rot % n);
        bases.reverse();
        prop_assert_eq!(glue(&bases, f.a()).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_basis_invariant(a in structured_radicand(), i in 0usize..9, j in 0usize..9, k in -5i64..5) {
        let Some(f) = valid_field(a) else { return Ok(()) };
        let g = glue(&closed_bases(&f), f.a()).unwrap();
        let mut gens = g.elements().to_vec();
        if i != j {
            gens[i] = &gens[i] + &gens[j].scale(&Rat::from_integer(Int::from(k)));
        }
        gens.swap(0, i);
        prop_assert_eq!(canonicalize(&gens).unwrap(), g);
    }

    #[test]
    fn newton_path_matches_closed_form(a in structured_radicand()) {
        let Some(f) = valid_field(a) else { return Ok(()) };
        let closed = glue(&closed_bases(&f), f.a()).unwrap();
        let local = newton_local_data(&f).unwrap();
        let newton = glue(&local.into_iter().map(|(_, _, b)| b).collect::<Vec<_>>(), f.a()).unwrap();
        prop_assert_eq!(newton, closed);
    }

    #[test]
    fn polygon_is_convex_lower_hull(vals in prop::collection::vec(prop::option::weighted(0.8, 0i64..12), 2..12)) {
        let vals: Vec<Option<Int>> = vals.into_iter().map(|v| v.map(Int::from)).collect();
        let poly = NewtonPolygon::from_valuations(&vals);
        prop_assert!(poly.is_convex());
        for (x, v) in vals.iter().enumerate() {
            if let (Some(v), Some(y)) = (v, poly.ordinate_at(x)) {
                prop_assert!(Rat::from_integer(v.clone()) >= y);
            }
        }
        for (x, y) in poly.vertices() {
            prop_assert_eq!(vals[*x].clone().map(Rat::from_integer), Some(y.clone()));
        }
    }

    #[test]
    fn phi_expansion_reconstructs(
        f in prop::collection::vec(-50i64..50, 1..14),
        phi_low in prop::collection::vec(-9i64..9, 1..4),
    ) {
        let f = IntPoly::from_i64(&f);
        let mut phi = phi_low;
        phi.push(1);
        let phi = IntPoly::from_i64(&phi);
        let e = phi_expansion(&f, &phi);
        prop_assert_eq!(e.reconstruct(), f.clone());
        prop_assert!(f.is_zero() || e.is_consistent(&f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_confirms_glued_basis(a in prop_oneof![structured_radicand(), radicand(5000)]) {
        let Some(f) = valid_field(a) else { return Ok(()) };
        let g = glue(&closed_bases(&f), f.a()).unwrap();
        prop_assert_eq!(maximal_order(&f).unwrap(), OrderModule::from_basis(&g).unwrap(), "a = {}", a);
    }
}
