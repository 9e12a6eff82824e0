mod common;

use std::time::{Duration, Instant};

use common::{closed_bases, field, sweep_fields, verdict};
use nonic::arith::{int_pow, lattice_count, lattice_count_closed};
use nonic::closed_form::q_polys_table1;
use nonic::glue::{discriminant_for_index, glue};
use nonic::newton::{newton_local_data, residual_polys, second_order};
use nonic::oracle::{
    is_algebraic_integer_by_powers, maximal_order, module_index, p_maximal, trace_discriminant,
};
use nonic::poly::{FpPoly, IntPoly};
use nonic::reference::{EXAMPLE_108_DISC, EXAMPLE_108_V2};
use nonic::report::{cmd_analyze, AnalyzeOptions};
use nonic::{
    classify_prime, discriminant, index_valuation, is_algebraic_integer, total_index, Int,
    OrderModule, Rat, ThetaPoly,
};

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn exponents_of(a: i64, p: i64) -> Vec<u32> {
    closed_bases(&field(a))
        .into_iter()
        .find(|b| b.p == Int::from(p))
        .unwrap()
        .exponents()
}

#[test]
fn criterion_1_example_54() {
    let start = Instant::now();
    let f = field(54);
    let v3 = index_valuation(&f, &classify_prime(&f, &Int::from(3)));
    let q = q_polys_table1(&f).unwrap();
    let basis = glue(&closed_bases(&f), f.a()).unwrap();
    let disc = discriminant(&f).unwrap();
    let elapsed = start.elapsed();

    let mut bad = Vec::new();
    if v3 != 13 {
        bad.push(format!("v_3(I) = {v3}"));
    }
    if q.q2 != IntPoly::from_i64(&[12, 12, 0, 1]) {
        bad.push(format!("q_2 = {}", q.q2));
    }
    if q.q1 != IntPoly::from_i64(&[252, 72, 36, 6, 6, 0, 1]) {
        bad.push(format!("q_1 = {}", q.q1));
    }
    let ex = exponents_of(54, 3);
    if ex != [0, 0, 0, 1, 1, 2, 3, 3, 3] {
        bad.push(format!("exponents {ex:?}"));
    }
    let three = Int::from(3);
    let dens: Vec<Int> = ex.iter().map(|&e| int_pow(&three, e)).collect();
    if basis.denominators() != dens {
        bad.push("glued denominators".into());
    }
    if disc.to_string() != "2^8*3^16" {
        bad.push(format!("d_K = {disc}"));
    }
    if elapsed >= Duration::from_secs(1) {
        bad.push(format!("runtime {elapsed:?}"));
    }
    verdict(1, "x^9 - 54 golden values", bad.is_empty(), &bad.join("; "));
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_2_example_108_three_adic() {
    let f = field(108);
    let v3 = index_valuation(&f, &classify_prime(&f, &Int::from(3)));
    let q = q_polys_table1(&f).unwrap();
    let mut bad = Vec::new();
    if v3 != 12 {
        bad.push(format!("v_3(I) = {v3}"));
    }
    if q.q2 != IntPoly::from_i64(&[24, 24, 0, 1]) {
        bad.push(format!("q_2 = {}", q.q2));
    }
    if q.q1 != IntPoly::from_i64(&[1872, 288, 144, 12, 12, 0, 1]) {
        bad.push(format!("q_1 = {}", q.q1));
    }
    let ex = exponents_of(108, 3);
    if ex != [0, 0, 0, 1, 1, 2, 2, 3, 3] {
        bad.push(format!("exponents {ex:?}"));
    }
    verdict(2, "x^9 - 108 3-adic golden values", bad.is_empty(), &bad.join("; "));
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_3_example_108_arbitration() {
    let f = field(108);
    let two = Int::from(2);
    let a = f.a();
    let v2 = index_valuation(&f, &classify_prime(&f, &two));
    let max = maximal_order(&f).unwrap();
    let oracle_index = module_index(&max).unwrap();
    let oracle_v2 = nonic::arith::vp(&oracle_index, &two).unwrap();
    let theta4_half = ThetaPoly::theta_pow(4).scale(&Rat::new(Int::from(1), two.clone()));
    let not_integral = !is_algebraic_integer(&theta4_half, a)
        && !is_algebraic_integer_by_powers(&theta4_half, a)
        && !max.contains(&theta4_half);
    let d_oracle = trace_discriminant(&max, a);
    let d_closed = discriminant(&f).unwrap();
    let report = cmd_analyze(a, &AnalyzeOptions::default()).unwrap();
    let noted = report.notes.iter().any(|n| n.contains("v_2(I) = 5") && n.contains(EXAMPLE_108_DISC));

    let mut bad = Vec::new();
    if v2 != 4 {
        bad.push(format!("closed-form v_2 = {v2}"));
    }
    if oracle_v2 != 4 {
        bad.push(format!("oracle v_2 = {oracle_v2}"));
    }
    if !not_integral {
        bad.push("theta^4/2 judged integral".into());
    }
    let expected_disc = r(1 << 8) * Rat::from_integer(int_pow(&Int::from(3), 18));
    if d_oracle != expected_disc || d_closed.to_string() != "2^8*3^18" {
        bad.push(format!("d_K oracle {d_oracle}, closed {d_closed}"));
    }
    if v2 == EXAMPLE_108_V2 || d_closed.to_string() == EXAMPLE_108_DISC {
        bad.push("published values reproduced".into());
    }
    if !noted {
        bad.push("no discrepancy note".into());
    }
    verdict(3, "x^9 - 108 2-adic arbitration", bad.is_empty(), &bad.join("; "));
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_4_three_way_sweep() {
    let start = Instant::now();
    let fields = sweep_fields(200);
    let mut bad = Vec::new();
    for f in &fields {
        let a = f.a();
        let closed = glue(&closed_bases(f), a).unwrap();
        let newton = newton_local_data(f)
            .and_then(|l| glue(&l.into_iter().map(|(_, _, b)| b).collect::<Vec<_>>(), a));
        let oracle = maximal_order(f).unwrap();
        let index = total_index(f);
        let newton_index: Int = newton_local_data(f)
            .map(|l| l.iter().map(|(c, v, _)| int_pow(&c.p, *v)).product())
            .unwrap_or_default();
        let disc = discriminant_for_index(f, &index).unwrap();
        let ok = newton.as_ref().is_ok_and(|n| *n == closed)
            && OrderModule::from_basis(&closed).unwrap() == oracle
            && closed.index() == index.value()
            && newton_index == index.value()
            && module_index(&oracle).unwrap() == index.value()
            && disc.value() * index.value().pow(2) == int_pow(&Int::from(3), 18) * a.pow(8)
            && trace_discriminant(&oracle, a) == Rat::from_integer(disc.value());
        if !ok {
            bad.push(a.to_string());
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{} fields, {elapsed:.1?}, disagreements: [{}]", fields.len(), bad.join(", "));
    let ok = bad.is_empty() && elapsed < Duration::from_secs(300);
    verdict(4, "three-way agreement for 2 <= |a| <= 200", ok, &detail);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_5_monogenic_squarefree() {
    let mut count = 0;
    let mut bad = Vec::new();
    for f in sweep_fields(200) {
        let a = f.a();
        let squarefree = f.factorization().factors().iter().all(|(_, e)| *e == 1);
        let nine = Int::from(9);
        if !squarefree || (a * a - Int::from(1)) % &nine == Int::from(0) {
            continue;
        }
        count += 1;
        if !glue(&closed_bases(&f), a).unwrap().is_power_basis() {
            bad.push(a.to_string());
        }
    }
    let detail = format!("{count} fields, not power basis: [{}]", bad.join(", "));
    verdict(5, "squarefree a with 9 not dividing a^2 - 1 is monogenic", bad.is_empty(), &detail);
    assert!(bad.is_empty(), "{detail}");
}

#[test]
fn criterion_6_residual_polynomial() {
    let g = IntPoly::from_i64(&[-5, 0, 0, 0, 1]).taylor_shift(&Int::from(5));
    let rs = residual_polys(&g, &Int::from(2)).unwrap();
    let ok = rs.len() == 1
        && rs[0].edge.slope() == Rat::new(Int::from(-1), Int::from(2))
        && rs[0].poly == FpPoly::new(2, vec![1, 1, 1]);
    let detail: Vec<String> = rs.iter().map(|x| format!("slope {} residual {}", x.edge.slope(), x.poly)).collect();
    verdict(6, "(x+5)^4 - 5 at p = 2", ok, &detail.join("; "));
    assert!(ok, "{detail:?}");
}

#[test]
fn criterion_7_lattice_count() {
    let mut bad = Vec::new();
    for t in 1..=50u64 {
        for b in 1..=50u64 {
            let brute = (1..=t)
                .flat_map(|x| (1..=b).map(move |y| (x, y)))
                .filter(|&(x, y)| b * x + t * y <= t * b)
                .count() as u64;
            let direct = lattice_count(t, b);
            if direct != lattice_count_closed(t, b) || direct != brute {
                bad.push(format!("({t},{b})"));
            }
        }
    }
    verdict(7, "lattice-point identity for 1 <= t, b <= 50", bad.is_empty(), &bad.join(", "));
    assert!(bad.is_empty(), "{bad:?}");
}

/// Published second-order data for one representative.
struct Stated {
    a: i64,
    label: &'static str,
    check: fn(&[(usize, Rat)], &[(usize, Rat)]) -> bool,
    vertices: &'static str,
    n2: u32,
}

fn case1_shape(c: i64) -> impl Fn(&[(usize, Rat)], &[(usize, Rat)]) -> bool {
    move |vertices, points| {
        let on = |x: usize, y: i64| points.iter().any(|(px, py)| *px == x && *py == r(y));
        let zero_ok = points.iter().any(|(x, y)| *x == 0 && *y >= r(9 * c + 6));
        zero_ok
            && on(1, 9 * c + 3)
            && on(2, 9 * c + 3)
            && on(3, 9 * c)
            && vertices.len() == 3
            && vertices[0].0 == 0
            && vertices[1..] == [(1, r(9 * c + 3)), (3, r(9 * c))]
            && vertices[1].1.clone() - vertices[0].1.clone() <= r(-3)
    }
}

fn exact(want: &'static [(usize, i64)]) -> impl Fn(&[(usize, Rat)], &[(usize, Rat)]) -> bool {
    move |vertices, _| vertices.iter().cloned().eq(want.iter().map(|&(x, y)| (x, r(y))))
}

#[test]
fn criterion_8_second_order_internals() {
    let stated: Vec<Stated> = vec![
        Stated { a: 270, label: "CASE 1, c = 1", check: |v, p| case1_shape(1)(v, p), vertices: "(0,>=15),(1,12),(3,9)", n2: 4 },
        Stated { a: 729 * 10, label: "CASE 1, c = 2", check: |v, p| case1_shape(2)(v, p), vertices: "(0,>=24),(1,21),(3,18)", n2: 4 },
        Stated { a: 54, label: "subcase (i), k = 2", check: |v, p| exact(&[(0, 14), (3, 9)])(v, p), vertices: "(0,14),(3,9)", n2: 4 },
        Stated { a: 108, label: "subcase (i), k = 4", check: |v, p| exact(&[(0, 13), (3, 9)])(v, p), vertices: "(0,13),(3,9)", n2: 3 },
        Stated { a: 729 * 7, label: "subcase (ii), k = 7", check: |v, p| exact(&[(0, 23), (1, 21), (3, 18)])(v, p), vertices: "(0,23),(1,21),(3,18)", n2: 4 },
        Stated { a: 729 * 4, label: "subcase (ii), k = 4", check: |v, p| exact(&[(0, 22), (3, 18)])(v, p), vertices: "(0,22),(3,18)", n2: 3 },
    ];
    let mut bad = Vec::new();
    for s in &stated {
        let f = field(s.a);
        let c = f.three_data().unwrap().c;
        let so = match second_order(&f) {
            Ok(so) => so,
            Err(e) => {
                bad.push(format!("a = {} ({}): {e}", s.a, s.label));
                continue;
            }
        };
        let vs = so.v_polygon.vertices();
        let shown: Vec<String> = vs.iter().map(|(x, y)| format!("({x},{y})")).collect();
        if !(s.check)(vs, so.v_polygon.points()) {
            bad.push(format!("a = {} ({}): vertices {} vs stated {}", s.a, s.label, shown.join(","), s.vertices));
        }
        if so.n1 != 12 * c - 3 {
            bad.push(format!("a = {} ({}): N1 = {}", s.a, s.label, so.n1));
        }
        if so.n2 != s.n2 {
            bad.push(format!("a = {} ({}): N2 = {} vs stated {}", s.a, s.label, so.n2, s.n2));
        }
    }
    verdict(8, "second-order internals for the six configurations", bad.is_empty(), &bad.join("; "));
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn criterion_9_property_suite() {
    let mut fields = sweep_fields(200);
    fields.extend([729 * 2, 729 * 4, 729 * 5, 729 * 7, 729 * 10, -729 * 7, 2187 * 2, 6561 * 5].map(field));
    let mut bad = Vec::new();
    for f in &fields {
        let a = f.a();
        let bases = closed_bases(f);
        let glued = glue(&bases, a).unwrap();
        let ints = bases
            .iter()
            .flat_map(|b| b.elements(a))
            .chain(glued.elements().iter().cloned())
            .all(|x| is_algebraic_integer(&x, a));
        let m = OrderModule::from_basis(&glued).unwrap();
        let ring = m.is_ring(a);
        let maximal = f.relevant_primes().iter().all(|p| p_maximal(&m, p, a).unwrap_or(false));
        let exps = bases.iter().all(|b| {
            let ex = b.exponents();
            let v = index_valuation(f, &classify_prime(f, &b.p));
            ex.windows(2).all(|w| w[0] <= w[1]) && ex.iter().sum::<u32>() == v
        });
        if !(ints && ring && maximal && exps) {
            bad.push(format!("a = {a}: integral {ints}, ring {ring}, maximal {maximal}, exponents {exps}"));
        }
    }
    let detail = format!("{} fields; {}", fields.len(), bad.join("; "));
    verdict(9, "integrality, ring, p-maximality and exponent properties", bad.is_empty(), &detail);
    assert!(bad.is_empty(), "{detail}");
}
