//! Normalized radicands and the per-prime case split.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, int_pow, vp, FactorConfig, Factorization, Int};
use crate::error::{Error, Result};

/// Data attached to `a = 3^{3c}·b` with `3 ∤ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeData {
    pub b: Int,
    /// 1 or 2
    pub c: u32,
    /// least positive residue of b mod 9, never 3 or 6
    pub k: u32,
}

/// K = Q(θ), θ⁹ = a, with `a` 9th-power-free and not a cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonicField {
    raw: Int,
    a: Int,
    fact: Factorization,
    /// `power_parts[i-1] = a_i`: product of the primes q with v_q(a) = i.
    power_parts: [Int; 8],
    three: Option<ThreeData>,
}

impl NonicField {
    pub fn new(a_raw: impl Into<Int>) -> Result<Self> {
        normalize(&a_raw.into(), &FactorConfig::from_env())
    }

    /// The input as given, before 9th powers were divided out.
    pub fn raw(&self) -> &Int {
        &self.raw
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn factorization(&self) -> &Factorization {
        &self.fact
    }

    pub fn power_parts(&self) -> &[Int; 8] {
        &self.power_parts
    }

    pub fn three_data(&self) -> Option<&ThreeData> {
        self.three.as_ref()
    }

    pub fn was_normalized(&self) -> bool {
        self.raw != self.a
    }

    pub fn v(&self, p: &Int) -> u32 {
        self.fact.exponent_of(p)
    }

    /// Primes dividing 3a: the only candidates for dividing the index.
    pub fn relevant_primes(&self) -> Vec<Int> {
        let mut ps: Vec<Int> = self.fact.primes().cloned().collect();
        let three = Int::from(3);
        if !ps.contains(&three) {
            ps.push(three);
            ps.sort();
        }
        ps
    }

    /// `9^9·a^8`, the discriminant of x⁹ − a, as a factorization.
    pub fn poly_discriminant(&self) -> Factorization {
        Factorization::from_parts(1, [(Int::from(3), 18)]).mul(&self.fact.pow(8))
    }
}

/// Reduce `a_raw` to a 9th-power-free radicand generating the same field.
pub fn normalize(a_raw: &Int, cfg: &FactorConfig) -> Result<NonicField> {
    if a_raw.abs() <= Int::one() {
        return Err(Error::Reducible(a_raw.clone()));
    }
    let raw_fact = factorize(a_raw, cfg)?;
    let fact = Factorization::from_parts(
        raw_fact.sign(),
        raw_fact.factors().iter().map(|(p, e)| (p.clone(), e % 9)),
    );
    let a = fact.value();
    if a.abs().is_one() || is_perfect_cube(&a) {
        return Err(Error::Reducible(a));
    }
    let mut power_parts: [Int; 8] = std::array::from_fn(|_| Int::one());
    for (p, e) in fact.factors() {
        power_parts[*e as usize - 1] *= p;
    }
    let three = Int::from(3);
    let v3 = fact.exponent_of(&three);
    let three_data = (v3 > 0 && v3 % 3 == 0).then(|| {
        let c = v3 / 3;
        let b = &a / int_pow(&three, 3 * c);
        let k = b.mod_floor(&Int::from(9)).to_u32().expect("residue mod 9");
        ThreeData { b, c, k }
    });
    Ok(NonicField {
        raw: a_raw.clone(),
        a,
        fact,
        power_parts,
        three: three_data,
    })
}

/// Exact test via integer cube root; negative numbers are cubes of negatives.
pub fn is_perfect_cube(n: &Int) -> bool {
    let r = n.abs().cbrt();
    &r * &r * &r == n.abs()
}

/// `C_k = ∏ a_i^{⌊ik/9⌋}`; θ^k / C_k is an algebraic integer.
pub fn c_denominator(field: &NonicField, k: u32) -> Int {
    field
        .power_parts
        .iter()
        .enumerate()
        .fold(Int::one(), |acc, (idx, ai)| {
            let i = idx as u32 + 1;
            acc * int_pow(ai, i * k / 9)
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// p | a, p ∤ gcd(9, v_p(a))
    A1,
    /// p = 3, 3 | a, 3 | v₃(a)
    A2,
    /// p ∤ 3a
    A3,
    /// p = 3 ∤ a, v₃(a² − 1) ≤ 1
    A4i,
    /// p = 3 ∤ a, v₃(a² − 1) = 2
    A4ii,
    /// p = 3 ∤ a, v₃(a² − 1) ≥ 3
    A4iii,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::A1 => "A1",
            CaseTag::A2 => "A2",
            CaseTag::A3 => "A3",
            CaseTag::A4i => "A4i",
            CaseTag::A4ii => "A4ii",
            CaseTag::A4iii => "A4iii",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCase {
    pub p: Int,
    pub tag: CaseTag,
}

pub fn classify_prime(field: &NonicField, p: &Int) -> PrimeCase {
    let three = Int::from(3);
    let v = field.v(p);
    let tag = if v > 0 {
        let g = Int::from(v.gcd(&9));
        if !g.is_multiple_of(p) {
            CaseTag::A1
        } else {
            CaseTag::A2
        }
    } else if p != &three {
        CaseTag::A3
    } else {
        let a = field.a();
        let w = vp(&(a * a - Int::one()), &three).expect("a^2 - 1 is nonzero");
        match w {
            0 | 1 => CaseTag::A4i,
            2 => CaseTag::A4ii,
            _ => CaseTag::A4iii,
        }
    };
    PrimeCase { p: p.clone(), tag }
}

pub(crate) fn require_prime(p: &Int) -> Result<()> {
    if p.is_zero() || !crate::arith::is_prime(p)? {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(a: i64) -> NonicField {
        NonicField::new(a).unwrap()
    }

    #[test]
    fn strips_ninth_powers() {
        let f = field(2560);
        assert_eq!(f.a(), &Int::from(5));
        assert!(f.was_normalized());
        let f = field(-(1 << 18) * 3);
        assert_eq!(f.a(), &Int::from(-3));
    }

    #[test]
    fn three_data_for_54() {
        let f = field(54);
        let t = f.three_data().unwrap();
        assert_eq!((t.b.clone(), t.c, t.k), (Int::from(2), 1, 2));
    }

    #[test]
    fn negative_b_uses_least_positive_residue() {
        let f = field(-54);
        let t = f.three_data().unwrap();
        assert_eq!((t.b.clone(), t.c, t.k), (Int::from(-2), 1, 7));
    }

    #[test]
    fn rejects_reducible() {
        for a in [0i64, 1, -1, 8, -8, 27, 1 << 9, 216] {
            assert!(matches!(NonicField::new(a), Err(Error::Reducible(_))), "a = {a}");
        }
    }

    #[test]
    fn c_denominators() {
        assert_eq!(c_denominator(&field(108), 5), Int::from(6));
        assert_eq!(c_denominator(&field(256), 8), Int::from(128));
        assert_eq!(c_denominator(&field(30), 8), Int::one());
    }

    #[test]
    fn classification() {
        let t = |a: i64, p: i64| classify_prime(&field(a), &Int::from(p)).tag;
        assert_eq!(t(54, 3), CaseTag::A2);
        assert_eq!(t(54, 2), CaseTag::A1);
        assert_eq!(t(10, 3), CaseTag::A4ii);
        assert_eq!(t(26, 3), CaseTag::A4iii);
        assert_eq!(t(5, 3), CaseTag::A4i);
        assert_eq!(t(5, 7), CaseTag::A3);
        assert_eq!(t(9, 3), CaseTag::A1);
        assert_eq!(t(3i64.pow(6) * 2, 3), CaseTag::A2);
    }

    #[test]
    fn k_avoids_multiples_of_three() {
        for a in (-400i64..400).filter(|a| a.abs() > 1) {
            if let Ok(f) = NonicField::new(a) {
                if let Some(t) = f.three_data() {
                    assert!(t.k != 3 && t.k != 6 && (1..=8).contains(&t.k));
                }
            }
        }
    }
}
