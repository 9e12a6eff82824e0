//! Closed-form index valuations and p-integral bases, case by case.
//!
//! Case A2 with `c = 2` uses the class assignment certified by the oracle:
//! `k ∈ {4, 5}` gives `v₃ = 12c + 1` and `k ∈ {2, 7}` gives `12c`. Some
//! published tables attach these two rows the other way round; see
//! [`crate::reference`].

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{int_pow, Int};
use crate::error::{Error, Result};
use crate::field::{CaseTag, NonicField, PrimeCase, ThreeData};
use crate::poly::IntPoly;
use crate::theta::{ThetaPoly, DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSlot {
    /// Monic of degree equal to the slot index, reduced mod x⁹ − a.
    pub numerator: IntPoly,
    /// Denominator is `p^exponent`.
    pub exponent: u32,
}

/// Triangular p-integral basis: slot `j` is `numerator_j(θ) / p^{k_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PIntegralBasis {
    pub p: Int,
    pub slots: Vec<BasisSlot>,
}

impl PIntegralBasis {
    pub fn power_basis(p: &Int) -> Self {
        PIntegralBasis {
            p: p.clone(),
            slots: (0..DEGREE)
                .map(|j| BasisSlot {
                    numerator: IntPoly::monomial(Int::one(), j),
                    exponent: 0,
                })
                .collect(),
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.slots.iter().map(|s| s.exponent).collect()
    }

    pub fn exponent_sum(&self) -> u32 {
        self.slots.iter().map(|s| s.exponent).sum()
    }

    pub fn element(&self, j: usize, a: &Int) -> ThetaPoly {
        let s = &self.slots[j];
        ThetaPoly::from_fraction(&s.numerator, &int_pow(&self.p, s.exponent), a)
    }

    pub fn elements(&self, a: &Int) -> Vec<ThetaPoly> {
        (0..self.slots.len()).map(|j| self.element(j, a)).collect()
    }

    /// Shape checks: nine slots, slot j monic of degree j, `k₀ = 0`,
    /// exponents nondecreasing.
    pub fn validate(&self) -> Result<()> {
        if self.slots.len() != DEGREE {
            return Err(Error::MalformedBasis(format!(
                "{} slots, expected {DEGREE}",
                self.slots.len()
            )));
        }
        for (j, s) in self.slots.iter().enumerate() {
            if s.numerator.degree() != Some(j) || !s.numerator.is_monic() {
                return Err(Error::MalformedBasis(format!(
                    "slot {j} numerator {} is not monic of degree {j}",
                    s.numerator
                )));
            }
        }
        if self.slots[0].exponent != 0 {
            return Err(Error::MalformedBasis("slot 0 has a denominator".into()));
        }
        if self.slots.windows(2).any(|w| w[0].exponent > w[1].exponent) {
            return Err(Error::MalformedBasis(format!(
                "exponents {:?} are not nondecreasing",
                self.exponents()
            )));
        }
        Ok(())
    }
}

pub fn index_valuation(field: &NonicField, case: &PrimeCase) -> u32 {
    match case.tag {
        CaseTag::A1 => {
            let v = field.v(&case.p);
            (8 * (v - 1) + v.gcd(&9) - 1) / 2
        }
        CaseTag::A2 => {
            let t = field.three_data().expect("A2 has three data");
            12 * t.c + u32::from(a2_has_extra_point(t))
        }
        CaseTag::A3 | CaseTag::A4i => 0,
        CaseTag::A4ii => 3,
        CaseTag::A4iii => 4,
    }
}

/// Whether case A2 lands on `12c + 1` rather than `12c`.
fn a2_has_extra_point(t: &ThreeData) -> bool {
    match (t.c, t.k) {
        (_, 1 | 8) => true,
        (1, 2 | 7) => true,
        (2, 4 | 5) => true,
        _ => false,
    }
}

fn require_tag(case: &PrimeCase, allowed: &[CaseTag], what: &str) -> Result<()> {
    if allowed.contains(&case.tag) {
        Ok(())
    } else {
        Err(Error::WrongCase(format!("{what} called for case {}", case.tag)))
    }
}

/// `θ^i / q^{⌊i·v_q(a)/9⌋}` for a prime in case A1.
pub fn p_basis_a1(field: &NonicField, case: &PrimeCase) -> Result<PIntegralBasis> {
    require_tag(case, &[CaseTag::A1], "p_basis_a1")?;
    let v = field.v(&case.p);
    Ok(PIntegralBasis {
        p: case.p.clone(),
        slots: (0..DEGREE as u32)
            .map(|i| BasisSlot {
                numerator: IntPoly::monomial(Int::one(), i as usize),
                exponent: i * v / 9,
            })
            .collect(),
    })
}

fn a2_data(field: &NonicField) -> Result<&ThreeData> {
    field
        .three_data()
        .ok_or_else(|| Error::WrongCase("field is not in case A2".into()))
}

/// Binomial-sum quotients for `k ∈ {1, 8}`: returns `(q₁, q₂)` with
/// `q_j = Σ_{s=0}^{3-j} C(3,s)(3^c b)^s (x³ − 3^c b)^{3-j-s}`.
pub fn q_polys_k18(field: &NonicField) -> Result<(IntPoly, IntPoly)> {
    let t = a2_data(field)?;
    if !matches!(t.k, 1 | 8) {
        return Err(Error::WrongCase(format!("q_polys_k18 needs k in {{1,8}}, got {}", t.k)));
    }
    let shift = int_pow(&Int::from(3), t.c) * &t.b;
    let phi = &IntPoly::monomial(Int::one(), 3) - &IntPoly::constant(shift.clone());
    let binom = [1, 3, 3, 1];
    let q = |j: u32| -> IntPoly {
        (0..=3 - j).fold(IntPoly::zero(), |acc, s| {
            let coef = Int::from(binom[s as usize]) * int_pow(&shift, s);
            &acc + &phi.pow(3 - j - s).scale(&coef)
        })
    };
    Ok((q(1), q(2)))
}

/// Key polynomial and quotients for `k ∈ {2, 4, 5, 7}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Polys {
    pub phi: IntPoly,
    pub q1: IntPoly,
    pub q2: IntPoly,
}

pub fn q_polys_table1(field: &NonicField) -> Result<Table1Polys> {
    let t = a2_data(field)?;
    if !matches!(t.k, 2 | 4 | 5 | 7) {
        return Err(Error::WrongCase(format!(
            "q_polys_table1 needs k in {{2,4,5,7}}, got {}",
            t.k
        )));
    }
    let b = &t.b;
    let b2 = b * b;
    let b3 = &b2 * b;
    let b4 = &b3 * b;
    let b5 = &b4 * b;
    let b6 = &b5 * b;
    let i = |n: i64| Int::from(n);
    // x^2, x, 1 combination
    let quad = |c2: Int, c1: Int, c0: Int| IntPoly::new(vec![c0, c1, c2]);
    let x3 = IntPoly::monomial(Int::one(), 3);
    let polys = match t.c {
        1 => {
            let s = if t.k % 2 == 0 { i(1) } else { i(-1) };
            let phi = &x3 - &quad(i(0), &s * i(3) * b, i(3) * b);
            let bracket = quad(i(0), &s * i(9) * b, i(9) * b);
            let q2 = &phi + &bracket;
            let tail = quad(
                i(27) * &b2,
                &s * i(54) * &b2,
                &s * i(27) * &b3 + i(27) * &b2,
            );
            let q1 = &(&(&phi * &phi) + &(&phi * &bracket)) + &tail;
            Table1Polys { phi, q1, q2 }
        }
        2 => {
            let s = if (t.k / 2) % 2 == 0 { i(1) } else { i(-1) };
            let phi = &x3 - &quad(&s * i(3) * b, i(0), i(9) * b);
            let bracket = quad(&s * i(9) * b, i(27) * &b2, &s * i(108) * &b3 + i(27) * b);
            let q2 = &phi + &bracket;
            let tail = quad(
                i(405) * &b4 + &s * i(162) * &b2,
                &s * i(243) * &b5 + i(486) * &b3,
                i(729) * &b6 + &s * i(1944) * &b4 + i(243) * &b2,
            );
            let q1 = &(&(&phi * &phi) + &(&phi * &bracket)) + &tail;
            Table1Polys { phi, q1, q2 }
        }
        c => return Err(Error::Internal(format!("c = {c} out of range"))),
    };
    Ok(polys)
}

/// Exponents `(m₁, …, m₇)` by `(c, k)`.
pub fn a2_exponents(t: &ThreeData) -> [u32; 7] {
    match (t.c, a2_has_extra_point(t)) {
        (1, true) => [0, 1, 1, 2, 3, 3, 3],
        (1, false) => [0, 1, 1, 2, 2, 3, 3],
        (_, true) => [1, 2, 3, 3, 5, 5, 6],
        (_, false) => [1, 2, 3, 3, 4, 5, 6],
    }
}

pub fn p_basis_a2(field: &NonicField) -> Result<PIntegralBasis> {
    let t = a2_data(field)?;
    let (q1, q2) = if matches!(t.k, 1 | 8) {
        q_polys_k18(field)?
    } else {
        let tp = q_polys_table1(field)?;
        (tp.q1, tp.q2)
    };
    let m = a2_exponents(t);
    let x = IntPoly::x();
    let x2 = IntPoly::monomial(Int::one(), 2);
    let numerators = [
        IntPoly::one(),
        x.clone(),
        x2.clone(),
        q2.clone(),
        &x * &q2,
        &x2 * &q2,
        q1.clone(),
        &x * &q1,
        &x2 * &q1,
    ];
    let exponents = std::iter::once(0).chain(std::iter::once(0)).chain(m);
    let basis = PIntegralBasis {
        p: Int::from(3),
        slots: numerators
            .into_iter()
            .zip(exponents)
            .map(|(n, e)| BasisSlot {
                numerator: n.reduce_pure(DEGREE, field.a()),
                exponent: e,
            })
            .collect(),
    };
    basis.validate()?;
    Ok(basis)
}

/// `θ⁶ + aθ³ + 1`
pub fn eta_numerator(a: &Int) -> IntPoly {
    IntPoly::new(vec![
        Int::one(),
        Int::zero(),
        Int::zero(),
        a.clone(),
        Int::zero(),
        Int::zero(),
        Int::one(),
    ])
}

pub fn p_basis_a4(field: &NonicField, case: &PrimeCase) -> Result<PIntegralBasis> {
    require_tag(case, &[CaseTag::A4i, CaseTag::A4ii, CaseTag::A4iii], "p_basis_a4")?;
    let a = field.a();
    let mut basis = PIntegralBasis::power_basis(&case.p);
    if case.tag == CaseTag::A4i {
        return Ok(basis);
    }
    let eta = eta_numerator(a);
    let x = IntPoly::x();
    basis.slots[6] = BasisSlot {
        numerator: eta.clone(),
        exponent: 1,
    };
    basis.slots[7] = BasisSlot {
        numerator: (&eta * &x).reduce_pure(DEGREE, a),
        exponent: 1,
    };
    basis.slots[8] = if case.tag == CaseTag::A4ii {
        BasisSlot {
            numerator: (&(&eta * &x) * &x).reduce_pure(DEGREE, a),
            exponent: 1,
        }
    } else {
        let mut coeffs: Vec<Int> = (0..8).map(|j| int_pow(a, j)).collect();
        coeffs.push(Int::one());
        BasisSlot {
            numerator: IntPoly::new(coeffs),
            exponent: 2,
        }
    };
    Ok(basis)
}

/// The p-integral basis for any prime, dispatched on its case.
pub fn p_basis(field: &NonicField, case: &PrimeCase) -> Result<PIntegralBasis> {
    match case.tag {
        CaseTag::A1 => p_basis_a1(field, case),
        CaseTag::A2 => p_basis_a2(field),
        CaseTag::A3 => Ok(PIntegralBasis::power_basis(&case.p)),
        CaseTag::A4i | CaseTag::A4ii | CaseTag::A4iii => p_basis_a4(field, case),
    }
}

/// Case, valuation and basis for every prime dividing 3a.
pub fn local_data(field: &NonicField) -> Result<Vec<(PrimeCase, u32, PIntegralBasis)>> {
    field
        .relevant_primes()
        .iter()
        .map(|p| {
            let case = crate::field::classify_prime(field, p);
            let v = index_valuation(field, &case);
            let basis = p_basis(field, &case)?;
            if basis.exponent_sum() != v {
                return Err(Error::Internal(format!(
                    "p = {p}: basis exponent sum {} differs from v_p(I) = {v}",
                    basis.exponent_sum()
                )));
            }
            Ok((case, v, basis))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::classify_prime;

    fn field(a: i64) -> NonicField {
        NonicField::new(a).unwrap()
    }

    fn case(f: &NonicField, p: i64) -> PrimeCase {
        classify_prime(f, &Int::from(p))
    }

    #[test]
    fn valuations_from_formulas() {
        let f = field(54);
        assert_eq!(index_valuation(&f, &case(&f, 3)), 13);
        assert_eq!(index_valuation(&f, &case(&f, 2)), 0);
        let f = field(108);
        assert_eq!(index_valuation(&f, &case(&f, 2)), 4);
        assert_eq!(index_valuation(&f, &case(&f, 3)), 12);
        let f = field(26);
        assert_eq!(index_valuation(&f, &case(&f, 3)), 4);
        let f = field(256);
        assert_eq!(index_valuation(&f, &case(&f, 2)), 28);
    }

    #[test]
    fn a1_bases() {
        let f = field(108);
        assert_eq!(p_basis_a1(&f, &case(&f, 2)).unwrap().exponents(), vec![0, 0, 0, 0, 0, 1, 1, 1, 1]);
        let f = field(54);
        assert_eq!(p_basis_a1(&f, &case(&f, 2)).unwrap().exponent_sum(), 0);
        let f = field(256);
        let b = p_basis_a1(&f, &case(&f, 2)).unwrap();
        assert_eq!(b.exponents(), vec![0, 0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(b.exponent_sum(), 28);
        assert!(p_basis_a1(&f, &case(&f, 3)).is_err());
    }

    #[test]
    fn binomial_quotients_270() {
        let (q1, q2) = q_polys_k18(&field(270)).unwrap();
        assert_eq!(q2, IntPoly::from_i64(&[60, 0, 0, 1]));
        assert_eq!(q1, IntPoly::from_i64(&[900, 0, 0, 30, 0, 0, 1]));
        assert_eq!(q1.degree(), Some(6));
        assert!(q_polys_k18(&field(54)).is_err());
    }

    #[test]
    fn table1_quotients() {
        let t = q_polys_table1(&field(54)).unwrap();
        assert_eq!(t.q2, IntPoly::from_i64(&[12, 12, 0, 1]));
        assert_eq!(t.q1, IntPoly::from_i64(&[252, 72, 36, 6, 6, 0, 1]));
        let t = q_polys_table1(&field(108)).unwrap();
        assert_eq!(t.q2, IntPoly::from_i64(&[24, 24, 0, 1]));
        assert_eq!(t.q1, IntPoly::from_i64(&[1872, 288, 144, 12, 12, 0, 1]));
        let t = q_polys_table1(&field(5103)).unwrap();
        assert_eq!(t.phi, IntPoly::from_i64(&[-63, 0, 21, 1]));
        assert!(t.q1.is_monic() && t.q1.degree() == Some(6));
        assert!(q_polys_table1(&field(270)).is_err());
    }

    #[test]
    fn a2_exponent_rows() {
        assert_eq!(p_basis_a2(&field(54)).unwrap().exponents(), vec![0, 0, 0, 1, 1, 2, 3, 3, 3]);
        assert_eq!(p_basis_a2(&field(108)).unwrap().exponents(), vec![0, 0, 0, 1, 1, 2, 2, 3, 3]);
        // c = 2, k = 7: certified v_3 = 24
        let b = p_basis_a2(&field(5103)).unwrap();
        assert_eq!(b.exponents(), vec![0, 0, 1, 2, 3, 3, 4, 5, 6]);
        // c = 2, k = 4: certified v_3 = 25
        let b = p_basis_a2(&field(2916)).unwrap();
        assert_eq!(b.exponents(), vec![0, 0, 1, 2, 3, 3, 5, 5, 6]);
    }

    #[test]
    fn a4_bases() {
        let f = field(5);
        assert_eq!(p_basis_a4(&f, &case(&f, 3)).unwrap(), PIntegralBasis::power_basis(&Int::from(3)));
        let f = field(10);
        let b = p_basis_a4(&f, &case(&f, 3)).unwrap();
        assert_eq!(b.exponents(), vec![0, 0, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(b.slots[6].numerator, IntPoly::from_i64(&[1, 0, 0, 10, 0, 0, 1]));
        assert_eq!(b.slots[8].numerator, IntPoly::from_i64(&[0, 0, 1, 0, 0, 10, 0, 0, 1]));
        let f = field(26);
        let b = p_basis_a4(&f, &case(&f, 3)).unwrap();
        assert_eq!(b.exponents(), vec![0, 0, 0, 0, 0, 0, 1, 1, 2]);
        assert_eq!(b.slots[8].numerator.coeff(7), int_pow(&Int::from(26), 7));
        assert_eq!(b.slots[8].numerator.coeff(0), Int::one());
    }

    #[test]
    fn every_local_basis_has_valid_shape() {
        for a in [54i64, 108, 5103, 2916, 270, 10, 26, 5, 256, -54, -189, 1458] {
            let f = field(a);
            for (_, v, b) in local_data(&f).unwrap() {
                b.validate().unwrap();
                assert_eq!(b.exponent_sum(), v);
            }
        }
    }
}
