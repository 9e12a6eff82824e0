//! Dense univariate polynomials over Z and over F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Int;

/// Polynomial with integer coefficients, constant term first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: Int, k: usize) -> Self {
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    pub fn x() -> Self {
        IntPoly::monomial(Int::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division by a monic polynomial: `self = q·divisor + r`
    /// with `deg r < deg divisor`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "division needs a monic divisor");
        let m = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= m {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); rem.len() - m];
        for i in (0..quot.len()).rev() {
            let c = rem[i + m].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(m);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// `self(x + h)`
    pub fn taylor_shift(&self, h: &Int) -> IntPoly {
        let shifted = IntPoly::new(vec![h.clone(), Int::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &shifted) + &IntPoly::constant(c.clone()))
    }

    /// Reduction modulo `x^n - a`.
    pub fn reduce_pure(&self, n: usize, a: &Int) -> IntPoly {
        let mut out = vec![Int::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let wraps = (i / n) as u32;
            out[i % n] += c * crate::arith::int_pow(a, wraps);
        }
        IntPoly::new(out)
    }

    pub fn eval(&self, x: &Int) -> Int {
        self.coeffs
            .iter()
            .rev()
            .fold(Int::zero(), |acc, c| acc * x + c)
    }

    /// Reduction of all coefficients into `[0, p)`.
    pub fn to_fp(&self, p: u64) -> FpPoly {
        let pm = Int::from(p);
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pm);
                    crate::arith::to_u64(&r).expect("residue fits u64")
                })
                .collect(),
        )
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().cloned().collect(), "x")
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: Vec<Int>, var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let show_mag = !mag.is_one() || i == 0;
        if show_mag {
            write!(f, "{mag}")?;
        }
        match i {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Polynomial over the prime field F_p, constant term first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = invmod(lc, self.p);
                FpPoly::new(self.p, self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect())
            }
        }
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        assert!(!d.is_zero());
        let p = self.p;
        let m = d.coeffs.len() - 1;
        let inv = invmod(*d.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        while r.len() > m {
            let top = *r.last().unwrap();
            if top != 0 {
                let c = mulmod(top, inv, p);
                let off = r.len() - 1 - m;
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    r[off + j] = (r[off + j] + p - mulmod(c, dj, p)) % p;
                }
            }
            r.pop();
        }
        FpPoly::new(p, r)
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff the polynomial has no repeated factor over the algebraic
    /// closure of F_p.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let d = self.derivative();
        if d.is_zero() {
            // a p-th power (or constant)
            return self.degree() == Some(0);
        }
        self.gcd(&d).degree() == Some(0)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn pow(&self, k: u32) -> FpPoly {
        (0..k).fold(FpPoly::new(self.p, vec![1]), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().map(|&c| Int::from(c)).collect(), "Y")
    }
}
