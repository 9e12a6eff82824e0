//! Exact integer arithmetic: valuations, factorization, Bézout, lattice counts.
//!
//! `Int` and `Rat` are the `num` big integer and big rational types. Everything
//! in this crate is exact; there is no floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Largest bound below which the strong-pseudoprime bases 2..17 are a proof
/// of primality.
pub const MR_CERTIFIED_LIMIT: u64 = 341_550_071_728_321;
const MR_CERTIFIED_BASES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];
const MR_PROBABLE_BASES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;
pub const DEFAULT_RHO_ITERATIONS: u64 = 2_000_000;
pub const FACTOR_BUDGET_ENV: &str = "NONIC_FACTOR_BUDGET";

/// p-adic valuation of a nonzero integer. The sign of `n` is ignored.
pub fn vp(n: &Int, p: &Int) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut m = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// `Σ_{i=0}^{t-1} ⌊i·b/t⌋`: the number of points with positive integer
/// coordinates on or under the segment from `(0, b)` to `(t, 0)`.
pub fn lattice_count(t: u64, b: u64) -> u64 {
    assert!(t >= 1 && b >= 1, "lattice_count needs t, b >= 1");
    (0..t).map(|i| i * b / t).sum()
}

/// Closed form `((t-1)(b-1) + gcd(t,b) - 1) / 2` of [`lattice_count`].
pub fn lattice_count_closed(t: u64, b: u64) -> u64 {
    ((t - 1) * (b - 1) + t.gcd(&b) - 1) / 2
}

/// Returns `(g, u, v)` with `u·x + v·y = g = gcd(x, y) > 0`.
pub fn extended_gcd(x: &Int, y: &Int) -> Result<(Int, Int, Int)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut old_r, mut r) = (x.clone(), y.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Limits for [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division runs over all candidates up to this bound.
    pub trial_bound: u64,
    /// Iteration budget for each Pollard–Brent rho attempt.
    pub rho_iterations: u64,
    /// Accept Miller–Rabin probable primes above the certified range.
    pub allow_probable_primes: bool,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: DEFAULT_TRIAL_BOUND,
            rho_iterations: DEFAULT_RHO_ITERATIONS,
            allow_probable_primes: false,
        }
    }
}

impl FactorConfig {
    /// Default configuration with the trial bound taken from
    /// `NONIC_FACTOR_BUDGET` when that variable holds a positive integer.
    pub fn from_env() -> Self {
        let mut cfg = FactorConfig::default();
        if let Some(bound) = std::env::var(FACTOR_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&b| b >= 2)
        {
            cfg.trial_bound = bound;
        }
        cfg
    }
}

/// Sign and prime-power decomposition of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(Int, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            sign: 1,
            factors: Vec::new(),
        }
    }

    /// Builds from `(prime, exponent)` pairs, merging repeats and dropping
    /// zero exponents. Primality of the entries is the caller's promise.
    pub fn from_parts(sign: i8, parts: impl IntoIterator<Item = (Int, u32)>) -> Self {
        let mut map: BTreeMap<Int, u32> = BTreeMap::new();
        for (p, e) in parts {
            if e > 0 {
                *map.entry(p).or_default() += e;
            }
        }
        Factorization {
            sign: if sign < 0 { -1 } else { 1 },
            factors: map.into_iter().collect(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(Int, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Int> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &Int) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    pub fn value(&self) -> Int {
        let mag = self
            .factors
            .iter()
            .fold(Int::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        Factorization::from_parts(
            self.sign * other.sign,
            self.factors.iter().chain(&other.factors).cloned(),
        )
    }

    pub fn pow(&self, k: u32) -> Factorization {
        let sign = if self.sign < 0 && k % 2 == 1 { -1 } else { 1 };
        Factorization::from_parts(sign, self.factors.iter().map(|(p, e)| (p.clone(), e * k)))
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide.
    pub fn div(&self, other: &Factorization) -> Option<Factorization> {
        let mut parts = Vec::new();
        for (p, e) in &self.factors {
            let f = other.exponent_of(p);
            if f > *e {
                return None;
            }
            parts.push((p.clone(), e - f));
        }
        if other.primes().any(|p| self.exponent_of(p) == 0) {
            return None;
        }
        Some(Factorization::from_parts(self.sign * other.sign, parts))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Complete certified factorization of `n`, `|n| > 1`.
pub fn factorize(n: &Int, cfg: &FactorConfig) -> Result<Factorization> {
    if n.abs() <= Int::one() {
        return Err(Error::InvalidInput(format!("cannot factor {n}")));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut parts = Vec::new();

    let mut d = 2u64;
    while d <= cfg.trial_bound {
        let dd = Int::from(d);
        if &dd * &dd > m {
            break;
        }
        let mut e = 0;
        while m.is_multiple_of(&dd) {
            m /= &dd;
            e += 1;
        }
        if e > 0 {
            parts.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(Factorization::from_parts(sign, parts));
    }
    // Every prime below `d` is gone, so a cofactor below d^2 is prime.
    let trial_reach = Int::from(d) * Int::from(d);
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c < trial_reach || is_prime_certified(&c, cfg)? {
            parts.push((c, 1));
            continue;
        }
        match pollard_brent(&c, cfg.rho_iterations) {
            Some(f) => {
                let g = &c / &f;
                stack.push(f);
                stack.push(g);
            }
            None => {
                return Err(Error::IncompleteFactorization {
                    n: n.clone(),
                    cofactor: c,
                })
            }
        }
    }
    Ok(Factorization::from_parts(sign, parts))
}

/// Deterministic primality below [`MR_CERTIFIED_LIMIT`]; above it an error
/// unless `cfg.allow_probable_primes` is set.
pub fn is_prime_certified(n: &Int, cfg: &FactorConfig) -> Result<bool> {
    if n < &Int::from(2) {
        return Ok(false);
    }
    for &sp in &MR_CERTIFIED_BASES {
        let sp = Int::from(sp);
        if n == &sp {
            return Ok(true);
        }
        if n.is_multiple_of(&sp) {
            return Ok(false);
        }
    }
    if n < &Int::from(MR_CERTIFIED_LIMIT) {
        return Ok(MR_CERTIFIED_BASES.iter().all(|&b| strong_probable_prime(n, b)));
    }
    let probable = MR_PROBABLE_BASES.iter().all(|&b| strong_probable_prime(n, b));
    if !probable {
        Ok(false)
    } else if cfg.allow_probable_primes {
        Ok(true)
    } else {
        Err(Error::UncertifiedPrime(n.clone()))
    }
}

/// Convenience primality check with the default configuration.
pub fn is_prime(n: &Int) -> Result<bool> {
    is_prime_certified(n, &FactorConfig::default())
}

fn strong_probable_prime(n: &Int, base: u64) -> bool {
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = Int::from(base).modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, trying a handful of polynomial constants.
fn pollard_brent(n: &Int, budget: u64) -> Option<Int> {
    if n.is_even() {
        return Some(Int::from(2));
    }
    for c in 1u64..=8 {
        let c = Int::from(c);
        let f = |x: &Int| (x * x + &c) % n;
        let mut y = Int::from(2);
        let mut r = 1u64;
        let mut q = Int::one();
        let mut g = Int::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut spent = 0u64;
        const BLOCK: u64 = 128;
        while g.is_one() && spent < budget {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            spent += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Greatest common divisor of a nonempty list (used for Bézout vectors).
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Int {
    xs.into_iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Bézout coefficients of a list: `Σ u_i x_i = gcd(x)`, built by folding
/// [`extended_gcd`] left to right.
pub fn bezout_vector(xs: &[Int]) -> Result<(Int, Vec<Int>)> {
    let mut g = Int::zero();
    let mut coeffs: Vec<Int> = Vec::with_capacity(xs.len());
    for x in xs {
        if g.is_zero() && x.is_zero() {
            coeffs.push(Int::zero());
            continue;
        }
        let (h, u, v) = extended_gcd(&g, x)?;
        for c in coeffs.iter_mut() {
            *c *= &u;
        }
        coeffs.push(v);
        g = h;
    }
    if g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok((g, coeffs))
}

pub fn rat(n: impl Into<Int>, d: impl Into<Int>) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int_pow(base: &Int, e: u32) -> Int {
    num_traits::pow(base.clone(), e as usize)
}

pub(crate) fn to_u64(n: &Int) -> Option<u64> {
    if n.sign() == Sign::Minus {
        None
    } else {
        n.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(&int(54), &int(3)).unwrap(), 3);
        assert_eq!(vp(&int(-108), &int(2)).unwrap(), 2);
        assert_eq!(vp(&int(7), &int(3)).unwrap(), 0);
        assert_eq!(vp(&int(0), &int(3)), Err(Error::ZeroValuation));
    }

    #[test]
    fn factorize_small() {
        let cfg = FactorConfig::default();
        let f = factorize(&int(108), &cfg).unwrap();
        assert_eq!(f.sign(), 1);
        assert_eq!(f.factors(), &[(int(2), 2), (int(3), 3)]);
        let f = factorize(&int(-54), &cfg).unwrap();
        assert_eq!(f.sign(), -1);
        assert_eq!(f.factors(), &[(int(2), 1), (int(3), 3)]);
        let f = factorize(&int(97), &cfg).unwrap();
        assert_eq!(f.factors(), &[(int(97), 1)]);
        assert!(factorize(&int(1), &cfg).is_err());
    }

    #[test]
    fn factorize_past_trial_bound_uses_rho() {
        let cfg = FactorConfig {
            trial_bound: 100,
            ..FactorConfig::default()
        };
        // 1000003 * 1000033, both prime
        let n = int(1_000_003) * int(1_000_033);
        let f = factorize(&n, &cfg).unwrap();
        assert_eq!(f.factors(), &[(int(1_000_003), 1), (int(1_000_033), 1)]);
        assert_eq!(f.value(), n);
    }

    #[test]
    fn factorize_refuses_uncertified_prime() {
        let cfg = FactorConfig {
            trial_bound: 100,
            ..FactorConfig::default()
        };
        // 2^61 - 1 is prime but beyond the deterministic range.
        let m61 = (Int::one() << 61) - 1;
        assert!(matches!(
            factorize(&m61, &cfg),
            Err(Error::UncertifiedPrime(_))
        ));
        let lax = FactorConfig {
            allow_probable_primes: true,
            ..cfg
        };
        assert_eq!(factorize(&m61, &lax).unwrap().factors(), &[(m61, 1)]);
    }

    #[test]
    fn factorize_budget_exhaustion_is_an_error() {
        let cfg = FactorConfig {
            trial_bound: 10,
            rho_iterations: 1,
            allow_probable_primes: false,
        };
        let n = int(1_000_003) * int(1_000_033);
        assert!(matches!(
            factorize(&n, &cfg),
            Err(Error::IncompleteFactorization { .. })
        ));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice_count(9, 3), 9);
        assert_eq!(lattice_count(1, 5), 0);
        // brute force: floor(2i/9) for i = 0..8 is 0,0,0,0,0,1,1,1,1
        assert_eq!(lattice_count(9, 2), 4);
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(extended_gcd(&int(6), &int(4)).unwrap(), (int(2), int(1), int(-1)));
        assert_eq!(extended_gcd(&int(1), &int(17)).unwrap(), (int(1), int(1), int(0)));
        assert_eq!(extended_gcd(&int(27), &int(2)).unwrap(), (int(1), int(1), int(-13)));
        assert_eq!(extended_gcd(&int(0), &int(0)), Err(Error::GcdOfZeros));
        let (g, u, v) = extended_gcd(&int(-12), &int(18)).unwrap();
        assert_eq!(g, int(6));
        assert_eq!(u * int(-12) + v * int(18), int(6));
    }

    #[test]
    fn bezout_vector_combines() {
        let xs = [int(6), int(10), int(15)];
        let (g, us) = bezout_vector(&xs).unwrap();
        assert_eq!(g, int(1));
        let s: Int = xs.iter().zip(&us).map(|(x, u)| x * u).sum();
        assert_eq!(s, int(1));
    }

    #[test]
    fn factorization_display_and_division() {
        let a = Factorization::from_parts(1, [(int(2), 8), (int(3), 16)]);
        assert_eq!(a.to_string(), "2^8*3^16");
        let b = Factorization::from_parts(1, [(int(3), 13)]);
        assert_eq!(a.mul(&b.pow(2)).to_string(), "2^8*3^42");
        assert_eq!(a.mul(&b.pow(2)).div(&b.pow(2)).unwrap(), a);
        assert!(b.div(&a).is_none());
    }

    proptest! {
        #[test]
        fn factorize_reconstructs(n in 2i64..5_000_000) {
            let f = factorize(&int(n), &FactorConfig::default()).unwrap();
            prop_assert_eq!(f.value(), int(n));
            for p in f.primes() {
                prop_assert!(is_prime(p).unwrap());
            }
        }

        #[test]
        fn rational_add_sub_is_exact(a in -10_000i64..10_000, b in 1i64..10_000,
                                     c in -10_000i64..10_000, d in 1i64..10_000) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }

        #[test]
        fn lattice_identity(t in 1u64..=50, b in 1u64..=50) {
            prop_assert_eq!(lattice_count(t, b), lattice_count_closed(t, b));
        }
    }
}
