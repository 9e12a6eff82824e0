//! Elements of Q(θ), θ⁹ = a, in the power basis 1, θ, …, θ⁸.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::poly::IntPoly;

pub const DEGREE: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaPoly {
    coords: [Rat; DEGREE],
}

impl ThetaPoly {
    pub fn new(coords: [Rat; DEGREE]) -> Self {
        ThetaPoly { coords }
    }

    pub fn zero() -> Self {
        ThetaPoly {
            coords: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn one() -> Self {
        ThetaPoly::theta_pow(0)
    }

    /// θ^k for k < 9.
    pub fn theta_pow(k: usize) -> Self {
        let mut t = ThetaPoly::zero();
        t.coords[k] = Rat::one();
        t
    }

    /// Image of an integer polynomial under x ↦ θ, reduced by θ⁹ = a.
    pub fn from_poly(p: &IntPoly, a: &Int) -> Self {
        let reduced = p.reduce_pure(DEGREE, a);
        let mut t = ThetaPoly::zero();
        for (i, c) in reduced.coeffs().iter().enumerate() {
            t.coords[i] = Rat::from_integer(c.clone());
        }
        t
    }

    /// `numerator / den` for an integer polynomial numerator.
    pub fn from_fraction(numerator: &IntPoly, den: &Int, a: &Int) -> Self {
        let d = Rat::from_integer(den.clone());
        let mut t = ThetaPoly::from_poly(numerator, a);
        for c in t.coords.iter_mut() {
            *c = &*c / &d;
        }
        t
    }

    pub fn coords(&self) -> &[Rat; DEGREE] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Index of the highest nonzero coordinate.
    pub fn degree(&self) -> Option<usize> {
        self.coords.iter().rposition(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> ThetaPoly {
        ThetaPoly {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    pub fn mul(&self, other: &ThetaPoly, a: &Int) -> ThetaPoly {
        let ar = Rat::from_integer(a.clone());
        let mut out = ThetaPoly::zero();
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x * y;
                if i + j < DEGREE {
                    out.coords[i + j] += prod;
                } else {
                    out.coords[i + j - DEGREE] += prod * &ar;
                }
            }
        }
        out
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> Int {
        self.coords
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `(numerators, d)` with `self = numerators / d`, `d` the least
    /// common denominator.
    pub fn to_scaled(&self) -> ([Int; DEGREE], Int) {
        let d = self.denominator();
        let nums = std::array::from_fn(|i| {
            let c = &self.coords[i];
            c.numer() * (&d / c.denom())
        });
        (nums, d)
    }

    pub fn has_integer_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl Add for &ThetaPoly {
    type Output = ThetaPoly;
    fn add(self, rhs: &ThetaPoly) -> ThetaPoly {
        ThetaPoly {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl Sub for &ThetaPoly {
    type Output = ThetaPoly;
    fn sub(self, rhs: &ThetaPoly) -> ThetaPoly {
        ThetaPoly {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl Neg for &ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        ThetaPoly {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..DEGREE).rev() {
            let c = &self.coords[i];
            if c.is_zero() {
                continue;
            }
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
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "θ")?,
                _ => write!(f, "θ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
