//! Gluing local bases into a global integral basis, and the canonical
//! triangular form used to compare modules.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{bezout_vector, int_pow, Factorization, Int, Rat};
use crate::closed_form::{index_valuation, PIntegralBasis};
use crate::error::{Error, Result};
use crate::field::{classify_prime, NonicField};
use crate::linalg::hnf_lower;
use crate::poly::IntPoly;
use crate::theta::{ThetaPoly, DEGREE};

/// Canonical basis of a rank-9 module containing Z[θ]: element `j` is
/// `(θ^j + Σ_{s<j} n_{js} θ^s) / d_j` with `0 ≤ n_{js} < d_j / d_s`.
///
/// Row `j` of [`GlobalBasis::matrix`] holds the coordinates of element `j`,
/// so the matrix is lower-triangular with diagonal `1/d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GlobalBasis {
    elements: Vec<ThetaPoly>,
}

impl GlobalBasis {
    pub fn power_basis() -> Self {
        GlobalBasis {
            elements: (0..DEGREE).map(ThetaPoly::theta_pow).collect(),
        }
    }

    pub fn elements(&self) -> &[ThetaPoly] {
        &self.elements
    }

    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        self.elements.iter().map(|e| e.coords().to_vec()).collect()
    }

    pub fn denominators(&self) -> Vec<Int> {
        self.elements
            .iter()
            .enumerate()
            .map(|(j, e)| e.coord(j).denom().clone())
            .collect()
    }

    /// `[O : Z[θ]] = ∏ d_j`
    pub fn index(&self) -> Int {
        self.denominators().iter().product()
    }

    pub fn is_power_basis(&self) -> bool {
        *self == GlobalBasis::power_basis()
    }

    pub fn denominators_chain(&self) -> bool {
        self.denominators()
            .windows(2)
            .all(|w| w[1].is_multiple_of(&w[0]))
    }

    /// Integer numerators of element `j` over `d_j`, constant term first.
    pub fn numerators(&self, j: usize) -> Vec<Int> {
        let d = Rat::from_integer(self.denominators()[j].clone());
        self.elements[j]
            .coords()
            .iter()
            .take(j + 1)
            .map(|c| (c * &d).to_integer())
            .collect()
    }
}

impl fmt::Display for GlobalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, e) in self.elements.iter().enumerate() {
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "  [{j}] {e}")?;
        }
        Ok(())
    }
}

/// Unique triangular form of the module spanned by `generators`.
pub fn canonicalize(generators: &[ThetaPoly]) -> Result<GlobalBasis> {
    let den = generators
        .iter()
        .fold(Int::one(), |acc, g| acc.lcm(&g.denominator()));
    let rows: Vec<Vec<Int>> = generators
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        })
        .collect();
    basis_from_hnf(&hnf_lower(&rows, DEGREE, None)?, &den)
}

/// Converts a lower-triangular HNF `h` of a module `h / den` into canonical
/// form, checking that the module contains Z[θ].
pub fn basis_from_hnf(h: &[Vec<Int>], den: &Int) -> Result<GlobalBasis> {
    let dr = Rat::from_integer(den.clone());
    let elements: Vec<ThetaPoly> = h
        .iter()
        .map(|row| {
            ThetaPoly::new(std::array::from_fn(|i| Rat::from_integer(row[i].clone()) / &dr))
        })
        .collect();
    for (j, e) in elements.iter().enumerate() {
        if !e.coord(j).numer().is_one() {
            return Err(Error::MissingPowerBasis);
        }
    }
    Ok(GlobalBasis { elements })
}

/// Below-leading part `numerator − x^j` of a slot; zero when the slot has
/// no denominator.
fn delta(b: &PIntegralBasis, j: usize) -> IntPoly {
    if b.slots[j].exponent == 0 {
        return IntPoly::zero();
    }
    &b.slots[j].numerator - &IntPoly::monomial(Int::one(), j)
}

/// Combines p-integral bases for distinct primes into one global basis.
pub fn glue(bases: &[PIntegralBasis], a: &Int) -> Result<GlobalBasis> {
    if bases.is_empty() {
        return Err(Error::MalformedBasis("no local bases to glue".into()));
    }
    let mut seen = BTreeSet::new();
    for b in bases {
        b.validate()?;
        if !seen.insert(b.p.clone()) {
            return Err(Error::DuplicatePrime(b.p.clone()));
        }
    }
    let mut elements = Vec::with_capacity(DEGREE);
    for j in 0..DEGREE {
        let powers: Vec<Int> = bases
            .iter()
            .map(|b| int_pow(&b.p, b.slots[j].exponent))
            .collect();
        let dj: Int = powers.iter().product();
        let z: Vec<Int> = powers.iter().map(|q| &dj / q).collect();
        let (g, u) = bezout_vector(&z)?;
        if !g.is_one() {
            return Err(Error::Internal(format!("z-values for slot {j} are not coprime")));
        }
        let beta = bases
            .iter()
            .enumerate()
            .fold(IntPoly::zero(), |acc, (i, b)| {
                &acc + &delta(b, j).scale(&(&u[i] * &z[i]))
            });
        let numerator = &IntPoly::monomial(Int::one(), j) + &beta;
        elements.push(ThetaPoly::from_fraction(&numerator, &dj, a));
    }
    canonicalize(&elements)
}

/// `I = ∏_p p^{v_p(I)}` over the primes dividing 3a.
pub fn total_index(field: &NonicField) -> Factorization {
    Factorization::from_parts(
        1,
        field.relevant_primes().into_iter().map(|p| {
            let v = index_valuation(field, &classify_prime(field, &p));
            (p, v)
        }),
    )
}

/// `d_K = 3^18·a^8 / I²`.
pub fn discriminant(field: &NonicField) -> Result<Factorization> {
    discriminant_for_index(field, &total_index(field))
}

pub fn discriminant_for_index(field: &NonicField, index: &Factorization) -> Result<Factorization> {
    field
        .poly_discriminant()
        .div(&index.pow(2))
        .ok_or_else(|| Error::Internal(format!("index {index} squared does not divide disc(f)")))
}

/// Whether two p-integral bases span the same module over Z_(p): each
/// expresses the other with p-integral coefficients.
pub fn same_local_module(x: &PIntegralBasis, y: &PIntegralBasis, a: &Int) -> bool {
    x.p == y.p && p_integral_in(x, y, a) && p_integral_in(y, x, a)
}

/// Every element of `y` is a p-integral combination of `x`'s elements.
fn p_integral_in(x: &PIntegralBasis, y: &PIntegralBasis, a: &Int) -> bool {
    let xs = x.elements(a);
    y.elements(a).iter().all(|target| {
        let mut rem = target.clone();
        for j in (0..DEGREE).rev() {
            let c = rem.coord(j) / xs[j].coord(j);
            if c.denom().is_multiple_of(&x.p) {
                return false;
            }
            if !c.is_zero() {
                rem = &rem - &xs[j].scale(&c);
            }
        }
        rem.is_zero()
    })
}
