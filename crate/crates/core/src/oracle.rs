//! Linear-algebra oracle: integrality tests, order arithmetic and a round-2
//! computation of the maximal order, independent of the index formulas.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{to_u64, Int, Rat};
use crate::error::{Error, Result};
use crate::field::NonicField;
use crate::glue::{basis_from_hnf, GlobalBasis};
use crate::linalg::{charpoly_int, det_rat, hnf_lower, kernel_mod_p, solve_lower_integral, solve_rational};
use crate::theta::{ThetaPoly, DEGREE};

/// Matrix of multiplication by β on the power basis: column `i` holds the
/// coordinates of `β·θ^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultMatrix {
    m: Vec<Vec<Rat>>,
}

impl MultMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.m[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.m
    }

    pub fn trace(&self) -> Rat {
        (0..DEGREE).map(|i| self.m[i][i].clone()).sum()
    }

    /// Characteristic polynomial, constant term first.
    pub fn charpoly(&self) -> Vec<Rat> {
        let den = self
            .m
            .iter()
            .flatten()
            .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
        let scaled: Vec<Vec<Int>> = self
            .m
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
            .collect();
        // χ_{A/D}(x) = D^{-n}·χ_A(D·x)
        let c = charpoly_int(&scaled);
        let n = c.len() - 1;
        c.into_iter()
            .enumerate()
            .map(|(k, ck)| Rat::new(ck, num_traits::pow(den.clone(), n - k)))
            .collect()
    }
}

pub fn mult_matrix(beta: &ThetaPoly, a: &Int) -> MultMatrix {
    let cols: Vec<ThetaPoly> = (0..DEGREE)
        .map(|i| beta.mul(&ThetaPoly::theta_pow(i), a))
        .collect();
    MultMatrix {
        m: (0..DEGREE)
            .map(|r| (0..DEGREE).map(|c| cols[c].coord(r).clone()).collect())
            .collect(),
    }
}

/// β is integral iff its characteristic polynomial lies in Z[x].
pub fn is_algebraic_integer(beta: &ThetaPoly, a: &Int) -> bool {
    mult_matrix(beta, a).charpoly().iter().all(|c| c.is_integer())
}

/// Second test: find the first linear relation among `1, β, β², …` and check
/// that it has integer coefficients (that relation is the minimal polynomial).
pub fn is_algebraic_integer_by_powers(beta: &ThetaPoly, a: &Int) -> bool {
    let mut powers: Vec<Vec<Rat>> = vec![ThetaPoly::one().coords().to_vec()];
    let mut current = ThetaPoly::one();
    for _ in 0..DEGREE {
        current = current.mul(beta, a);
        let target = current.coords().to_vec();
        if let Some(c) = solve_rational(&powers, &target) {
            return c.iter().all(|x| x.is_integer());
        }
        powers.push(target);
    }
    unreachable!("ten elements of a 9-dimensional space are dependent")
}

/// Product of scaled elements `u, v ∈ Z^9` in Z[x]/(x⁹ − a).
fn mul_int(u: &[Int], v: &[Int], a: &Int) -> Vec<Int> {
    let mut out = vec![Int::zero(); DEGREE];
    for (i, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in v.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let p = x * y;
            if i + j < DEGREE {
                out[i + j] += p;
            } else {
                out[i + j - DEGREE] += p * a;
            }
        }
    }
    out
}

fn exact_div(v: Vec<Int>, d: &Int) -> Option<Vec<Int>> {
    v.into_iter()
        .map(|x| {
            let (q, r) = x.div_rem(d);
            r.is_zero().then_some(q)
        })
        .collect()
}

/// Full-rank module `rows / den` in the power basis, with `rows` in
/// lower-triangular Hermite form and `gcd(den, rows) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderModule {
    den: Int,
    rows: Vec<Vec<Int>>,
}

impl OrderModule {
    pub fn power_basis() -> Self {
        OrderModule {
            den: Int::one(),
            rows: (0..DEGREE)
                .map(|i| (0..DEGREE).map(|j| Int::from(u8::from(i == j))).collect())
                .collect(),
        }
    }

    /// Module generated by `gens / den`. A modulus `m` with `m·Z^9` inside
    /// the scaled lattice may be supplied to keep entries small.
    pub fn from_scaled(gens: &[Vec<Int>], den: &Int, modulus: Option<&Int>) -> Result<Self> {
        let rows = hnf_lower(gens, DEGREE, modulus)?;
        let g = rows.iter().flatten().fold(den.clone(), |g, x| g.gcd(x));
        if g.is_one() {
            return Ok(OrderModule { den: den.clone(), rows });
        }
        Ok(OrderModule {
            den: den / &g,
            rows: rows.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect(),
        })
    }

    pub fn from_elements(gens: &[ThetaPoly]) -> Result<Self> {
        let den = gens.iter().fold(Int::one(), |acc, g| acc.lcm(&g.denominator()));
        let scaled: Vec<Vec<Int>> = gens
            .iter()
            .map(|g| g.coords().iter().map(|c| c.numer() * (&den / c.denom())).collect())
            .collect();
        OrderModule::from_scaled(&scaled, &den, None)
    }

    pub fn from_basis(basis: &GlobalBasis) -> Result<Self> {
        OrderModule::from_elements(basis.elements())
    }

    pub fn den(&self) -> &Int {
        &self.den
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn elements(&self) -> Vec<ThetaPoly> {
        let d = Rat::from_integer(self.den.clone());
        self.rows
            .iter()
            .map(|r| ThetaPoly::new(std::array::from_fn(|i| Rat::from_integer(r[i].clone()) / &d)))
            .collect()
    }

    /// `x·den` as an integer vector, if integral.
    fn scaled(&self, x: &ThetaPoly) -> Option<Vec<Int>> {
        let d = Rat::from_integer(self.den.clone());
        x.coords()
            .iter()
            .map(|c| {
                let y = c * &d;
                y.is_integer().then(|| y.to_integer())
            })
            .collect()
    }

    /// Coordinates of `x` in the module basis, if `x` lies in the module.
    pub fn coordinates(&self, x: &ThetaPoly) -> Option<Vec<Int>> {
        solve_lower_integral(&self.rows, &self.scaled(x)?)
    }

    pub fn contains(&self, x: &ThetaPoly) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn contains_power_basis(&self) -> bool {
        (0..DEGREE).all(|j| self.contains(&ThetaPoly::theta_pow(j)))
    }

    /// `[M : Z[θ]]`.
    pub fn index_over_power_basis(&self) -> Result<Int> {
        if !self.contains_power_basis() {
            return Err(Error::MissingPowerBasis);
        }
        let diag: Int = self.rows.iter().enumerate().map(|(j, r)| r[j].clone()).product();
        let num = num_traits::pow(self.den.clone(), DEGREE);
        let (q, r) = num.div_rem(&diag);
        if !r.is_zero() {
            return Err(Error::Internal("index is not an integer".into()));
        }
        Ok(q)
    }

    pub fn to_global_basis(&self) -> Result<GlobalBasis> {
        basis_from_hnf(&self.rows, &self.den)
    }

    /// Structure constants: coordinates of `ω_i·ω_j` for `i ≤ j`, or `None`
    /// if some product leaves the module.
    fn structure_constants(&self, a: &Int) -> Option<Vec<Vec<Vec<Int>>>> {
        let mut sc = vec![vec![Vec::new(); DEGREE]; DEGREE];
        for i in 0..DEGREE {
            for j in i..DEGREE {
                let prod = exact_div(mul_int(&self.rows[i], &self.rows[j], a), &self.den)?;
                let c = solve_lower_integral(&self.rows, &prod)?;
                sc[j][i] = c.clone();
                sc[i][j] = c;
            }
        }
        Some(sc)
    }

    pub fn is_ring(&self, a: &Int) -> bool {
        self.contains(&ThetaPoly::one()) && self.structure_constants(a).is_some()
    }
}

/// `[M : Z[θ]]`, an error when M does not contain Z[θ].
pub fn module_index(m: &OrderModule) -> Result<Int> {
    m.index_over_power_basis()
}

fn require_ring(o: &OrderModule, a: &Int) -> Result<Vec<Vec<Vec<Int>>>> {
    if !o.contains_power_basis() {
        return Err(Error::MissingPowerBasis);
    }
    o.structure_constants(a)
        .ok_or_else(|| Error::Internal("module is not closed under multiplication".into()))
}

fn prime_u64(p: &Int) -> Result<u64> {
    to_u64(p).ok_or_else(|| Error::Unsupported(format!("prime {p} does not fit in 64 bits")))
}

/// Multiplication in O/pO using reduced structure constants.
fn mul_mod(x: &[u64], y: &[u64], sc: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    let mut acc = vec![0u128; DEGREE];
    let pp = p as u128;
    for i in 0..DEGREE {
        if x[i] == 0 {
            continue;
        }
        for j in 0..DEGREE {
            if y[j] == 0 {
                continue;
            }
            let xy = (x[i] as u128 * y[j] as u128) % pp;
            for (k, a) in acc.iter_mut().enumerate() {
                *a = (*a + xy * sc[i][j][k] as u128) % pp;
            }
        }
    }
    acc.into_iter().map(|v| v as u64).collect()
}

fn pow_mod(x: &[u64], mut e: u128, sc: &[Vec<Vec<u64>>], p: u64, one: &[u64]) -> Vec<u64> {
    let mut base = x.to_vec();
    let mut out = one.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            out = mul_mod(&out, &base, sc, p);
        }
        base = mul_mod(&base, &base, sc, p);
        e >>= 1;
    }
    out
}

fn reduce(v: &[Int], p: &Int) -> Vec<u64> {
    v.iter().map(|x| to_u64(&x.mod_floor(p)).expect("residue")).collect()
}

fn lift(v: &[u64], rows: &[Vec<Int>]) -> Vec<Int> {
    let mut out = vec![Int::zero(); DEGREE];
    for (c, r) in v.iter().zip(rows) {
        if *c == 0 {
            continue;
        }
        let c = Int::from(*c);
        for (o, x) in out.iter_mut().zip(r) {
            *o += &c * x;
        }
    }
    out
}

/// The p-radical of O: kernel of `x ↦ x^{p^m}` on O/pO with `p^m ≥ 9`,
/// lifted and joined with pO. Returned with the same denominator as O.
pub fn p_radical(o: &OrderModule, p: &Int, a: &Int) -> Result<OrderModule> {
    let sc = require_ring(o, a)?;
    let pu = prime_u64(p)?;
    let scp: Vec<Vec<Vec<u64>>> = sc
        .iter()
        .map(|r| r.iter().map(|c| reduce(c, p)).collect())
        .collect();
    let one = reduce(&o.coordinates(&ThetaPoly::one()).expect("1 ∈ O"), p);
    let mut q: u128 = pu as u128;
    while q < DEGREE as u128 {
        q *= pu as u128;
    }
    let images: Vec<Vec<u64>> = (0..DEGREE)
        .map(|i| {
            let mut e = vec![0u64; DEGREE];
            e[i] = 1;
            pow_mod(&e, q, &scp, pu, &one)
        })
        .collect();
    let mut gens: Vec<Vec<Int>> = kernel_mod_p(&images, pu).iter().map(|v| lift(v, &o.rows)).collect();
    gens.extend(o.rows.iter().map(|r| r.iter().map(|x| x * p).collect()));
    let modulus = p * &o.den;
    let rows = hnf_lower(&gens, DEGREE, Some(&modulus))?;
    Ok(OrderModule { den: o.den.clone(), rows })
}

/// `{x ∈ K : x·I ⊆ I}` for an ideal `I ⊇ pO` given with the denominator of O.
pub fn multiplier_ring(o: &OrderModule, ideal: &OrderModule, p: &Int, a: &Int) -> Result<OrderModule> {
    if ideal.den != o.den {
        return Err(Error::Internal("ideal and order use different denominators".into()));
    }
    let pu = prime_u64(p)?;
    let images = o
        .rows
        .iter()
        .map(|y| {
            let mut img = Vec::with_capacity(DEGREE * DEGREE);
            for g in &ideal.rows {
                let prod = exact_div(mul_int(y, g, a), &o.den)
                    .ok_or_else(|| Error::Internal("product left O".into()))?;
                let c = solve_lower_integral(&ideal.rows, &prod)
                    .ok_or_else(|| Error::Internal("ideal is not an O-ideal".into()))?;
                img.extend(reduce(&c, p));
            }
            Ok(img)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut gens: Vec<Vec<Int>> = kernel_mod_p(&images, pu).iter().map(|v| lift(v, &o.rows)).collect();
    gens.extend(o.rows.iter().map(|r| r.iter().map(|x| x * p).collect()));
    let den = p * &o.den;
    OrderModule::from_scaled(&gens, &den, Some(&den))
}

/// One round-2 step at p: the multiplier ring of the p-radical.
pub fn enlarge(o: &OrderModule, p: &Int, a: &Int) -> Result<OrderModule> {
    let rad = p_radical(o, p, a)?;
    multiplier_ring(o, &rad, p, a)
}

pub fn p_maximal(o: &OrderModule, p: &Int, a: &Int) -> Result<bool> {
    Ok(enlarge(o, p, a)? == *o)
}

/// One enlargement: the prime and the index over Z[θ] afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTwoStep {
    pub p: Int,
    pub index: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalOrder {
    pub order: OrderModule,
    pub steps: Vec<RoundTwoStep>,
}

/// Round 2 from Z[θ] at every prime whose square divides disc(f), i.e. every
/// prime dividing 3a. Each step must strictly increase the order.
pub fn maximal_order_with_log(field: &NonicField) -> Result<MaximalOrder> {
    let a = field.a();
    let mut order = OrderModule::power_basis();
    let mut index = Int::one();
    let mut steps = Vec::new();
    for p in field.relevant_primes() {
        loop {
            let next = enlarge(&order, &p, a)?;
            if next == order {
                break;
            }
            let next_index = next.index_over_power_basis()?;
            if next_index <= index || !next_index.is_multiple_of(&index) {
                return Err(Error::Internal(format!(
                    "round-2 step at p = {p} did not enlarge the order ({index} -> {next_index})"
                )));
            }
            index = next_index;
            steps.push(RoundTwoStep { p: p.clone(), index: index.clone() });
            order = next;
        }
    }
    Ok(MaximalOrder { order, steps })
}

pub fn maximal_order(field: &NonicField) -> Result<OrderModule> {
    Ok(maximal_order_with_log(field)?.order)
}

/// `det(Tr(g_i g_j))` over the module basis.
pub fn trace_discriminant(m: &OrderModule, a: &Int) -> Rat {
    let g = m.elements();
    let mut gram = vec![vec![Rat::zero(); DEGREE]; DEGREE];
    for i in 0..DEGREE {
        for j in i..DEGREE {
            let t = mult_matrix(&g[i].mul(&g[j], a), a).trace();
            gram[j][i] = t.clone();
            gram[i][j] = t;
        }
    }
    det_rat(&gram)
}
