//! The Newton-polygon path: first-order polygons and Ore's index count,
//! and a second-order analysis (key polynomial, φ-adic expansion,
//! V-polygon) for the 3-adic case A2.
//!
//! Only the configuration needed for x⁹ − a is supported at second order:
//! one first-order edge whose residual is a power of a linear ψ ≠ Y, and a
//! V-polygon all of whose sides have degree one. Anything else is reported
//! as [`Error::Unsupported`].

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int_pow, to_u64, vp, Int, Rat};
use crate::closed_form::{BasisSlot, PIntegralBasis};
use crate::error::{Error, Result};
use crate::field::{classify_prime, CaseTag, NonicField, PrimeCase};
use crate::poly::{FpPoly, IntPoly};
use crate::polygon::{Edge, NewtonPolygon};
use crate::theta::DEGREE;

fn small_prime(p: &Int) -> Result<u64> {
    to_u64(p).ok_or_else(|| Error::Unsupported(format!("prime {p} does not fit in 64 bits")))
}

fn integral_ordinate(y: &Rat) -> Result<u32> {
    if !y.is_integer() || y.is_negative() {
        return Err(Error::Internal(format!("ordinate {y} is not a natural number")));
    }
    y.to_integer()
        .to_u32()
        .ok_or_else(|| Error::Internal(format!("ordinate {y} too large")))
}

/// `x⁹ − a`
pub fn defining_poly(a: &Int) -> IntPoly {
    &IntPoly::monomial(Int::one(), DEGREE) - &IntPoly::constant(a.clone())
}

/// Lower hull of `(i, v_p(g_i))` over the nonzero coefficients of `g`.
pub fn first_order_polygon(g: &IntPoly, p: &Int) -> Result<NewtonPolygon> {
    if g.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    if g.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let vals = g
        .coeffs()
        .iter()
        .map(|c| if c.is_zero() { Ok(None) } else { vp(c, p).map(|v| Some(Int::from(v))) })
        .collect::<Result<Vec<_>>>()?;
    Ok(NewtonPolygon::from_valuations(&vals))
}

/// Residual polynomial of `g` along `edge`, over F_p. Coefficient `j` comes
/// from the point at abscissa `x₀ + e·j` when it lies on the edge.
pub fn residual_poly(g: &IntPoly, p: &Int, edge: &Edge) -> Result<FpPoly> {
    let pu = small_prime(p)?;
    let (ell, e) = edge.ell_e();
    let (x0, y0) = (&edge.start.0, &edge.start.1);
    let d = edge.degree();
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let x = x0 + e as usize * j;
        let expected = y0 - Rat::from_integer(&ell * Int::from(j));
        let c = g.coeff(x);
        let on_edge = !c.is_zero() && Rat::from_integer(Int::from(vp(&c, p)?)) == expected;
        let r = if on_edge {
            let q = c / int_pow(p, integral_ordinate(&expected)?);
            to_u64(&q.mod_floor(p)).expect("residue below p")
        } else {
            0
        };
        coeffs.push(r);
    }
    Ok(FpPoly::new(pu, coeffs))
}

/// A residual polynomial together with its edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPoly {
    pub edge: Edge,
    pub poly: FpPoly,
}

/// Residual polynomials of every negative-slope edge.
pub fn residual_polys(g: &IntPoly, p: &Int) -> Result<Vec<ResidualPoly>> {
    let poly = first_order_polygon(g, p)?.principal();
    poly.edges()
        .into_iter()
        .map(|edge| {
            let r = residual_poly(g, p, &edge)?;
            Ok(ResidualPoly { edge, poly: r })
        })
        .collect()
}

pub fn is_p_regular(g: &IntPoly, p: &Int) -> Result<bool> {
    Ok(residual_polys(g, p)?.iter().all(|r| r.poly.is_squarefree()))
}

/// v_p of the index of Z[root of g], by Ore's count of lattice points under
/// the principal polygon.
pub fn ore_index(g: &IntPoly, p: &Int) -> Result<u32> {
    if !is_p_regular(g, p)? {
        return Err(Error::NotRegular(p.clone()));
    }
    let poly = first_order_polygon(g, p)?.principal();
    Ok(poly.lattice_points_below() as u32)
}

/// The p-integral basis attached to a p-regular `g = f(x + h)`: slot `9 − j`
/// is `q_j(θ − h) / p^{⌊y_j⌋}` where `q_j = Σ_{i ≥ j} g_i x^{i−j}` and `y_j`
/// is the ordinate of the polygon at `j`.
pub fn ore_p_basis(g: &IntPoly, p: &Int, h: &Int, a: &Int) -> Result<PIntegralBasis> {
    if !is_p_regular(g, p)? {
        return Err(Error::NotRegular(p.clone()));
    }
    if g.degree() != Some(DEGREE) || !g.is_monic() {
        return Err(Error::InvalidInput(format!("{g} is not monic of degree 9")));
    }
    let poly = first_order_polygon(g, p)?.principal();
    let (last_x, last_y) = poly.last_vertex().cloned().expect("nonempty polygon");
    if !last_y.is_zero() {
        return Err(Error::Unsupported(format!(
            "principal polygon at p = {p} ends at height {last_y}"
        )));
    }
    let minus_h = -h;
    let mut slots = vec![None; DEGREE];
    for j in 1..=DEGREE {
        let y = if j >= last_x { Rat::zero() } else { poly.ordinate_at(j).expect("inside") };
        let exponent = y.floor().to_integer().to_u32().expect("small exponent");
        let q = IntPoly::new(g.coeffs()[j..].to_vec());
        slots[DEGREE - j] = Some(BasisSlot {
            numerator: q.taylor_shift(&minus_h).reduce_pure(DEGREE, a),
            exponent,
        });
    }
    let basis = PIntegralBasis {
        p: p.clone(),
        slots: slots.into_iter().map(|s| s.expect("filled")).collect(),
    };
    basis.validate()?;
    Ok(basis)
}

/// `V(P) = min_i (e·v_p(b_i) + i·ℓ)` for slope `−ℓ/e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondOrderValuation {
    pub p: Int,
    pub ell: Int,
    pub e: u64,
}

impl SecondOrderValuation {
    /// `λ = −ℓ/e`
    pub fn lambda(&self) -> Rat {
        Rat::new(-self.ell.clone(), Int::from(self.e))
    }

    /// `None` for the zero polynomial.
    pub fn value(&self, poly: &IntPoly) -> Option<Int> {
        poly.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let v = vp(c, &self.p).expect("nonzero");
                Int::from(self.e) * Int::from(v) + &self.ell * Int::from(i)
            })
            .min()
    }
}

/// Key polynomial φ for slope `λ = −ℓ/e` and residual factor ψ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPolynomial {
    pub phi: IntPoly,
    pub ell: Int,
    pub e: u64,
    pub psi: FpPoly,
}

impl KeyPolynomial {
    pub fn valuation(&self) -> SecondOrderValuation {
        SecondOrderValuation {
            p: Int::from(3),
            ell: self.ell.clone(),
            e: self.e,
        }
    }
}

fn consistency(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(what()))
    }
}

/// Key polynomial for case A2, with its defining properties checked:
/// φ ≡ x³ mod 3, φ has a one-sided polygon of slope λ = −c/3, its residual
/// is ψ = Y − b̄, `deg φ = e·deg ψ`, and `T(f) = ψ³`.
pub fn key_polynomial(field: &NonicField) -> Result<KeyPolynomial> {
    let t = field
        .three_data()
        .ok_or_else(|| Error::WrongCase("key polynomial needs case A2".into()))?;
    let three = Int::from(3);
    let b = &t.b;
    let x3 = IntPoly::monomial(Int::one(), 3);
    let phi = if (b * b).mod_floor(&Int::from(9)).is_one() {
        &x3 - &IntPoly::constant(int_pow(&three, t.c) * b)
    } else if t.c == 1 {
        let s = if t.k % 2 == 0 { 1 } else { -1 };
        &x3 - &IntPoly::new(vec![&three * b, Int::from(s) * &three * b])
    } else {
        let s = if (t.k / 2) % 2 == 0 { 1 } else { -1 };
        &x3 - &IntPoly::new(vec![Int::from(9) * b, Int::zero(), Int::from(s) * &three * b])
    };
    let b3 = to_u64(&b.mod_floor(&three)).expect("residue");
    let psi = FpPoly::new(3, vec![3 - b3, 1]);

    let reduced = phi.to_fp(3);
    consistency(reduced == FpPoly::new(3, vec![0, 0, 0, 1]), || {
        format!("key polynomial {phi} is not x^3 mod 3")
    })?;
    let polygon = first_order_polygon(&phi, &three)?;
    let edges = polygon.edges();
    let expected = Rat::new(-Int::from(t.c), three.clone());
    consistency(edges.len() == 1 && edges[0].slope() == expected, || {
        format!("polygon of {phi} is not one-sided of slope {expected}")
    })?;
    let residual = residual_poly(&phi, &three, &edges[0])?;
    consistency(residual.monic() == psi, || {
        format!("residual of {phi} is {residual}, expected {psi}")
    })?;
    let (ell, e) = edges[0].ell_e();
    consistency(phi.degree() == Some(e as usize * psi.degree().unwrap_or(0)), || {
        format!("deg {phi} differs from e·deg ψ")
    })?;
    let f = defining_poly(field.a());
    let tf = residual_polys(&f, &three)?;
    consistency(tf.len() == 1 && tf[0].poly.monic() == psi.pow(3), || {
        format!("residual of f is not ({psi})^3")
    })?;
    Ok(KeyPolynomial { phi, ell, e, psi })
}

/// `f = Σ a_i φ^i` with the quotients `q_j` of the division chain
/// `q_{j−1} = φ·q_j + a_{j−1}`, `q₀ = f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiExpansion {
    pub phi: IntPoly,
    /// `a_0, …, a_n`
    pub coeffs: Vec<IntPoly>,
    /// `q_1, …, q_n`
    pub quotients: Vec<IntPoly>,
}

impl PhiExpansion {
    /// `q_j` for `j ≥ 0`; `q_0 = f`.
    pub fn quotient(&self, j: usize) -> IntPoly {
        if j == 0 {
            self.reconstruct()
        } else {
            self.quotients.get(j - 1).cloned().unwrap_or_default()
        }
    }

    pub fn reconstruct(&self) -> IntPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| &(&acc * &self.phi) + a)
    }

    /// Checks every link of the division chain and the reconstruction.
    pub fn is_consistent(&self, f: &IntPoly) -> bool {
        let n = self.quotients.len();
        if self.coeffs.len() != n + 1 {
            return false;
        }
        let chain = (1..=n).all(|j| {
            let prev = if j == 1 { f } else { &self.quotients[j - 2] };
            *prev == &(&self.phi * &self.quotients[j - 1]) + &self.coeffs[j - 1]
        });
        let small = self.coeffs.iter().all(|a| a.degree() < self.phi.degree());
        chain && small && (n == 0 || self.quotients.last() == self.coeffs.last()) && self.reconstruct() == *f
    }
}

pub fn phi_expansion(f: &IntPoly, phi: &IntPoly) -> PhiExpansion {
    let mut coeffs = Vec::new();
    let mut quotients = Vec::new();
    let mut q = f.clone();
    while !q.is_zero() {
        let (next, r) = q.div_rem_monic(phi);
        coeffs.push(r);
        if !next.is_zero() {
            quotients.push(next.clone());
        }
        q = next;
    }
    PhiExpansion {
        phi: phi.clone(),
        coeffs,
        quotients,
    }
}

/// Principal part of the lower hull of `(i, V(a_i) + i·V(φ))`.
pub fn v_polygon(exp: &PhiExpansion, v: &SecondOrderValuation) -> NewtonPolygon {
    let vphi = v.value(&exp.phi).expect("φ is nonzero");
    NewtonPolygon::from_points(exp.coeffs.iter().enumerate().filter_map(|(i, a)| {
        v.value(a)
            .map(|va| (i, Rat::from_integer(va + &vphi * Int::from(i))))
    }))
    .principal()
}

/// Points with positive integer coordinates on or below the V-polygon and
/// strictly above the horizontal line through its last vertex. Every side
/// must have degree one.
pub fn n2_count(vpoly: &NewtonPolygon) -> Result<u32> {
    for e in vpoly.edges() {
        if e.degree() != 1 {
            return Err(Error::Unsupported(format!(
                "V-polygon side {:?}-{:?} has degree {}",
                e.start,
                e.end,
                e.degree()
            )));
        }
    }
    let (last_x, last_y) = vpoly.last_vertex().cloned().ok_or_else(|| {
        Error::Unsupported("empty V-polygon".into())
    })?;
    let floor_last = last_y.floor().to_integer();
    let mut n = Int::zero();
    for x in 1..=last_x {
        let y = vpoly.ordinate_at(x).expect("inside").floor().to_integer();
        if y > floor_last {
            n += y - &floor_last;
        }
    }
    Ok(n.to_u32().expect("small count"))
}

/// Everything computed along the second-order path for one A2 field.
#[derive(Debug, Clone)]
pub struct SecondOrder {
    pub key: KeyPolynomial,
    pub first_order: NewtonPolygon,
    pub expansion: PhiExpansion,
    pub v_polygon: NewtonPolygon,
    pub n1: u32,
    pub n2: u32,
}

impl SecondOrder {
    pub fn index(&self) -> u32 {
        self.n1 + self.n2
    }
}

pub fn second_order(field: &NonicField) -> Result<SecondOrder> {
    let key = key_polynomial(field)?;
    let t = field.three_data().expect("checked by key_polynomial");
    let three = Int::from(3);
    let f = defining_poly(field.a());
    let first_order = first_order_polygon(&f, &three)?;
    if first_order.edges().len() != 1 {
        return Err(Error::Unsupported("first-order polygon has several sides".into()));
    }
    let n1 = first_order.lattice_points_below() as u32;
    consistency(n1 == 12 * t.c - 3, || format!("N1 = {n1}, expected {}", 12 * t.c - 3))?;
    let expansion = phi_expansion(&f, &key.phi);
    consistency(expansion.is_consistent(&f), || "φ-expansion does not reconstruct f".into())?;
    let v = key.valuation();
    if (&t.b * &t.b).mod_floor(&Int::from(9)).is_one() {
        let v0 = v.value(&expansion.coeffs[0]).expect("a_0 is nonzero");
        consistency(v0 >= Int::from(9 * t.c + 6), || {
            format!("V(a_0) = {v0} is below 9c + 6")
        })?;
    }
    let v_polygon = v_polygon(&expansion, &v);
    let n2 = n2_count(&v_polygon)?;
    Ok(SecondOrder {
        key,
        first_order,
        expansion,
        v_polygon,
        n1,
        n2,
    })
}

/// `v₃(I) = N₁ + N₂` for case A2.
pub fn gmn_index(field: &NonicField) -> Result<u32> {
    Ok(second_order(field)?.index())
}

/// The 3-integral basis `θ^{9−u} q_j(θ) / 3^{⌊y_u + (Y_j − j·V(φ))/e⌋}`
/// for `9 − e < u ≤ 9` and `j` over the projections of the V-polygon sides.
/// Slots are placed by numerator degree.
pub fn gmn_p_basis(field: &NonicField) -> Result<PIntegralBasis> {
    let so = second_order(field)?;
    let v = so.key.valuation();
    let vphi = Rat::from_integer(v.value(&so.key.phi).expect("nonzero"));
    let e = so.first_order.edges()[0].ramification() as usize;
    let er = Rat::from_integer(Int::from(e));
    let mut js = Vec::new();
    for edge in so.v_polygon.edges() {
        let (_, et) = edge.ell_e();
        let ft = edge.degree();
        let lo = edge.end.0 - et as usize * ft;
        js.extend(lo + 1..=edge.end.0);
    }
    let mut slots: Vec<Option<BasisSlot>> = vec![None; DEGREE];
    for u in DEGREE - e + 1..=DEGREE {
        let yu = so.first_order.ordinate_at(u).expect("inside");
        for &j in &js {
            let yj = so.v_polygon.ordinate_at(j).expect("inside");
            let q = so.expansion.quotient(j);
            let numerator = q.shift_up(DEGREE - u).reduce_pure(DEGREE, field.a());
            let deg = numerator.degree().expect("nonzero");
            let ex = &yu + (yj - &vphi * Rat::from_integer(Int::from(j))) / &er;
            let exponent = ex.floor().to_integer().to_u32().ok_or_else(|| {
                Error::Internal(format!("negative exponent {ex}"))
            })?;
            if deg >= DEGREE || slots[deg].is_some() {
                return Err(Error::Unsupported(format!("degree collision at {deg}")));
            }
            slots[deg] = Some(BasisSlot { numerator, exponent });
        }
    }
    let slots = slots
        .into_iter()
        .enumerate()
        .map(|(d, s)| s.ok_or_else(|| Error::Unsupported(format!("no element of degree {d}"))))
        .collect::<Result<Vec<_>>>()?;
    let basis = PIntegralBasis { p: Int::from(3), slots };
    basis.validate()?;
    Ok(basis)
}

/// `v₃(I)` for case A4 from the 3-polygon of `g = f(x + a)`.
pub fn shifted_analysis(field: &NonicField) -> Result<(u32, NewtonPolygon)> {
    let three = Int::from(3);
    if field.a().is_multiple_of(&three) {
        return Err(Error::WrongCase("shifted analysis needs 3 ∤ a".into()));
    }
    let g = defining_poly(field.a()).taylor_shift(field.a());
    let polygon = first_order_polygon(&g, &three)?;
    let index = ore_index(&g, &three)?;
    Ok((index, polygon))
}

/// Index valuation and p-integral basis along the Newton path.
pub fn newton_local(field: &NonicField, case: &PrimeCase) -> Result<(u32, PIntegralBasis)> {
    let a = field.a();
    let f = defining_poly(a);
    match case.tag {
        CaseTag::A2 => {
            let b = gmn_p_basis(field)?;
            Ok((gmn_index(field)?, b))
        }
        CaseTag::A4i | CaseTag::A4ii | CaseTag::A4iii => {
            let g = f.taylor_shift(a);
            let (v, _) = shifted_analysis(field)?;
            Ok((v, ore_p_basis(&g, &case.p, a, a)?))
        }
        CaseTag::A1 | CaseTag::A3 => {
            let v = ore_index(&f, &case.p)?;
            Ok((v, ore_p_basis(&f, &case.p, &Int::zero(), a)?))
        }
    }
}

/// Newton-path counterpart of [`crate::closed_form::local_data`].
pub fn newton_local_data(field: &NonicField) -> Result<Vec<(PrimeCase, u32, PIntegralBasis)>> {
    field
        .relevant_primes()
        .iter()
        .map(|p| {
            let case = classify_prime(field, p);
            let (v, b) = newton_local(field, &case)?;
            consistency(b.exponent_sum() == v, || {
                format!("p = {p}: Newton basis exponent sum {} differs from {v}", b.exponent_sum())
            })?;
            Ok((case, v, b))
        })
        .collect()
}
