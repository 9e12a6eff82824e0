//! Reports for the command-line front end: analysis of one field, one
//! local basis, or a range of radicands. All numbers are serialized as
//! decimal strings; rationals as `n/d`.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Factorization, Int, Rat};
use crate::closed_form::{index_valuation, local_data, p_basis, PIntegralBasis};
use crate::error::{Error, Result};
use crate::field::{classify_prime, require_prime, CaseTag, NonicField};
use crate::glue::{discriminant, glue, total_index, GlobalBasis};
use crate::newton::newton_local_data;
use crate::oracle::{is_algebraic_integer, maximal_order, module_index, p_maximal, trace_discriminant, OrderModule};
use crate::reference::discrepancy_notes;
use crate::theta::ThetaPoly;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: String,
    pub exponent: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub sign: String,
    pub factors: Vec<PrimePower>,
    pub text: String,
}

impl From<&Factorization> for FactorizationRecord {
    fn from(f: &Factorization) -> Self {
        FactorizationRecord {
            sign: f.sign().to_string(),
            factors: f
                .factors()
                .iter()
                .map(|(p, e)| PrimePower {
                    prime: p.to_string(),
                    exponent: e.to_string(),
                })
                .collect(),
            text: f.to_string(),
        }
    }
}

impl FactorizationRecord {
    pub fn to_factorization(&self) -> Result<Factorization> {
        let sign: i8 = parse(&self.sign)?;
        let parts = self
            .factors
            .iter()
            .map(|pp| Ok((parse::<Int>(&pp.prime)?, parse::<u32>(&pp.exponent)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization::from_parts(sign, parts))
    }
}

fn parse<T: FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("cannot parse {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub raw: String,
    pub normalized: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotRecord {
    /// Integer coefficients of the numerator, constant term first.
    pub numerator: Vec<String>,
    /// Denominator is `p^exponent`.
    pub exponent: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub prime: String,
    pub case: CaseTag,
    pub v_p: String,
    pub slots: Vec<SlotRecord>,
}

impl PrimeRecord {
    fn new(p: &Int, case: CaseTag, v: u32, basis: &PIntegralBasis) -> Self {
        PrimeRecord {
            prime: p.to_string(),
            case,
            v_p: v.to_string(),
            slots: basis
                .slots
                .iter()
                .map(|s| SlotRecord {
                    numerator: s.numerator.coeffs().iter().map(|c| c.to_string()).collect(),
                    exponent: s.exponent.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub denominators: Vec<String>,
    /// Row `j` holds the power-basis coordinates of element `j`.
    pub matrix: Vec<Vec<String>>,
}

impl From<&GlobalBasis> for BasisRecord {
    fn from(b: &GlobalBasis) -> Self {
        BasisRecord {
            denominators: b.denominators().iter().map(|d| d.to_string()).collect(),
            matrix: b
                .matrix()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

impl BasisRecord {
    pub fn to_basis(&self) -> Result<GlobalBasis> {
        let elements = self
            .matrix
            .iter()
            .map(|row| {
                let coords = row.iter().map(|s| parse::<Rat>(s)).collect::<Result<Vec<_>>>()?;
                let arr: [Rat; 9] = coords
                    .try_into()
                    .map_err(|_| Error::InvalidInput("basis row of wrong length".into()))?;
                Ok(ThetaPoly::new(arr))
            })
            .collect::<Result<Vec<_>>>()?;
        crate::glue::canonicalize(&elements)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeValuation {
    pub prime: String,
    pub v_p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonRecord {
    pub primes: Vec<PrimeValuation>,
    pub same_basis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: InputRecord,
    pub factorization: FactorizationRecord,
    pub primes: Vec<PrimeRecord>,
    pub basis: BasisRecord,
    pub index: FactorizationRecord,
    pub discriminant: FactorizationRecord,
    pub newton: Option<NewtonRecord>,
    pub verification: Vec<CheckRecord>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn all_checks_passed(&self) -> bool {
        self.verification.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub verify: bool,
    pub newton: bool,
}

/// Oracle checks of a glued basis.
pub fn verify_basis(field: &NonicField, basis: &GlobalBasis, index: &Factorization, disc: &Factorization) -> Result<Vec<CheckRecord>> {
    let a = field.a();
    let m = OrderModule::from_basis(basis)?;
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(CheckRecord { name, passed });
    push(
        "elements are algebraic integers".into(),
        basis.elements().iter().all(|x| is_algebraic_integer(x, a)),
    );
    push("contains Z[theta]".into(), m.contains_power_basis());
    let ring = m.is_ring(a);
    push("closed under multiplication".into(), ring);
    push(
        "index over Z[theta] matches".into(),
        module_index(&m).map_or(false, |i| i == index.value()),
    );
    for p in field.relevant_primes() {
        let ok = ring && p_maximal(&m, &p, a).unwrap_or(false);
        push(format!("{p}-maximal"), ok);
    }
    let max = maximal_order(field)?;
    push("equals round-2 maximal order".into(), max == m);
    push(
        "trace-form discriminant matches".into(),
        trace_discriminant(&m, a) == Rat::from_integer(disc.value()),
    );
    Ok(checks)
}

pub fn cmd_analyze(a: &Int, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let field = NonicField::new(a.clone())?;
    let local = local_data(&field)?;
    let bases: Vec<PIntegralBasis> = local.iter().map(|(_, _, b)| b.clone()).collect();
    let basis = glue(&bases, field.a())?;
    let index = total_index(&field);
    if basis.index() != index.value() {
        return Err(Error::Internal(format!(
            "glued basis has index {}, formulas give {index}",
            basis.index()
        )));
    }
    let disc = discriminant(&field)?;

    let newton = if opts.newton {
        let nl = newton_local_data(&field)?;
        let nbases: Vec<PIntegralBasis> = nl.iter().map(|(_, _, b)| b.clone()).collect();
        let nbasis = glue(&nbases, field.a())?;
        let same_vals = nl.iter().zip(&local).all(|(x, y)| x.1 == y.1);
        if !same_vals || nbasis != basis {
            let show = |l: &[(crate::field::PrimeCase, u32, PIntegralBasis)]| {
                l.iter().map(|(c, v, _)| format!("v_{}={v}", c.p)).collect::<Vec<_>>().join(" ")
            };
            return Err(Error::Disagreement(format!(
                "closed form: {} with basis\n{basis}\nnewton: {} with basis\n{nbasis}",
                show(&local),
                show(&nl)
            )));
        }
        Some(NewtonRecord {
            primes: nl
                .iter()
                .map(|(c, v, _)| PrimeValuation {
                    prime: c.p.to_string(),
                    v_p: v.to_string(),
                })
                .collect(),
            same_basis: true,
        })
    } else {
        None
    };

    let verification = if opts.verify {
        verify_basis(&field, &basis, &index, &disc)?
    } else {
        Vec::new()
    };
    let certified = opts.verify && verification.iter().all(|c| c.passed);
    let mut notes = Vec::new();
    if field.was_normalized() {
        notes.push(format!(
            "input {} reduced to {} by removing ninth powers",
            field.raw(),
            field.a()
        ));
    }
    notes.extend(discrepancy_notes(&field, certified));

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: InputRecord {
            raw: field.raw().to_string(),
            normalized: field.a().to_string(),
        },
        factorization: field.factorization().into(),
        primes: local
            .iter()
            .map(|(c, v, b)| PrimeRecord::new(&c.p, c.tag, *v, b))
            .collect(),
        basis: (&basis).into(),
        index: (&index).into(),
        discriminant: (&disc).into(),
        newton,
        verification,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PBasisReport {
    pub schema_version: u32,
    pub input: InputRecord,
    pub prime: PrimeRecord,
}

pub fn cmd_pbasis(a: &Int, p: &Int) -> Result<PBasisReport> {
    let field = NonicField::new(a.clone())?;
    require_prime(p)?;
    let case = classify_prime(&field, p);
    let v = index_valuation(&field, &case);
    let basis = p_basis(&field, &case)?;
    Ok(PBasisReport {
        schema_version: SCHEMA_VERSION,
        input: InputRecord {
            raw: field.raw().to_string(),
            normalized: field.a().to_string(),
        },
        prime: PrimeRecord::new(p, case.tag, v, &basis),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub verify: bool,
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { verify: false, jobs: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub a: String,
    pub ok: bool,
    pub index: Option<String>,
    pub discriminant: Option<String>,
    pub denominators: Option<Vec<String>>,
    pub power_basis: Option<bool>,
    pub verified: Option<bool>,
    pub notes: Vec<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounters {
    pub processed: String,
    pub verified: String,
    pub discrepancies: String,
    pub errors: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub lo: String,
    pub hi: String,
    pub entries: Vec<SweepEntry>,
    pub counters: SweepCounters,
}

/// Whether `a` is a valid radicand as given: `|a| > 1`, 9th-power-free and
/// not a cube. Factorization failures are passed through.
fn sweep_candidate(a: &Int) -> Result<bool> {
    match NonicField::new(a.clone()) {
        Ok(f) => Ok(!f.was_normalized()),
        Err(Error::Reducible(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn sweep_one(a: &Int, verify: bool) -> SweepEntry {
    let opts = AnalyzeOptions { verify, newton: false };
    match cmd_analyze(a, &opts) {
        Ok(r) => {
            let basis = r.basis.to_basis().ok();
            SweepEntry {
                a: a.to_string(),
                ok: true,
                index: Some(r.index.text.clone()),
                discriminant: Some(r.discriminant.text.clone()),
                denominators: Some(r.basis.denominators.clone()),
                power_basis: Some(basis.is_some_and(|b| b.is_power_basis())),
                verified: verify.then(|| r.all_checks_passed()),
                notes: r.notes,
                error: None,
            }
        }
        Err(e) => SweepEntry {
            a: a.to_string(),
            ok: false,
            index: None,
            discriminant: None,
            denominators: None,
            power_basis: None,
            verified: None,
            notes: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

pub fn cmd_sweep(lo: &Int, hi: &Int, opts: &SweepOptions) -> Result<SweepReport> {
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range {lo}..{hi}")));
    }
    let mut candidates = Vec::new();
    let mut a = lo.clone();
    while &a <= hi {
        candidates.push(a.clone());
        a += 1;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let entries: Vec<SweepEntry> = pool.install(|| {
        candidates
            .par_iter()
            .filter_map(|a| match sweep_candidate(a) {
                Ok(true) => Some(sweep_one(a, opts.verify)),
                Ok(false) => None,
                Err(e) => Some(SweepEntry {
                    a: a.to_string(),
                    ok: false,
                    index: None,
                    discriminant: None,
                    denominators: None,
                    power_basis: None,
                    verified: None,
                    notes: Vec::new(),
                    error: Some(e.to_string()),
                }),
            })
            .collect()
    });
    let count = |f: &dyn Fn(&SweepEntry) -> bool| entries.iter().filter(|e| f(e)).count().to_string();
    let counters = SweepCounters {
        processed: entries.len().to_string(),
        verified: count(&|e| e.verified == Some(true)),
        discrepancies: count(&|e| e.ok && e.notes.iter().any(|n| n.starts_with("published"))),
        errors: count(&|e| !e.ok),
    };
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        lo: lo.to_string(),
        hi: hi.to_string(),
        entries,
        counters,
    })
}

fn slot_text(p: &str, s: &SlotRecord) -> String {
    let poly = crate::poly::IntPoly::new(s.numerator.iter().map(|c| c.parse().expect("integer")).collect());
    let num = poly.to_string().replace('x', "θ");
    if s.exponent == "0" {
        num
    } else {
        format!("({num})/{p}^{}", s.exponent)
    }
}

fn prime_text(out: &mut String, r: &PrimeRecord) {
    let _ = writeln!(out, "p = {}: case {}, v_p(I) = {}", r.prime, r.case, r.v_p);
    let slots: Vec<String> = r.slots.iter().map(|s| slot_text(&r.prime, s)).collect();
    let _ = writeln!(out, "  basis: {}", slots.join(", "));
}

fn poly_text(a: &str) -> String {
    match a.strip_prefix('-') {
        Some(m) => format!("x^9 + {m}"),
        None => format!("x^9 - {a}"),
    }
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", poly_text(&r.input.normalized));
    if r.input.raw != r.input.normalized {
        let _ = writeln!(out, "input: {}", r.input.raw);
    }
    let _ = writeln!(out, "a = {}", r.factorization.text);
    for p in &r.primes {
        prime_text(&mut out, p);
    }
    let _ = writeln!(out, "denominators: {}", r.basis.denominators.join(" "));
    let _ = writeln!(out, "integral basis (rows in 1, θ, ..., θ^8):");
    for (j, row) in r.basis.matrix.iter().enumerate() {
        let _ = writeln!(out, "  [{j}] {}", row.join(" "));
    }
    let _ = writeln!(out, "index I = {}", r.index.text);
    let _ = writeln!(out, "d_K = {}", r.discriminant.text);
    if let Some(n) = &r.newton {
        let vals: Vec<String> = n.primes.iter().map(|p| format!("v_{} = {}", p.prime, p.v_p)).collect();
        let _ = writeln!(out, "newton path: {} (same basis: {})", vals.join(", "), n.same_basis);
    }
    for c in &r.verification {
        let _ = writeln!(out, "check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn pbasis_text(r: &PBasisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", poly_text(&r.input.normalized));
    prime_text(&mut out, &r.prime);
    out
}

pub fn sweep_entry_text(e: &SweepEntry) -> String {
    if !e.ok {
        return format!("a = {}: error: {}", e.a, e.error.as_deref().unwrap_or("unknown"));
    }
    let mut s = format!(
        "a = {}: I = {}, d_K = {}",
        e.a,
        e.index.as_deref().unwrap_or("?"),
        e.discriminant.as_deref().unwrap_or("?")
    );
    if e.power_basis == Some(true) {
        s.push_str(", power basis");
    } else if let Some(d) = &e.denominators {
        let _ = write!(s, ", denominators {}", d.join(" "));
    }
    match e.verified {
        Some(true) => s.push_str(", verified"),
        Some(false) => s.push_str(", VERIFICATION FAILED"),
        None => {}
    }
    for n in &e.notes {
        let _ = write!(s, "\n  note: {n}");
    }
    s
}

pub fn sweep_text(r: &SweepReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let _ = writeln!(out, "{}", sweep_entry_text(e));
    }
    let c = &r.counters;
    let _ = writeln!(
        out,
        "processed {}, verified {}, discrepancies {}, errors {}",
        c.processed, c.verified, c.discrepancies, c.errors
    );
    out
}
