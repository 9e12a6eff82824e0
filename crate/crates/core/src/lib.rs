//! Integral bases and discriminants of pure nonic fields `Q(θ)`, `θ⁹ = a`.
//!
//! Three independent routes to the ring of integers are provided:
//! closed formulas per prime ([`closed_form`]), Newton polygons of first and
//! second order ([`newton`]), and a round-2 maximal-order computation
//! ([`oracle`]). Local bases are combined with [`glue`] and compared in a
//! canonical Hermite form.

pub mod arith;
pub mod closed_form;
pub mod error;
pub mod field;
pub mod glue;
pub mod linalg;
pub mod newton;
pub mod oracle;
pub mod poly;
pub mod polygon;
pub mod reference;
pub mod report;
pub mod theta;

pub use arith::{factorize, FactorConfig, Factorization, Int, Rat};
pub use closed_form::{index_valuation, local_data, p_basis, BasisSlot, PIntegralBasis};
pub use error::{Error, Result};
pub use field::{classify_prime, CaseTag, NonicField, PrimeCase};
pub use glue::{canonicalize, discriminant, glue, total_index, GlobalBasis};
pub use oracle::{is_algebraic_integer, maximal_order, OrderModule};
pub use theta::ThetaPoly;
