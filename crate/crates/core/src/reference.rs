//! Published values that the computation does not reproduce, and the notes
//! attached to reports of the affected fields.
//!
//! Two sets of published numbers are known to disagree with the certified
//! results:
//!
//! * the worked example for `x⁹ − 108` states `v₂(I) = 5`, a 2-integral
//!   basis containing `θ⁴/2`, and `d_K = 2⁶·3¹⁸`. The index formula gives
//!   `v₂(I) = 4`; `θ⁴/2` is not integral since `(θ⁴)⁹ = 2⁸·3¹²`; and
//!   `d_K = 2⁸·3¹⁸`.
//! * for `v₃(a) = 6` with `b ≢ ±1 (mod 9)`, the published table gives
//!   `v₃(I) = 25` for `k ∈ {2, 7}` and `24` for `k ∈ {4, 5}`. The certified
//!   values are the other way round.

use crate::arith::Int;
use crate::field::NonicField;

/// Published `v₂(I)` for `x⁹ − 108`.
pub const EXAMPLE_108_V2: u32 = 5;
/// Published discriminant for `x⁹ − 108`.
pub const EXAMPLE_108_DISC: &str = "2^6*3^18";

/// Published `v₃(I)` for `a = 3⁶·b`, `k = b mod 9 ∈ {2, 4, 5, 7}`.
pub fn published_c2_valuation(k: u32) -> Option<u32> {
    match k {
        2 | 7 => Some(25),
        4 | 5 => Some(24),
        _ => None,
    }
}

/// Notes for `field`. `certified` says whether the maximal-order
/// computation has confirmed the computed values.
pub fn discrepancy_notes(field: &NonicField, certified: bool) -> Vec<String> {
    let suffix = if certified {
        " (certified by the maximal-order computation)"
    } else {
        ""
    };
    let mut notes = Vec::new();
    if field.a() == &Int::from(108) {
        notes.push(format!(
            "published worked example for x^9 - 108 gives v_2(I) = {EXAMPLE_108_V2}, a 2-integral \
             basis containing theta^4/2 and d_K = {EXAMPLE_108_DISC}; computed v_2(I) = 4 and \
             d_K = 2^8*3^18{suffix}; theta^4/2 is not an algebraic integer since (theta^4)^9 = 2^8*3^12"
        ));
    }
    if let Some(t) = field.three_data() {
        if t.c == 2 {
            if let Some(published) = published_c2_valuation(t.k) {
                let computed = crate::closed_form::index_valuation(
                    field,
                    &crate::field::classify_prime(field, &Int::from(3)),
                );
                notes.push(format!(
                    "published table for v_3(a) = 6 gives v_3(I) = {published} when b = {k} mod 9; \
                     computed v_3(I) = {computed}{suffix}",
                    k = t.k
                ));
            }
        }
    }
    notes
}
