#![allow(dead_code)]

use std::io::Write;

use nonic::{Error, NonicField, PIntegralBasis};

/// Every 9th-power-free non-cube `a` with `2 ≤ |a| ≤ bound`.
pub fn sweep_fields(bound: i64) -> Vec<NonicField> {
    (-bound..=bound)
        .filter(|a| a.abs() >= 2)
        .filter_map(|a| match NonicField::new(a) {
            Ok(f) if !f.was_normalized() => Some(f),
            Ok(_) | Err(Error::Reducible(_)) => None,
            Err(e) => panic!("a = {a}: {e}"),
        })
        .collect()
}

pub fn field(a: i64) -> NonicField {
    NonicField::new(a).unwrap()
}

pub fn closed_bases(f: &NonicField) -> Vec<PIntegralBasis> {
    nonic::local_data(f).unwrap().into_iter().map(|(_, _, b)| b).collect()
}

/// Writes the verdict line past the test harness's output capture.
pub fn verdict(n: u32, name: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    let line = if detail.is_empty() {
        format!("criterion {n} {tag}: {name}\n")
    } else {
        format!("criterion {n} {tag}: {name} ({detail})\n")
    };
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}
