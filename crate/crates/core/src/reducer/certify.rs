use std::time::{Duration, Instant};

use rug::Float;
use serde::{Serialize, Serializer};

use super::families::Family;
use super::symbolic::SymbolicExpr;
use crate::error::Result;
use crate::numeric::real::Real;
use crate::series::{double_capital_t, double_t};

/// A reduction together with its numeric check against the series oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionRecord {
    pub family: Family,
    pub j: u32,
    pub m: u32,
    pub label: String,
    pub weight: u32,
    pub expr: SymbolicExpr,
    pub precision: u32,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub value: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub oracle: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub absolute_gap: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub tolerance: Real,
    pub passed: bool,
    pub terms_used: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_ms")]
    pub elapsed: Duration,
}

fn serialize_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl ReductionRecord {
    pub fn case_id(&self) -> String {
        format!("{}[j={} m={}]", self.family, self.j, self.m)
    }
}

/// The double value a family reduces, summed directly as a series.
pub fn oracle_value(family: Family, j: u32, m: u32, prec: u32) -> Result<(Real, u64)> {
    family.check(j, m)?;
    let (s1, s2) = family.arguments(j, m);
    let bar = family.is_alternating();
    let r = if family.is_capital() {
        double_capital_t(s1, s2, bar, prec)?
    } else {
        double_t(s1, s2, bar, prec)?
    };
    Ok((r.value, r.terms_used))
}

/// Builds the reduction of `family` at `(j, m)` and compares its value
/// with the oracle.
pub fn certify(family: Family, j: u32, m: u32, prec: u32, tolerance: &Real) -> Result<ReductionRecord> {
    let start = Instant::now();
    let expr = family.reduce(j, m)?;
    let value = expr.eval(prec)?;
    let (oracle, terms_used) = oracle_value(family, j, m, prec)?;
    let absolute_gap = Float::with_val(prec, &value - &oracle).abs();
    let passed = absolute_gap <= *tolerance;
    let (s1, s2) = family.arguments(j, m);
    Ok(ReductionRecord {
        family,
        j,
        m,
        label: family.value_label(j, m),
        weight: s1 + s2,
        expr,
        precision: prec,
        value,
        oracle,
        absolute_gap,
        tolerance: tolerance.clone(),
        passed,
        terms_used,
        elapsed: start.elapsed(),
    })
}
