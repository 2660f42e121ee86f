use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rug::{Float, Rational};
use serde::{Serialize, Serializer};

use super::rational::PartialFractionRational;
use crate::error::{Error, Result};
use crate::numeric::real::Real;

/// The identity families that can be checked. The string ids (`thm3_1`,
/// `lemma2_4`, ...) are the names used by suite configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Tan-kernel pair sum with two shifts `a`, `b`.
    TanPair,
    /// Tan-kernel pair at `b = −a`.
    TanSymmetric,
    /// Tan-kernel pair at `b = 1 − a`.
    TanReflected,
    /// Secant-kernel (alternating) pair sum.
    SecPair,
    /// Secant-kernel pair at `b = −a`.
    SecSymmetric,
    /// Secant-kernel pair at `b = 1 − a`.
    SecReflected,
    /// Residue-sum-zero for `π tan(πz) Ψ^(p−1)(1/2 − z)/(p−1)! · r(z)`.
    TanRational,
    /// Residue-sum-zero for `π/cos(πz) Ψ^(p−1)(1/2 − z)/(p−1)! · r(z)`.
    SecRational,
    /// Laurent and Taylor coefficients of `Ψ^(p−1)(1/2 − z)/(p−1)!`.
    PsiExpansions,
    /// Expansions and derivatives of `π tan(πz)` and `π/cos(πz)`.
    TrigExpansions,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::TanPair,
        IdentityId::TanSymmetric,
        IdentityId::TanReflected,
        IdentityId::SecPair,
        IdentityId::SecSymmetric,
        IdentityId::SecReflected,
        IdentityId::TanRational,
        IdentityId::SecRational,
        IdentityId::PsiExpansions,
        IdentityId::TrigExpansions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            IdentityId::TanPair => "thm3_1",
            IdentityId::TanSymmetric => "cor3_2",
            IdentityId::TanReflected => "cor3_3",
            IdentityId::SecPair => "thm3_4",
            IdentityId::SecSymmetric => "cor3_5",
            IdentityId::SecReflected => "cor3_6",
            IdentityId::TanRational => "thm3_6",
            IdentityId::SecRational => "thm3_7",
            IdentityId::PsiExpansions => "lemma2_3",
            IdentityId::TrigExpansions => "lemma2_4",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|i| i.id() == key)
            .ok_or_else(|| Error::Config(format!("unknown identity family `{s}`")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Parameters of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub enum CaseParams {
    Pair { p: u32, a: Rational, b: Rational },
    Single { m: u32, a: Rational },
    Rational { p: u32, r: PartialFractionRational },
    Order { order: usize },
}

impl fmt::Display for CaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseParams::Pair { p, a, b } => write!(f, "p={p} a={a} b={b}"),
            CaseParams::Single { m, a } => write!(f, "m={m} a={a}"),
            CaseParams::Rational { p, r } => write!(f, "p={p} r={r}"),
            CaseParams::Order { order } => write!(f, "order={order}"),
        }
    }
}

impl Serialize for CaseParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCase {
    pub identity: IdentityId,
    pub params: CaseParams,
    pub precision: u32,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub tolerance: Real,
}

impl IdentityCase {
    /// Stable key used to order reports.
    pub fn case_id(&self) -> String {
        format!("{}[{}]", self.identity, self.params)
    }
}

/// Both sides of one identity and their distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub case: IdentityCase,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub lhs: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub rhs: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub absolute_gap: Real,
    pub passed: bool,
    pub terms_used: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_ms")]
    pub elapsed: Duration,
}

fn serialize_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerificationReport {
    pub(crate) fn new(case: IdentityCase, lhs: Float, rhs: Float, terms_used: u64, elapsed: Duration) -> Self {
        let prec = lhs.prec().max(rhs.prec());
        let absolute_gap = Float::with_val(prec, &lhs - &rhs).abs();
        let passed = absolute_gap <= case.tolerance;
        Self {
            case,
            lhs,
            rhs,
            absolute_gap,
            passed,
            terms_used,
            elapsed,
        }
    }
}
