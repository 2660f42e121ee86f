//! Closed forms for the two-parameter sums
//!
//! ```text
//!     Σ σ^n h_n^(p) / ((n + a − 1/2)(n + b − 1/2))
//! ```
//!
//! paired with their reflections `a → −a`, `b → −b`, and the one-parameter
//! specializations `b = −a` and `b = 1 − a`. The left-hand sides come from
//! the series engine, the right-hand sides from Hurwitz zeta values,
//! t̃-constants and a trigonometric kernel.

use std::time::Instant;

use rug::{Float, Rational};

use super::common::{hypothesis, in_unit_box, not_half_odd, not_nonpositive_integer, sign, Values};
use super::report::{CaseParams, IdentityCase, IdentityId, VerificationReport};
use crate::error::Result;
use crate::numeric::real::{check_precision, Real};
use crate::series::{euler_t_sum, HarmonicOffset, SeriesResult, Sign, SumSpec};
use crate::special::convention::ZetaConvention;
use crate::special::kernel::{kernel_value, KernelKind};

fn r(n: i32, d: i32) -> Rational {
    Rational::from((n, d))
}

fn sum(p: Vec<u32>, q: Vec<u32>, a: Vec<Rational>, sigma: Sign, offset: HarmonicOffset, wp: u32) -> Result<SeriesResult> {
    euler_t_sum(&SumSpec::new(p, q, a, sigma, offset), wp)
}

pub(crate) fn check_pair(p: u32, a: &Rational, b: &Rational) -> Result<()> {
    if p == 0 {
        return Err(hypothesis("p must be ≥ 1"));
    }
    if a == b {
        return Err(hypothesis(format!("a = b = {a}")));
    }
    for (name, x) in [("a", a), ("b", b)] {
        not_nonpositive_integer(name, x)?;
        not_half_odd(name, x)?;
        in_unit_box(name, x)?;
    }
    Ok(())
}

/// `0 < |a| < 1/2` for the `b = −a` cases.
pub(crate) fn check_symmetric(a: &Rational) -> Result<()> {
    if *a == 0 || a.clone().abs() >= r(1, 2) {
        return Err(hypothesis(format!("need 0 < |a| < 1/2, got a = {a}")));
    }
    Ok(())
}

/// `0 < a < 1`, `a ≠ 1/2` for the `b = 1 − a` cases.
pub(crate) fn check_reflected(a: &Rational) -> Result<()> {
    if *a <= 0 || *a >= 1 || *a == r(1, 2) {
        return Err(hypothesis(format!("need 0 < a < 1 and a ≠ 1/2, got a = {a}")));
    }
    Ok(())
}

fn case(identity: IdentityId, params: CaseParams, prec: u32, tolerance: &Real) -> IdentityCase {
    IdentityCase {
        identity,
        params,
        precision: prec,
        tolerance: tolerance.clone(),
    }
}

fn finish(case: IdentityCase, lhs: Float, rhs: Float, terms: u64, start: Instant) -> VerificationReport {
    let prec = case.precision;
    VerificationReport::new(
        case,
        Float::with_val(prec, lhs),
        Float::with_val(prec, rhs),
        terms,
        start.elapsed(),
    )
}

/// `Σ h_n^(p)/((n+a−½)(n+b−½)) − (−1)^p Σ h_{n−1}^(p)/((n−a−½)(n−b−½))`
/// against its tan-kernel closed form.
pub fn verify_tan_pair(p: u32, a: &Rational, b: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    verify_tan_pair_with(p, a, b, prec, tolerance, ZetaConvention::standard())
}

/// As [`verify_tan_pair`], with an explicit value for `ζ(1; a)`.
pub fn verify_tan_pair_with(
    p: u32,
    a: &Rational,
    b: &Rational,
    prec: u32,
    tolerance: &Real,
    conv: ZetaConvention,
) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_pair(p, a, b)?;
    let start = Instant::now();
    let v = Values::new(prec, conv);
    let wp = v.wp;
    let (na, nb) = (Rational::from(-a), Rational::from(-b));
    let s1 = sum(vec![p], vec![1, 1], vec![a.clone(), b.clone()], Sign::Plus, HarmonicOffset::Current, wp)?;
    let s2 = sum(vec![p], vec![1, 1], vec![na, nb], Sign::Plus, HarmonicOffset::Previous, wp)?;
    let lhs = Float::with_val(wp, &s1.value - Float::with_val(wp, &s2.value * sign(p)));

    let inv = Float::with_val(wp, v.rat(&Rational::from(b - a)).recip_ref());
    let mut inner = Float::new(wp);
    for k in 1..=p / 2 {
        let s = p - 2 * k + 1;
        inner += v.tt(2 * k)? * (v.zeta(s, a)? - v.zeta(s, b)?);
    }
    let tt = v.tt(p)?;
    let tan_a = kernel_value(KernelKind::PiTan, &v.rat(a), wp)?;
    let tan_b = kernel_value(KernelKind::PiTan, &v.rat(b), wp)?;
    let kernel_part = tan_b * (v.zeta(p, b)? - &tt) - tan_a * (v.zeta(p, a)? - &tt);
    let rhs = (Float::with_val(wp, inner << 1u32) + kernel_part) * inv * sign(p);

    let c = case(IdentityId::TanPair, CaseParams::Pair { p, a: a.clone(), b: b.clone() }, prec, tolerance);
    Ok(finish(c, lhs, rhs, s1.terms_used + s2.terms_used, start))
}

/// `Σ (−1)^n h_n^(p)/((n+a−½)(n+b−½)) + (−1)^p Σ (−1)^n h_{n−1}^(p)/((n−a−½)(n−b−½))`
/// against its secant-kernel closed form.
pub fn verify_sec_pair(p: u32, a: &Rational, b: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_pair(p, a, b)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let (na, nb) = (Rational::from(-a), Rational::from(-b));
    let s1 = sum(vec![p], vec![1, 1], vec![a.clone(), b.clone()], Sign::Minus, HarmonicOffset::Current, wp)?;
    let s2 = sum(vec![p], vec![1, 1], vec![na, nb], Sign::Minus, HarmonicOffset::Previous, wp)?;
    let lhs = Float::with_val(wp, &s1.value + Float::with_val(wp, &s2.value * sign(p)));

    let inv = Float::with_val(wp, v.rat(&Rational::from(b - a)).recip_ref());
    let mut inner = Float::new(wp);
    for k in 0..=(p - 1) / 2 {
        let s = p - 2 * k;
        inner += v.tt_bar(2 * k + 1)? * (v.alt_zeta(s, b)? - v.alt_zeta(s, a)?);
    }
    let tt = v.tt(p)?;
    let sec_a = kernel_value(KernelKind::PiOverCos, &v.rat(a), wp)?;
    let sec_b = kernel_value(KernelKind::PiOverCos, &v.rat(b), wp)?;
    let kernel_part = sec_b * (v.zeta(p, b)? - &tt) - sec_a * (v.zeta(p, a)? - &tt);
    let rhs = (Float::with_val(wp, inner << 1u32) + kernel_part) * inv * sign(p);

    let c = case(IdentityId::SecPair, CaseParams::Pair { p, a: a.clone(), b: b.clone() }, prec, tolerance);
    Ok(finish(c, lhs, rhs, s1.terms_used + s2.terms_used, start))
}

/// `Σ h_n^(2m+1)/((n−½)² − a²)`.
pub fn verify_tan_symmetric(m: u32, a: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_symmetric(a)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let p = 2 * m + 1;
    let na = Rational::from(-a);
    let lhs = sum(vec![p], vec![1, 1], vec![a.clone(), na.clone()], Sign::Plus, HarmonicOffset::Current, wp)?;
    // Σ 1/((n−½)^(2m+1) ((n−½)² − a²))
    let plain = sum(vec![], vec![p, 1, 1], vec![r(0, 1), a.clone(), na.clone()], Sign::Plus, HarmonicOffset::Current, wp)?;

    let fa = v.rat(a);
    let mut inner = Float::new(wp);
    for k in 1..=m {
        let s = 2 * m - 2 * k + 2;
        inner += v.tt(2 * k)? * (v.zeta(s, a)? - v.zeta(s, &na)?);
    }
    let inner = inner / Float::with_val(wp, &fa * 2u32);
    let tan_a = kernel_value(KernelKind::PiTan, &fa, wp)?;
    let bracket = Float::with_val(wp, v.tt(p)? << 1u32) - v.zeta(p, a)? - v.zeta(p, &na)?;
    let kernel_part = tan_a * bracket / Float::with_val(wp, &fa * 4u32);
    let rhs = Float::with_val(wp, &plain.value >> 1u32) + inner + kernel_part;

    let c = case(IdentityId::TanSymmetric, CaseParams::Single { m, a: a.clone() }, prec, tolerance);
    Ok(finish(c, lhs.value, rhs, lhs.terms_used + plain.terms_used, start))
}

/// `Σ h_n^(2m+1)/(n² − (a−½)²)`.
pub fn verify_tan_reflected(m: u32, a: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_reflected(a)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let p = 2 * m + 1;
    let b = Rational::from(1 - a.clone());
    let lhs = sum(vec![p], vec![1, 1], vec![a.clone(), b.clone()], Sign::Plus, HarmonicOffset::Current, wp)?;

    let fa = v.rat(a);
    let denom = Float::with_val(wp, Float::with_val(wp, &fa * 2u32) - 1u32);
    let mut inner = Float::new(wp);
    for k in 1..=m {
        let s = 2 * m - 2 * k + 2;
        inner += v.tt(2 * k)? * (v.zeta(s, a)? - v.zeta(s, &b)?);
    }
    let tan_a = kernel_value(KernelKind::PiTan, &fa, wp)?;
    let bracket = Float::with_val(wp, v.tt(p)? << 1u32) - v.zeta(p, a)? - v.zeta(p, &b)?;
    let kernel_part = Float::with_val(wp, (tan_a * bracket) >> 1u32);
    let rhs = (inner + kernel_part) / denom;

    let c = case(IdentityId::TanReflected, CaseParams::Single { m, a: a.clone() }, prec, tolerance);
    Ok(finish(c, lhs.value, rhs, lhs.terms_used, start))
}

/// `Σ (−1)^n h_n^(2m)/((n−½)² − a²)` for `m ≥ 1`.
pub fn verify_sec_symmetric(m: u32, a: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    if m == 0 {
        return Err(hypothesis("m must be ≥ 1"));
    }
    check_symmetric(a)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let p = 2 * m;
    let na = Rational::from(-a);
    let lhs = sum(vec![p], vec![1, 1], vec![a.clone(), na.clone()], Sign::Minus, HarmonicOffset::Current, wp)?;
    // Σ (−1)^n/((n−½)^(2m) ((n−½)² − a²))
    let plain = sum(vec![], vec![p, 1, 1], vec![r(0, 1), a.clone(), na.clone()], Sign::Minus, HarmonicOffset::Current, wp)?;

    let fa = v.rat(a);
    let mut inner = Float::new(wp);
    for k in 0..m {
        let s = 2 * m - 2 * k;
        inner += v.tt_bar(2 * k + 1)? * (v.alt_zeta(s, a)? - v.alt_zeta(s, &na)?);
    }
    let inner = inner / Float::with_val(wp, &fa * 2u32);
    let sec_a = kernel_value(KernelKind::PiOverCos, &fa, wp)?;
    let kernel_part = sec_a * (v.zeta(p, a)? - v.zeta(p, &na)?) / Float::with_val(wp, &fa * 4u32);
    let rhs = Float::with_val(wp, &plain.value >> 1u32) + inner + kernel_part;

    let c = case(IdentityId::SecSymmetric, CaseParams::Single { m, a: a.clone() }, prec, tolerance);
    Ok(finish(c, lhs.value, rhs, lhs.terms_used + plain.terms_used, start))
}

/// `Σ (−1)^n h_n^(2m+1)/(n² − (a−½)²)`.
pub fn verify_sec_reflected(m: u32, a: &Rational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_reflected(a)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let p = 2 * m + 1;
    let b = Rational::from(1 - a.clone());
    let lhs = sum(vec![p], vec![1, 1], vec![a.clone(), b.clone()], Sign::Minus, HarmonicOffset::Current, wp)?;

    let fa = v.rat(a);
    let denom = Float::with_val(wp, Float::with_val(wp, &fa * 2u32) - 1u32);
    let mut inner = Float::new(wp);
    for k in 0..=m {
        let s = 2 * m - 2 * k + 1;
        inner += v.tt_bar(2 * k + 1)? * (v.alt_zeta(s, &b)? - v.alt_zeta(s, a)?);
    }
    let sec_a = kernel_value(KernelKind::PiOverCos, &fa, wp)?;
    let bracket = Float::with_val(wp, v.tt(p)? << 1u32) - v.zeta(p, a)? - v.zeta(p, &b)?;
    let kernel_part = Float::with_val(wp, (sec_a * bracket) >> 1u32);
    let rhs = (inner + kernel_part) / denom;

    let c = case(IdentityId::SecReflected, CaseParams::Single { m, a: a.clone() }, prec, tolerance);
    Ok(finish(c, lhs.value, rhs, lhs.terms_used, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::verify::common::default_tolerance;

    const P: u32 = 192;

    fn tol() -> Real {
        default_tolerance(P)
    }

    fn assert_pass(rep: &VerificationReport) {
        assert!(rep.passed, "{}: gap {}", rep.case.case_id(), rep.absolute_gap.to_f64());
    }

    #[test]
    fn tan_pair_samples() {
        assert_pass(&verify_tan_pair(1, &r(1, 4), &r(1, 3), P, &tol()).unwrap());
        assert_pass(&verify_tan_pair(2, &r(1, 5), &r(-1, 5), P, &tol()).unwrap());
        assert_pass(&verify_tan_pair(3, &r(-2, 7), &r(3, 5), P, &tol()).unwrap());
    }

    #[test]
    fn tan_pair_is_symmetric() {
        let x = verify_tan_pair(2, &r(1, 4), &r(1, 3), P, &tol()).unwrap();
        let y = verify_tan_pair(2, &r(1, 3), &r(1, 4), P, &tol()).unwrap();
        let d = Float::with_val(P, &x.rhs - &y.rhs).abs();
        assert!(d <= tol());
        let d = Float::with_val(P, &x.lhs - &y.lhs).abs();
        assert!(d <= tol());
    }

    #[test]
    fn sec_pair_samples() {
        assert_pass(&verify_sec_pair(1, &r(1, 4), &r(1, 3), P, &tol()).unwrap());
        assert_pass(&verify_sec_pair(3, &r(1, 5), &r(2, 5), P, &tol()).unwrap());
        assert_pass(&verify_sec_pair(2, &r(1, 7), &r(-1, 7), P, &tol()).unwrap());
    }

    #[test]
    fn one_parameter_samples() {
        assert_pass(&verify_tan_symmetric(0, &r(1, 3), P, &tol()).unwrap());
        assert_pass(&verify_tan_symmetric(2, &r(-1, 5), P, &tol()).unwrap());
        assert_pass(&verify_tan_reflected(0, &r(1, 3), P, &tol()).unwrap());
        assert_pass(&verify_tan_reflected(1, &r(1, 5), P, &tol()).unwrap());
        assert_pass(&verify_sec_symmetric(1, &r(1, 4), P, &tol()).unwrap());
        assert_pass(&verify_sec_symmetric(2, &r(1, 7), P, &tol()).unwrap());
        assert_pass(&verify_sec_reflected(0, &r(1, 3), P, &tol()).unwrap());
        assert_pass(&verify_sec_reflected(2, &r(2, 5), P, &tol()).unwrap());
    }

    #[test]
    fn disabled_convention_breaks_the_even_case() {
        let rep = verify_tan_pair_with(2, &r(1, 4), &r(1, 3), P, &tol(), ZetaConvention::disabled()).unwrap();
        assert!(!rep.passed);
        assert!(rep.absolute_gap > Float::with_val(P, &tol() * 1_000_000u32));
    }

    #[test]
    fn hypotheses_are_enforced() {
        let bad = [
            (1, r(1, 4), r(1, 4)),
            (1, r(0, 1), r(1, 3)),
            (1, r(1, 2), r(1, 3)),
            (1, r(-1, 2), r(1, 3)),
            (1, r(5, 4), r(1, 3)),
            (0, r(1, 4), r(1, 3)),
        ];
        for (p, a, b) in bad {
            assert!(matches!(verify_tan_pair(p, &a, &b, P, &tol()), Err(Error::Hypothesis(_))), "{p} {a} {b}");
            assert!(matches!(verify_sec_pair(p, &a, &b, P, &tol()), Err(Error::Hypothesis(_))));
        }
        assert!(verify_sec_symmetric(0, &r(1, 4), P, &tol()).is_err());
        assert!(verify_tan_symmetric(0, &r(1, 2), P, &tol()).is_err());
        assert!(verify_tan_reflected(0, &r(1, 2), P, &tol()).is_err());
        assert!(verify_sec_reflected(0, &r(-1, 3), P, &tol()).is_err());
    }
}
