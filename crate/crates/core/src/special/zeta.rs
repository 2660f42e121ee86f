//! Riemann, Hurwitz and alternating zeta values and the digamma function.
//!
//! Everything rests on two Euler–Maclaurin kernels, one for `ζ(s; x)` and
//! one for `ψ(x)`, each applied after shifting the argument far enough to
//! the right for the Bernoulli tail to converge quickly. The shifted
//! kernels accept any real argument off the pole set, which is how
//! negative parameters are reached.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::ops::Pow;
use rug::Float;

use crate::error::{domain, Error, Result};
use crate::numeric::bernoulli::float_tables;
use crate::numeric::real::{check_precision, log2, pow2, working_precision, Real};

/// Terms of the explicit part before the asymptotic tail starts.
fn shift_threshold(wp: u32) -> u32 {
    64u32.max((wp as f64 * 0.35).ceil() as u32)
}

/// Bernoulli tail length allowed before falling back to a larger shift.
fn tail_terms(wp: u32) -> usize {
    (wp as usize).div_ceil(8) + 8
}

/// Guarded working precision for a single zeta/digamma evaluation.
pub(crate) fn guarded(prec: u32) -> u32 {
    let n = shift_threshold(prec + 48) as u64 + tail_terms(prec + 48) as u64;
    working_precision(prec, n)
}

pub(crate) fn is_nonpositive_integer(x: &Float) -> bool {
    x.is_integer() && x.cmp0() != Some(std::cmp::Ordering::Greater)
}

/// `ζ(s; x) = Σ_{n≥0} (n + x)^(-s)` for `s ≥ 2` and any real `x` that is
/// not a non-positive integer, computed at precision `wp`.
pub(crate) fn hurwitz_shifted(s: u32, x: &Float, wp: u32) -> Result<Float> {
    if s < 2 {
        return Err(domain("hurwitz_zeta", format!("s = {s} < 2")));
    }
    if is_nonpositive_integer(x) {
        return Err(domain("hurwitz_zeta", format!("pole at a = {x}")));
    }
    let mut threshold = shift_threshold(wp);
    loop {
        if let Some(v) = hurwitz_attempt(s, x, wp, threshold) {
            return Ok(v);
        }
        threshold *= 2;
    }
}

fn hurwitz_attempt(s: u32, x: &Float, wp: u32, threshold: u32) -> Option<Float> {
    let mut head = Float::new(wp);
    let mut xx = Float::with_val(wp, x);
    while xx < threshold {
        head += Float::with_val(wp, (&xx).pow(s)).recip();
        xx += 1u32;
    }
    // Euler–Maclaurin tail at X = xx.
    let x_inv = Float::with_val(wp, xx.recip_ref());
    let x_inv2 = Float::with_val(wp, x_inv.square_ref());
    let x_pow_s = Float::with_val(wp, (&x_inv).pow(s)); // X^-s
    let mut tail = Float::with_val(wp, &x_pow_s * &xx) / (s - 1);
    tail += Float::with_val(wp, &x_pow_s >> 1u32);
    let tables = float_tables(wp, tail_terms(wp), 0);
    // running factor (s)_{2k-1} X^{-s-2k+1}
    let mut run = Float::with_val(wp, &x_pow_s * &x_inv) * s;
    let eps = Float::with_val(wp, Float::with_val(wp, &head + &tail).abs() >> wp);
    let mut prev_abs: Option<Float> = None;
    for k in 1..=tail_terms(wp) {
        let term = Float::with_val(wp, &run * &tables.em_over_fact[k - 1]);
        let abs = Float::with_val(wp, term.abs_ref());
        tail += &term;
        if abs <= eps {
            return Some(head + tail);
        }
        if let Some(p) = &prev_abs {
            if abs > *p {
                return None;
            }
        }
        prev_abs = Some(abs);
        let a = (s as u64) + 2 * k as u64 - 1;
        run *= &x_inv2;
        run *= a;
        run *= a + 1;
    }
    None
}

/// `ψ(x)` for any real `x` that is not a non-positive integer, at `wp`.
pub(crate) fn digamma_shifted(x: &Float, wp: u32) -> Result<Float> {
    if is_nonpositive_integer(x) {
        return Err(domain("digamma", format!("pole at {x}")));
    }
    let mut threshold = shift_threshold(wp);
    loop {
        if let Some(v) = digamma_attempt(x, wp, threshold) {
            return Ok(v);
        }
        threshold *= 2;
    }
}

fn digamma_attempt(x: &Float, wp: u32, threshold: u32) -> Option<Float> {
    let mut head = Float::new(wp);
    let mut xx = Float::with_val(wp, x);
    while xx < threshold {
        head -= Float::with_val(wp, xx.recip_ref());
        xx += 1u32;
    }
    let x_inv = Float::with_val(wp, xx.recip_ref());
    let x_inv2 = Float::with_val(wp, x_inv.square_ref());
    let mut tail = Float::with_val(wp, xx.ln_ref());
    tail -= Float::with_val(wp, &x_inv >> 1u32);
    let tables = float_tables(wp, tail_terms(wp), 0);
    let eps = Float::with_val(wp, Float::with_val(wp, &head + &tail).abs() >> wp);
    let mut run = x_inv2.clone();
    let mut prev_abs: Option<Float> = None;
    for k in 1..=tail_terms(wp) {
        let term = Float::with_val(wp, &run * &tables.em_over_2k[k - 1]);
        let abs = Float::with_val(wp, term.abs_ref());
        tail -= &term;
        if abs <= eps {
            return Some(head + tail);
        }
        if let Some(p) = &prev_abs {
            if abs > *p {
                return None;
            }
        }
        prev_abs = Some(abs);
        run *= &x_inv2;
    }
    None
}

/// `ζ(1; x) := ψ(1/2) − ψ(x)` on the shifted domain.
pub(crate) fn hurwitz1_shifted(x: &Float, wp: u32) -> Result<Float> {
    let half = Float::with_val(wp, 0.5);
    Ok(digamma_shifted(&half, wp)? - digamma_shifted(x, wp)?)
}

/// `ζ(s; x)` for `s ≥ 1`, with `s = 1` meaning the regularized value
/// `ψ(1/2) − ψ(x)`.
pub(crate) fn hurwitz_any(s: u32, x: &Float, wp: u32) -> Result<Float> {
    if s == 1 {
        hurwitz1_shifted(x, wp)
    } else {
        hurwitz_shifted(s, x, wp)
    }
}

/// `Σ_{n≥0} (−1)^n (n + x)^(-s)` for `s ≥ 1` on the shifted domain.
pub(crate) fn alt_hurwitz_shifted(s: u32, x: &Float, wp: u32) -> Result<Float> {
    if s == 0 {
        return Err(domain("alt_hurwitz_zeta", "s = 0"));
    }
    if is_nonpositive_integer(x) {
        return Err(domain("alt_hurwitz_zeta", format!("pole at a = {x}")));
    }
    let lo = Float::with_val(wp, x >> 1u32);
    let hi = Float::with_val(wp, Float::with_val(wp, x + 1u32) >> 1u32);
    if s == 1 {
        let d = digamma_shifted(&hi, wp)? - digamma_shifted(&lo, wp)?;
        Ok(d >> 1u32)
    } else {
        let d = hurwitz_shifted(s, &lo, wp)? - hurwitz_shifted(s, &hi, wp)?;
        Ok(d >> s)
    }
}

fn require_positive(function: &'static str, a: &Float) -> Result<()> {
    if a.cmp0() != Some(std::cmp::Ordering::Greater) {
        return Err(domain(function, format!("a = {a} must be positive")));
    }
    Ok(())
}

type ZetaCache = RwLock<HashMap<(u32, u32), Float>>;

fn zeta_cache() -> &'static ZetaCache {
    static CACHE: OnceLock<ZetaCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Riemann zeta `ζ(s)` for integer `s ≥ 2`, memoized per `(s, prec)`.
pub fn riemann_zeta(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    if s < 2 {
        return Err(Error::DivergentSymbol(format!("zeta({s})")));
    }
    if let Some(v) = zeta_cache().read().unwrap().get(&(s, prec)) {
        return Ok(v.clone());
    }
    let wp = guarded(prec);
    let v = Float::with_val(prec, hurwitz_shifted(s, &Float::with_val(wp, 1), wp)?);
    zeta_cache()
        .write()
        .unwrap()
        .insert((s, prec), v.clone());
    Ok(v)
}

/// Alternating zeta `ζ̄(s) = Σ_{n≥1} (−1)^(n−1) n^(-s)` for `s ≥ 1`.
pub fn alt_zeta(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    if s == 0 {
        return Err(domain("alt_zeta", "s = 0"));
    }
    if s == 1 {
        return Ok(log2(prec));
    }
    let wp = guarded(prec);
    let v = alt_hurwitz_shifted(s, &Float::with_val(wp, 1), wp)?;
    Ok(Float::with_val(prec, v))
}

/// Hurwitz zeta `ζ(s; a) = Σ_{n≥0} (n + a)^(-s)` for `s ≥ 2`, `a > 0`.
pub fn hurwitz_zeta(s: u32, a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    require_positive("hurwitz_zeta", a)?;
    let wp = guarded(prec);
    Ok(Float::with_val(prec, hurwitz_shifted(s, a, wp)?))
}

/// Regularized `ζ(1; a) = ψ(1/2) − ψ(a)` for `a > 0`.
pub fn hurwitz_zeta1(a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    require_positive("hurwitz_zeta1", a)?;
    let wp = guarded(prec);
    Ok(Float::with_val(prec, hurwitz1_shifted(a, wp)?))
}

/// Alternating Hurwitz zeta `Σ_{n≥0} (−1)^n (n + a)^(-s)` for `s ≥ 1`, `a > 0`.
pub fn alt_hurwitz_zeta(s: u32, a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    require_positive("alt_hurwitz_zeta", a)?;
    let wp = guarded(prec);
    Ok(Float::with_val(prec, alt_hurwitz_shifted(s, a, wp)?))
}

/// Digamma `ψ(a)` for `a > 0`.
pub fn digamma(a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    require_positive("digamma", a)?;
    let wp = guarded(prec);
    Ok(Float::with_val(prec, digamma_shifted(a, wp)?))
}

/// `Ψ^(p−1)(1/2 + a)`: `(−1)^p (p−1)! ζ(p; a)` for `p ≥ 2` and
/// `−ζ(1; a)` for `p = 1`.
pub fn param_digamma_deriv(p: u32, a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    if p == 0 {
        return Err(domain("param_digamma_deriv", "p = 0"));
    }
    require_positive("param_digamma_deriv", a)?;
    let wp = guarded(prec);
    let v = if p == 1 {
        -hurwitz1_shifted(a, wp)?
    } else {
        let fact = Float::with_val(wp, Float::factorial(p - 1));
        let z = hurwitz_shifted(p, a, wp)? * fact;
        if p % 2 == 0 {
            z
        } else {
            -z
        }
    };
    Ok(Float::with_val(prec, v))
}

/// Dirichlet beta `β(s) = Σ_{n≥0} (−1)^n (2n+1)^(-s)` for `s ≥ 1`.
pub(crate) fn dirichlet_beta_wp(s: u32, wp: u32) -> Result<Float> {
    let q = Float::with_val(wp, 0.25);
    let tq = Float::with_val(wp, 0.75);
    if s == 1 {
        let d = digamma_shifted(&tq, wp)? - digamma_shifted(&q, wp)?;
        return Ok(d >> 2u32);
    }
    let d = hurwitz_shifted(s, &q, wp)? - hurwitz_shifted(s, &tq, wp)?;
    Ok(d * pow2(wp, -2 * s as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::real::{cached_const, pi, Constant};

    const P: u32 = 192;

    fn close(a: &Float, b: &Float, bits: i32) -> bool {
        let d = Float::with_val(P + 32, a - b).abs();
        let scale = Float::with_val(P, a.abs_ref()).max(&Float::with_val(P, 1));
        d <= scale * pow2(P, -bits)
    }

    fn q(n: i32, d: i32) -> Float {
        Float::with_val(P + 64, n) / d
    }

    /// Independent oracle: MPFR's own zeta and digamma.
    fn mpfr_zeta(s: u32) -> Float {
        Float::with_val(P, Float::with_val(P + 64, s).zeta())
    }

    #[test]
    fn zeta_two_and_four_from_pi() {
        let pi = pi(P);
        let z2 = riemann_zeta(2, P).unwrap();
        assert!(close(&z2, &(Float::with_val(P, pi.square_ref()) / 6), P as i32 - 4));
        let z4 = riemann_zeta(4, P).unwrap();
        let pi4 = Float::with_val(P, (&pi).pow(4u32)) / 90;
        assert!(close(&z4, &pi4, P as i32 - 4));
    }

    #[test]
    fn zeta_matches_mpfr() {
        for s in 2..=30 {
            assert!(close(&riemann_zeta(s, P).unwrap(), &mpfr_zeta(s), P as i32 - 4), "s = {s}");
        }
        let z3 = riemann_zeta(3, P).unwrap();
        assert!(z3.to_string_radix(10, Some(25)).starts_with("1.2020569031595942853997"));
    }

    #[test]
    fn zeta_one_is_rejected() {
        assert!(matches!(riemann_zeta(1, P), Err(Error::DivergentSymbol(_))));
    }

    #[test]
    fn alternating_zeta_values() {
        let l2 = cached_const(Constant::Log2, P);
        assert_eq!(alt_zeta(1, P).unwrap(), l2);
        let z3 = alt_zeta(3, P).unwrap();
        assert!(z3.to_string_radix(10, Some(16)).starts_with("9.015426773696957"));
        for s in 2..=6 {
            let rel = Float::with_val(P, 1) - pow2(P, 1 - s as i32);
            let expect = mpfr_zeta(s) * rel;
            assert!(close(&alt_zeta(s, P).unwrap(), &expect, P as i32 - 12));
        }
    }

    #[test]
    fn hurwitz_special_arguments() {
        let one = Float::with_val(P, 1);
        let half = Float::with_val(P, 0.5);
        let z2 = mpfr_zeta(2);
        assert!(close(&hurwitz_zeta(2, &one, P).unwrap(), &z2, P as i32 - 4));
        assert!(close(&hurwitz_zeta(2, &half, P).unwrap(), &(z2 * 3u32), P as i32 - 4));
    }

    #[test]
    fn hurwitz_matches_mpfr_at_rationals() {
        for (n, d) in [(1, 4), (1, 3), (2, 5), (7, 3), (1, 100)] {
            let a = q(n, d);
            for s in [2u32, 3, 5, 9] {
                let ours = hurwitz_zeta(s, &a, P).unwrap();
                // explicit head plus the value far to the right
                let mut head = Float::new(P + 64);
                for k in 0..64 {
                    head += Float::with_val(P + 64, Float::with_val(P + 64, &a + k).pow(s)).recip();
                }
                let rest = hurwitz_zeta(s, &Float::with_val(P + 64, &a + 64u32), P).unwrap();
                assert!(close(&ours, &(head + rest), P as i32 - 8), "s={s} a={n}/{d}");
            }
        }
    }

    #[test]
    fn hurwitz_multiplication_theorem() {
        // Σ_{k<m} ζ(s; k/m + 1/m) = m^s ζ(s), checked against MPFR's ζ(s)
        for m in [3i32, 4, 7] {
            for s in [2u32, 3, 4] {
                let mut acc = Float::new(P + 32);
                for k in 1..=m {
                    acc += hurwitz_zeta(s, &q(k, m), P).unwrap();
                }
                let expect = mpfr_zeta(s) * Float::with_val(P, m).pow(s);
                assert!(close(&acc, &expect, P as i32 - 10), "m={m} s={s}");
            }
        }
    }

    #[test]
    fn hurwitz_quarter_cube_leading_term() {
        let v = hurwitz_zeta(3, &q(1, 4), P).unwrap();
        assert!(v > 64 && v < 66);
    }

    #[test]
    fn digamma_special_values() {
        let g = cached_const(Constant::EulerGamma, P);
        let l2 = cached_const(Constant::Log2, P);
        let d1 = digamma(&Float::with_val(P, 1), P).unwrap();
        assert!(close(&d1, &Float::with_val(P, -&g), P as i32 - 4));
        let dh = digamma(&Float::with_val(P, 0.5), P).unwrap();
        let expect = Float::with_val(P, -&g) - Float::with_val(P, &l2 * 2u32);
        assert!(close(&dh, &expect, P as i32 - 4));
        // ψ(1/4) = −γ − π/2 − 3 log 2
        let dq = digamma(&q(1, 4), P).unwrap();
        let expect = Float::with_val(P, -&g) - (pi(P) >> 1u32) - l2 * 3u32;
        assert!(close(&dq, &expect, P as i32 - 6));
    }

    #[test]
    fn digamma_matches_mpfr() {
        for (n, d) in [(1, 3), (5, 7), (13, 2), (1, 1000)] {
            let a = q(n, d);
            let oracle = Float::with_val(P, a.digamma_ref());
            assert!(close(&digamma(&a, P).unwrap(), &oracle, P as i32 - 8));
        }
    }

    #[test]
    fn negative_arguments_via_shift() {
        // ψ(x) = ψ(x + 1) − 1/x, ζ(s; x) = x^{-s} + ζ(s; x + 1)
        let x = q(-7, 3);
        let wp = P + 40;
        let lhs = digamma_shifted(&x, wp).unwrap();
        let rhs = Float::with_val(wp, x.digamma_ref());
        assert!(close(&lhs, &rhs, P as i32 - 8));
        let z = hurwitz_shifted(4, &x, wp).unwrap();
        let next = hurwitz_shifted(4, &Float::with_val(wp, &x + 1u32), wp).unwrap();
        let xs = Float::with_val(wp, (&x).pow(4u32)).recip();
        assert!(close(&z, &(next + xs), P as i32 - 8));
        assert!(hurwitz_shifted(2, &Float::with_val(wp, -3), wp).is_err());
    }

    #[test]
    fn hurwitz_zeta1_values() {
        let half = Float::with_val(P, 0.5);
        assert!(hurwitz_zeta1(&half, P).unwrap().is_zero());
        let one = Float::with_val(P, 1);
        let l2 = cached_const(Constant::Log2, P);
        let v = hurwitz_zeta1(&one, P).unwrap();
        assert!(close(&v, &Float::with_val(P, &l2 * -2i32), P as i32 - 4));
        // ψ(1/2) − ψ(1/3) = π/(2√3) + (3/2)log 3 − 2 log 2
        let third = q(1, 3);
        let v = hurwitz_zeta1(&third, P).unwrap();
        let sqrt3 = Float::with_val(P, 3).sqrt();
        let ln3 = Float::with_val(P, 3).ln();
        let expect = pi(P) / (sqrt3 * 2u32) + ln3 * 1.5f64 - l2 * 2u32;
        assert!(close(&v, &expect, P as i32 - 6));
        assert!(hurwitz_zeta1(&Float::with_val(P, -0.5), P).is_err());
    }

    #[test]
    fn alternating_hurwitz_values() {
        let one = Float::with_val(P, 1);
        let l2 = cached_const(Constant::Log2, P);
        assert!(close(&alt_hurwitz_zeta(1, &one, P).unwrap(), &l2, P as i32 - 4));
        let pi2 = Float::with_val(P, pi(P).square_ref()) / 12;
        assert!(close(&alt_hurwitz_zeta(2, &one, P).unwrap(), &pi2, P as i32 - 4));
        // paired summation oracle for (2, 1/3): terms decay like n^-3
        let a = q(1, 3);
        let mut acc = Float::new(P + 64);
        let n_pairs = 20_000u32;
        for k in 0..n_pairs {
            let e = Float::with_val(P + 64, &a + 2 * k);
            let o = Float::with_val(P + 64, &e + 1u32);
            acc += Float::with_val(P + 64, e.square_ref()).recip();
            acc -= Float::with_val(P + 64, o.square_ref()).recip();
        }
        let v = alt_hurwitz_zeta(2, &a, P).unwrap();
        let gap = Float::with_val(P, &v - &acc).abs();
        // truncated pair sum leaves ~ 1/(2 (2N)^2) behind
        assert!(gap < 1e-9 && gap > 0);
    }

    #[test]
    fn param_digamma_examples() {
        let one = Float::with_val(P, 1);
        let z2 = mpfr_zeta(2);
        assert!(close(&param_digamma_deriv(2, &one, P).unwrap(), &z2, P as i32 - 4));
        assert!(param_digamma_deriv(1, &Float::with_val(P, 0.5), P).unwrap().is_zero());
        let a = q(1, 3);
        let v = param_digamma_deriv(3, &a, P).unwrap();
        let expect = hurwitz_zeta(3, &a, P).unwrap() * -2i32;
        assert!(close(&v, &expect, P as i32 - 4));
    }

    #[test]
    fn beta_at_one_is_quarter_pi() {
        let b = dirichlet_beta_wp(1, P).unwrap();
        assert!(close(&b, &(pi(P) >> 2u32), P as i32 - 4));
        // Catalan's constant
        let c = dirichlet_beta_wp(2, P).unwrap();
        assert!(c.to_string_radix(10, Some(16)).starts_with("9.159655941772190"));
    }

    #[test]
    fn functional_relations() {
        for (n, d) in [(1, 5), (2, 3), (9, 4)] {
            let a = q(n, d);
            for s in [2u32, 3, 6] {
                let z = hurwitz_zeta(s, &a, P).unwrap();
                let next = hurwitz_zeta(s, &Float::with_val(P + 64, &a + 1u32), P).unwrap();
                let xs = Float::with_val(P + 64, (&a).pow(s)).recip();
                assert!(close(&z, &(next + xs), P as i32 - 12));
            }
            for s in [1u32, 2, 5] {
                let z = alt_hurwitz_zeta(s, &a, P).unwrap();
                let next = alt_hurwitz_zeta(s, &Float::with_val(P + 64, &a + 1u32), P).unwrap();
                let xs = Float::with_val(P + 64, (&a).pow(s)).recip();
                assert!(close(&Float::with_val(P, &z + &next), &Float::with_val(P, xs), P as i32 - 12));
            }
        }
    }

    #[test]
    fn precision_floor() {
        assert!(matches!(riemann_zeta(2, 8), Err(Error::PrecisionTooLow(..))));
    }
}
