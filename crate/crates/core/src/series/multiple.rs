//! Depth-two t- and T-values as single series over harmonic numbers:
//!
//! ```text
//!     t(s1, s2)  = 2^(−s1−s2)  Σ_n σ^n h_{n−1}^(s2) / (n − 1/2)^s1
//!     T(s1, s2)  = 2^(2−s1−s2) Σ_n h_n^(s2) / n^s1
//!     T(s̄1, s2)  = −2^(2−s1−s2) Σ_n (−1)^n h_n^(s2) / n^s1
//! ```

use rug::{Float, Rational};

use super::engine::{evaluate, SeriesResult, SumOptions};
use super::spec::{HarmonicOffset, SeriesProblem, Sign, SumSpec};
use crate::error::{Error, Result};
use crate::numeric::real::pow2;

fn check(s1: u32, s2: u32, bar1: bool) -> Result<()> {
    if s2 == 0 || s1 == 0 || (!bar1 && s1 < 2) {
        return Err(Error::Divergent(format!(
            "({}{s1}, {s2}) is outside the convergence domain",
            if bar1 { "bar " } else { "" }
        )));
    }
    Ok(())
}

fn sign(bar1: bool) -> Sign {
    if bar1 {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

fn scaled(r: SeriesResult, e: i32, negate: bool, prec: u32) -> SeriesResult {
    let f = pow2(prec, e);
    let mut value = Float::with_val(prec, &r.value * &f);
    if negate {
        value = -value;
    }
    SeriesResult {
        value,
        tail_bound: Float::with_val(64, &r.tail_bound * &f),
        terms_used: r.terms_used,
    }
}

/// The summation spec behind `t(s1, s2)` or `t(s̄1, s2)`.
pub fn double_t_spec(s1: u32, s2: u32, bar1: bool) -> SumSpec {
    SumSpec::new(vec![s2], vec![s1], vec![Rational::new()], sign(bar1), HarmonicOffset::Previous)
}

/// The summation spec behind `T(s1, s2)` or `T(s̄1, s2)`, before scaling.
pub fn double_capital_t_spec(s1: u32, s2: u32, bar1: bool) -> SumSpec {
    SumSpec::new(vec![s2], vec![s1], vec![Rational::from((1, 2))], sign(bar1), HarmonicOffset::Current)
}

/// `t(s1, s2) = Σ_{n1>n2≥1} σ^n1 (2n1−1)^-s1 (2n2−1)^-s2`, `σ = −1` when `bar1`.
pub fn double_t(s1: u32, s2: u32, bar1: bool, prec: u32) -> Result<SeriesResult> {
    check(s1, s2, bar1)?;
    let wp = prec + 8;
    let problem = SeriesProblem::from_spec(&double_t_spec(s1, s2, bar1))?;
    let r = evaluate(&problem, wp, &SumOptions::default())?;
    Ok(scaled(r, -((s1 + s2) as i32), false, prec))
}

/// `T(s1, s2) = 4 Σ_{n1>n2≥1} σ^n1 (2n1−2)^-s1 (2n2−1)^-s2`, `σ = −1` when `bar1`.
pub fn double_capital_t(s1: u32, s2: u32, bar1: bool, prec: u32) -> Result<SeriesResult> {
    check(s1, s2, bar1)?;
    let wp = prec + 8;
    let problem = SeriesProblem::from_spec(&double_capital_t_spec(s1, s2, bar1))?;
    let r = evaluate(&problem, wp, &SumOptions::default())?;
    Ok(scaled(r, 2 - (s1 + s2) as i32, bar1, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{riemann_zeta, single_capital_t, single_t};
    use rug::ops::Pow;

    /// Brute-force double sum over `n1 > n2`, truncated at `n1 ≤ limit`.
    /// Alternating sums average the last two partial sums.
    fn brute(s1: u32, s2: u32, bar1: bool, capital: bool, limit: u64) -> f64 {
        let mut total = 0.0f64;
        let mut previous = 0.0f64;
        let mut inner = 0.0f64;
        for n1 in 1..=limit {
            let d1 = if capital { (2 * n1 - 2) as f64 } else { (2 * n1 - 1) as f64 };
            if d1 > 0.0 {
                let sg = if bar1 && n1 % 2 == 1 { -1.0 } else { 1.0 };
                previous = total;
                total += sg * inner / d1.powi(s1 as i32);
            }
            inner += 1.0 / ((2 * n1 - 1) as f64).powi(s2 as i32);
        }
        let v = if bar1 { (total + previous) / 2.0 } else { total };
        if capital {
            4.0 * v
        } else {
            v
        }
    }

    #[test]
    fn t21_agrees_with_brute_force_and_closed_form() {
        let v = double_t(2, 1, false, 128).unwrap().value.to_f64();
        let b = brute(2, 1, false, false, 200_000);
        assert!((v - b).abs() < 1e-4, "{v} vs {b}");
        // Log2·t(2) − t(3)/2
        let l2 = std::f64::consts::LN_2;
        let closed = l2 * single_t(2, 64).unwrap().to_f64() - single_t(3, 64).unwrap().to_f64() / 2.0;
        assert!((v - closed).abs() < 1e-15);
        assert!((v - 0.3292).abs() < 1e-4);
    }

    #[test]
    fn alternating_t_agrees_with_brute_force() {
        let v = double_t(2, 2, true, 128).unwrap().value.to_f64();
        let b = brute(2, 2, true, false, 200_000);
        assert!((v - b).abs() < 1e-9, "{v} vs {b}");
    }

    #[test]
    fn capital_t_agrees_with_brute_force() {
        for (s1, s2, bar) in [(2u32, 1u32, false), (2, 2, true), (3, 2, false), (1, 2, true)] {
            let v = double_capital_t(s1, s2, bar, 128).unwrap().value.to_f64();
            let b = brute(s1, s2, bar, true, 400_000);
            let tol = if bar { 1e-9 } else { 1e-4 };
            assert!((v - b).abs() < tol, "({s1},{s2},{bar}): {v} vs {b}");
        }
    }

    #[test]
    fn stuffle_relation() {
        let prec = 160;
        let (s1, s2) = (3u32, 2u32);
        let lhs = single_t(s1, prec).unwrap() * single_t(s2, prec).unwrap();
        let rhs = double_t(s1, s2, false, prec).unwrap().value
            + double_t(s2, s1, false, prec).unwrap().value
            + single_t(s1 + s2, prec).unwrap();
        let gap = Float::with_val(prec, lhs - rhs).abs();
        assert!(gap < pow2(prec, -140));
    }

    #[test]
    fn t_three_from_capital_t_two_one() {
        // T(2,1) = 2^-1 Σ h_n / n^2 = T(3) = (7/4) ζ(3)
        let v = double_capital_t(2, 1, false, 160).unwrap().value;
        let expect = riemann_zeta(3, 160).unwrap() * 7u32 / 4u32;
        assert!(Float::with_val(160, &v - &expect).abs() < pow2(160, -140));
        let t3 = single_capital_t(3, 160).unwrap();
        assert!(Float::with_val(160, &t3 - &expect).abs() < pow2(160, -150));
        let _ = Float::with_val(160, 2).pow(2u32);
    }

    #[test]
    fn domain() {
        assert!(double_t(1, 2, false, 64).is_err());
        assert!(double_t(1, 2, true, 64).is_ok());
        assert!(double_capital_t(2, 0, false, 64).is_err());
    }
}
