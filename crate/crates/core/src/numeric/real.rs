use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use rug::float::Constant as MpfrConstant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Arbitrary-precision binary floating value (MPFR, round-to-nearest).
pub type Real = Float;

/// Smallest precision accepted by the public numeric operations.
pub const MIN_PRECISION: u32 = 16;

/// Guard bits added on top of the target precision before the
/// term-count-dependent part.
pub const GUARD_BITS: u32 = 32;

/// Working precision for a computation that accumulates about `terms`
/// rounded operations: `target + 32 + ceil(log2(terms))`.
pub fn working_precision(target: u32, terms: u64) -> u32 {
    target + GUARD_BITS + ceil_log2(terms.max(1))
}

pub(crate) fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

pub(crate) fn check_precision(prec: u32) -> Result<()> {
    if prec < MIN_PRECISION {
        Err(Error::PrecisionTooLow(prec, MIN_PRECISION))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    Pi,
    Log2,
    EulerGamma,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::Log2 => "log2",
            Constant::EulerGamma => "euler_gamma",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Constant::Pi),
            "log2" => Ok(Constant::Log2),
            "euler_gamma" | "gamma" => Ok(Constant::EulerGamma),
            other => Err(Error::UnknownConstant(other.to_string())),
        }
    }
}

type ConstCache = RwLock<HashMap<(Constant, u32), Real>>;

fn const_cache() -> &'static ConstCache {
    static CACHE: OnceLock<ConstCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Fundamental constant correctly rounded to `prec` bits, memoized per
/// `(constant, prec)`.
pub fn real_const(c: Constant, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    Ok(cached_const(c, prec))
}

/// [`real_const`] looked up by name (`pi`, `log2`, `euler_gamma`).
pub fn real_const_named(name: &str, prec: u32) -> Result<Real> {
    real_const(name.parse()?, prec)
}

pub(crate) fn cached_const(c: Constant, prec: u32) -> Real {
    if let Some(v) = const_cache().read().unwrap().get(&(c, prec)) {
        return v.clone();
    }
    let src = match c {
        Constant::Pi => MpfrConstant::Pi,
        Constant::Log2 => MpfrConstant::Log2,
        Constant::EulerGamma => MpfrConstant::Euler,
    };
    let v = Float::with_val(prec, src);
    const_cache()
        .write()
        .unwrap()
        .entry((c, prec))
        .or_insert_with(|| v.clone());
    v
}

pub(crate) fn pi(prec: u32) -> Real {
    cached_const(Constant::Pi, prec)
}

pub(crate) fn log2(prec: u32) -> Real {
    cached_const(Constant::Log2, prec)

}
/// `2^e` exactly, for any integer exponent.
#[inline]
pub(crate) fn pow2(prec: u32, e: i32) -> Real {
    Float::with_val(prec, 1) << e
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

/// Binomial coefficient C(n, k) as a rational.
pub fn binomial_q(n: u32, k: u32) -> Rational {
    Rational::from(binomial(n, k))
}

/// Units in the last place separating `a` and `b`, measured at
/// `prec` bits relative to the larger magnitude.
pub fn ulp_distance(a: &Real, b: &Real, prec: u32) -> Real {
    let diff = Float::with_val(prec + 64, a - b).abs();
    let scale = if a.cmp_abs(b) == Some(std::cmp::Ordering::Less) {
        b
    } else {
        a
    };
    if scale.is_zero() {
        return diff;
    }
    let exp = scale.get_exp().unwrap_or(0);
    // one ulp of a `prec`-bit number with exponent `exp` is 2^(exp - prec)
    diff << (prec as i32 - exp)
}

/// Parses a rational written as `p/q`, an integer, or a finite decimal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Config("empty rational".into()));
    }
    if let Ok(r) = Rational::from_str(t) {
        return Ok(r);
    }
    // decimal form, e.g. 0.25 or -1.5
    let neg = t.starts_with('-');
    let body = t.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int_part}{frac_part}");
    let num = Integer::from_str(if digits.is_empty() { "0" } else { &digits })
        .map_err(|_| Error::Config(format!("cannot parse `{s}` as a rational")))?;
    let den = Integer::from(10).pow(frac_part.len() as u32);
    let r = Rational::from((num, den));
    Ok(if neg { -r } else { r })
}

/// Decimal rendering with `digits` significant digits.
pub fn to_decimal(x: &Real, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

/// Number of significant decimal digits carried by `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

/// Serializes a real as `{"decimal": ..., "precision_bits": ...}`, with as
/// many significant digits as the precision carries.
pub fn serialize_real<S: serde::Serializer>(x: &Real, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Real", 2)?;
    st.serialize_field("decimal", &to_decimal(x, decimal_digits(x.prec())))?;
    st.serialize_field("precision_bits", &x.prec())?;
    st.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_leading_digits() {
        let pi = real_const(Constant::Pi, 64).unwrap();
        assert!(to_decimal(&pi, 15).starts_with("3.14159265358979"));
        let l2 = real_const(Constant::Log2, 64).unwrap();
        assert!(to_decimal(&l2, 20).starts_with("6.9314718055994530"));
        let g = real_const_named("euler_gamma", 64).unwrap();
        assert!(to_decimal(&g, 20).starts_with("5.7721566490153286"));
    }

    #[test]
    fn unknown_constant_rejected() {
        assert!(matches!(
            real_const_named("catalan", 64),
            Err(Error::UnknownConstant(_))
        ));
        assert!(matches!(
            real_const(Constant::Pi, 8),
            Err(Error::PrecisionTooLow(8, _))
        ));
    }

    #[test]
    fn memoized_constants_are_identical() {
        let a = real_const(Constant::Pi, 200).unwrap();
        let b = real_const(Constant::Pi, 200).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.prec(), 200);
    }

    #[test]
    fn working_precision_budget() {
        assert_eq!(working_precision(192, 1), 224);
        assert_eq!(working_precision(192, 1 << 14), 238);
        assert_eq!(working_precision(192, (1 << 14) + 1), 239);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/4").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational("-1/7").unwrap(), Rational::from((-1, 7)));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational("-1.5").unwrap(), Rational::from((-3, 2)));
        assert_eq!(parse_rational("3").unwrap(), Rational::from(3));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn ulp_distance_counts_units() {
        let a = Float::with_val(64, 1);
        let b = Float::with_val(64, 1) + pow2(64, -62);
        // MPFR exponent of 1.0 is 1, so one ulp at 64 bits is 2^-63
        let d = ulp_distance(&a, &b, 64);
        assert_eq!(d, 2);
    }
}
