//! Helpers shared by the identity checks.

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numeric::real::{pow2, Real};
use crate::special::convention::ZetaConvention;
use crate::special::tvalues::{ttilde, ttilde_bar};
use crate::special::zeta::{alt_hurwitz_shifted, guarded, hurwitz_shifted};

/// Bits carried beyond the target precision inside a check.
pub(crate) const EXTRA_BITS: u32 = 16;

/// Default tolerance `2^(40 − P)`.
pub fn default_tolerance(prec: u32) -> Real {
    pow2(prec, 40 - prec as i32)
}

pub(crate) fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

pub(crate) fn sign(p: u32) -> i32 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Working-precision special values used on the closed-form side.
pub(crate) struct Values {
    pub wp: u32,
    pub conv: ZetaConvention,
}

impl Values {
    pub fn new(prec: u32, conv: ZetaConvention) -> Self {
        Self { wp: prec + EXTRA_BITS, conv }
    }

    pub fn rat(&self, r: &Rational) -> Float {
        Float::with_val(self.wp, r)
    }

    /// `ζ(s; x)` for any real `x` off the non-positive integers, with
    /// `ζ(1; x)` taken from the convention.
    pub fn zeta(&self, s: u32, x: &Rational) -> Result<Float> {
        let x = self.rat(x);
        if s == 1 {
            return self.conv.hurwitz1(&x, self.wp);
        }
        let v = hurwitz_shifted(s, &x, guarded(self.wp))?;
        Ok(Float::with_val(self.wp, v))
    }

    /// Alternating Hurwitz zeta for any real `x` off the non-positive integers.
    pub fn alt_zeta(&self, s: u32, x: &Rational) -> Result<Float> {
        let v = alt_hurwitz_shifted(s, &self.rat(x), guarded(self.wp))?;
        Ok(Float::with_val(self.wp, v))
    }

    /// `t̃(s)` with `t̃(1)` from the convention.
    pub fn tt(&self, s: u32) -> Result<Float> {
        if s == 1 {
            return self.conv.ttilde1(self.wp);
        }
        ttilde(s, self.wp)
    }

    pub fn tt_bar(&self, s: u32) -> Result<Float> {
        ttilde_bar(s, self.wp)
    }
}

/// Rejects rationals in `{0, −1, −2, ...}`.
pub(crate) fn not_nonpositive_integer(name: &str, x: &Rational) -> Result<()> {
    if x.is_integer() && *x <= 0 {
        return Err(hypothesis(format!("{name} = {x} is a non-positive integer")));
    }
    Ok(())
}

/// Rejects rationals with `x + 1/2` an integer.
pub(crate) fn not_half_odd(name: &str, x: &Rational) -> Result<()> {
    if Rational::from(x + Rational::from((1, 2))).is_integer() {
        return Err(hypothesis(format!("{name} + 1/2 = {} is an integer", Rational::from(x + Rational::from((1, 2))))));
    }
    Ok(())
}

/// Requires `|x| < 1`.
pub(crate) fn in_unit_box(name: &str, x: &Rational) -> Result<()> {
    if x.clone().abs() >= 1 {
        return Err(hypothesis(format!("|{name}| = |{x}| must be < 1")));
    }
    Ok(())
}
