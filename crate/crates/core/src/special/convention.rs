//! Values assigned to the divergent symbols `ζ(1)`, `t̃(1)` and `ζ(1; a)`.
//!
//! These symbols only appear inside closed-form expansions, and callers
//! request them explicitly through a [`ZetaConvention`]. The disabled
//! convention replaces the regularized `ζ(1; a)` by 0 and exists so that
//! identity checks can demonstrate they depend on it.

use rug::Float;

use super::zeta::{guarded, hurwitz1_shifted};
use crate::error::Result;
use crate::numeric::real::{check_precision, log2, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ZetaConvention {
    disabled: bool,
}

impl ZetaConvention {
    /// `ζ(1) = −2 log 2`, `t̃(1) = 0`, `ζ(1; a) = ψ(1/2) − ψ(a)`.
    pub fn standard() -> Self {
        Self { disabled: false }
    }

    /// Same, except `ζ(1; a) = 0`.
    pub fn disabled() -> Self {
        Self { disabled: true }
    }

    pub fn is_standard(&self) -> bool {
        !self.disabled
    }

    pub fn zeta1(&self, prec: u32) -> Result<Real> {
        check_precision(prec)?;
        Ok(Float::with_val(prec, log2(prec) * -2i32))
    }

    pub fn ttilde1(&self, prec: u32) -> Result<Real> {
        check_precision(prec)?;
        Ok(Float::new(prec))
    }

    /// `ζ(1; a)` for any real `a` off the non-positive integers.
    pub fn hurwitz1(&self, a: &Real, prec: u32) -> Result<Real> {
        check_precision(prec)?;
        if self.disabled {
            return Ok(Float::new(prec));
        }
        Ok(Float::with_val(prec, hurwitz1_shifted(a, guarded(prec))?))
    }
}
