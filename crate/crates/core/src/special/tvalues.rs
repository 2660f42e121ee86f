//! Depth-one t-, t̃- and T-values and their alternating versions.
//!
//! With `β` the Dirichlet beta function:
//!
//! ```text
//!     t(s)  = (1 − 2^-s) ζ(s)      t(s̄)  = −β(s)
//!     t̃(s)  = 2^s t(s)             t̃(s̄)  = 2^s t(s̄)
//!     T(s)  = 2 t(s)               T(s̄)  = 2 t(s̄)
//! ```

use rug::Float;

use super::zeta::{dirichlet_beta_wp, guarded, riemann_zeta};
use crate::error::{domain, Result};
use crate::numeric::real::{check_precision, pow2, Real};

fn t_wp(s: u32, wp: u32) -> Result<Float> {
    let z = riemann_zeta(s, wp)?;
    Ok(z * (Float::with_val(wp, 1) - pow2(wp, -(s as i32))))
}

fn need(function: &'static str, s: u32, min: u32) -> Result<()> {
    if s < min {
        Err(domain(function, format!("s = {s} < {min}")))
    } else {
        Ok(())
    }
}

/// `t(s) = Σ_{n≥1} (2n − 1)^-s` for `s ≥ 2`.
pub fn single_t(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("single_t", s, 2)?;
    Ok(Float::with_val(prec, t_wp(s, guarded(prec))?))
}

/// `t(s̄) = Σ_{n≥1} (−1)^n (2n − 1)^-s` for `s ≥ 1`.
pub fn single_t_bar(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("single_t_bar", s, 1)?;
    Ok(Float::with_val(prec, -dirichlet_beta_wp(s, guarded(prec))?))
}

/// `t̃(s) = Σ_{n≥1} (n − 1/2)^-s`. The divergent `t̃(1)` takes its
/// conventional value 0.
pub fn ttilde(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("ttilde", s, 1)?;
    if s == 1 {
        return Ok(Float::new(prec));
    }
    Ok(Float::with_val(prec, t_wp(s, guarded(prec))? << s))
}

/// `t̃(s̄) = Σ_{n≥1} (−1)^n (n − 1/2)^-s` for `s ≥ 1`.
pub fn ttilde_bar(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("ttilde_bar", s, 1)?;
    let b = dirichlet_beta_wp(s, guarded(prec))?;
    Ok(Float::with_val(prec, -(b << s)))
}

/// `T(s) = 2 t(s)` for `s ≥ 2`.
pub fn single_capital_t(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("single_T", s, 2)?;
    Ok(Float::with_val(prec, t_wp(s, guarded(prec))? << 1u32))
}

/// `T(s̄) = 2 t(s̄)` for `s ≥ 1`.
pub fn single_capital_t_bar(s: u32, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    need("single_T_bar", s, 1)?;
    let b = dirichlet_beta_wp(s, guarded(prec))?;
    Ok(Float::with_val(prec, -(b << 1u32)))
}
