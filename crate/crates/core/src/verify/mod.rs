//! Numerical checks of the parametric Euler T-sum identities, the
//! residue-sum-zero statements for general rational weights, and the
//! kernel expansions they are built on.

mod common;
pub mod expansions;
pub mod parametric;
pub mod rational;
pub mod report;
pub mod residue;

pub use common::default_tolerance;
pub use expansions::{verify_kernel_expansions, verify_psi_expansions, verify_trig_expansions};
pub use parametric::{
    verify_sec_pair, verify_sec_reflected, verify_sec_symmetric, verify_tan_pair, verify_tan_pair_with,
    verify_tan_reflected, verify_tan_symmetric,
};
pub use rational::PartialFractionRational;
pub use report::{CaseParams, IdentityCase, IdentityId, VerificationReport};
pub use residue::{residue_terms, verify_sec_rational, verify_tan_rational, ResidueTerms};

use crate::error::{Error, Result};

/// Checks a case's hypotheses without evaluating anything.
pub fn check_case(case: &IdentityCase) -> Result<()> {
    use IdentityId::*;
    match (&case.identity, &case.params) {
        (TanPair | SecPair, CaseParams::Pair { p, a, b }) => parametric::check_pair(*p, a, b),
        (TanSymmetric, CaseParams::Single { a, .. }) => parametric::check_symmetric(a),
        (SecSymmetric, CaseParams::Single { m, a }) => {
            if *m == 0 {
                return Err(Error::Hypothesis("m must be ≥ 1".into()));
            }
            parametric::check_symmetric(a)
        }
        (TanReflected | SecReflected, CaseParams::Single { a, .. }) => parametric::check_reflected(a),
        (TanRational | SecRational, CaseParams::Rational { p, .. }) => {
            if *p == 0 {
                return Err(Error::Hypothesis("p must be ≥ 1".into()));
            }
            Ok(())
        }
        (PsiExpansions | TrigExpansions, CaseParams::Order { order }) => {
            if *order == 0 || *order > 8 {
                return Err(Error::Hypothesis(format!("expansion order must be in 1..=8, got {order}")));
            }
            Ok(())
        }
        (id, params) => Err(Error::Config(format!("{id} does not take parameters {params}"))),
    }
}

/// Evaluates one case.
pub fn run_case(case: &IdentityCase) -> Result<VerificationReport> {
    use IdentityId::*;
    check_case(case)?;
    let (prec, tol) = (case.precision, &case.tolerance);
    match (&case.identity, &case.params) {
        (TanPair, CaseParams::Pair { p, a, b }) => verify_tan_pair(*p, a, b, prec, tol),
        (SecPair, CaseParams::Pair { p, a, b }) => verify_sec_pair(*p, a, b, prec, tol),
        (TanSymmetric, CaseParams::Single { m, a }) => verify_tan_symmetric(*m, a, prec, tol),
        (TanReflected, CaseParams::Single { m, a }) => verify_tan_reflected(*m, a, prec, tol),
        (SecSymmetric, CaseParams::Single { m, a }) => verify_sec_symmetric(*m, a, prec, tol),
        (SecReflected, CaseParams::Single { m, a }) => verify_sec_reflected(*m, a, prec, tol),
        (TanRational, CaseParams::Rational { p, r }) => verify_tan_rational(*p, r, prec, tol),
        (SecRational, CaseParams::Rational { p, r }) => verify_sec_rational(*p, r, prec, tol),
        (PsiExpansions, CaseParams::Order { order }) => verify_psi_expansions(*order, prec, tol),
        (TrigExpansions, CaseParams::Order { order }) => verify_trig_expansions(*order, prec, tol),
        _ => unreachable!("rejected by check_case"),
    }
}
