//! Residue-sum-zero checks for `K(z) Ψ^(p−1)(1/2 − z)/(p−1)! · r(z)` with
//! `K = π tan(πz)` or `π/cos(πz)` and `r` a decaying rational function.
//!
//! The residues at the kernel's poles are grouped into four sums: the
//! half-integers `n − 1/2`, the half-integers `1/2 − n`, the non-negative
//! integers, and the poles of `r`. The first two run through the series
//! engine, the third reduces to Hurwitz zeta values term by term, and the
//! last is read off products of jets.

use std::time::Instant;

use rug::{Float, Integer, Rational};

use super::common::{hypothesis, sign, Values};
use super::rational::PartialFractionRational;
use super::report::{CaseParams, IdentityCase, IdentityId, VerificationReport};
use crate::error::Result;
use crate::numeric::jet::{jet_mul, jet_residue};
use crate::numeric::real::{check_precision, Real};
use crate::series::{evaluate, HarmonicOffset, PartialFractionTerm, SeriesProblem, Sign, SumOptions};
use crate::special::convention::ZetaConvention;
use crate::special::kernel::{kernel_jet, psi_jet, KernelKind};

/// The four grouped residue sums. Their total vanishes.
#[derive(Debug, Clone)]
pub struct ResidueTerms {
    pub forward_half: Real,
    pub backward_half: Real,
    pub integers: Real,
    pub poles: Real,
    pub terms_used: u64,
}

impl ResidueTerms {
    pub fn total(&self) -> Real {
        let prec = self.forward_half.prec();
        let mut t = Float::with_val(prec, &self.forward_half + &self.backward_half);
        t += &self.integers;
        t += &self.poles;
        t
    }
}

pub fn verify_tan_rational(p: u32, r: &PartialFractionRational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    verify_rational(KernelKind::PiTan, p, r, prec, tolerance)
}

pub fn verify_sec_rational(p: u32, r: &PartialFractionRational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    verify_rational(KernelKind::PiOverCos, p, r, prec, tolerance)
}

fn verify_rational(kind: KernelKind, p: u32, r: &PartialFractionRational, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    let start = Instant::now();
    let terms = residue_terms(kind, p, r, prec)?;
    let identity = match kind {
        KernelKind::PiTan => IdentityId::TanRational,
        _ => IdentityId::SecRational,
    };
    let case = IdentityCase {
        identity,
        params: CaseParams::Rational { p, r: r.clone() },
        precision: prec,
        tolerance: tolerance.clone(),
    };
    let total = Float::with_val(prec, terms.total());
    Ok(VerificationReport::new(case, total, Float::new(prec), terms.terms_used, start.elapsed()))
}

/// Computes the four grouped sums for `K = π tan` or `π/cos`.
pub fn residue_terms(kind: KernelKind, p: u32, r: &PartialFractionRational, prec: u32) -> Result<ResidueTerms> {
    check_precision(prec)?;
    if p == 0 {
        return Err(hypothesis("p must be ≥ 1"));
    }
    let sigma = match kind {
        KernelKind::PiTan => Sign::Plus,
        KernelKind::PiOverCos => Sign::Minus,
        _ => return Err(hypothesis(format!("{kind} is not a supported kernel"))),
    };
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let half = Rational::from((1, 2));
    let tt = v.tt(p)?;

    // r(n − 1/2) and r(1/2 − n) as weights in n
    let forward: Vec<_> = r
        .terms()
        .iter()
        .map(|t| PartialFractionTerm {
            beta: Rational::from(&t.beta + &half),
            order: t.order,
            coeff: t.coeff.clone(),
        })
        .collect();
    let backward: Vec<_> = r
        .terms()
        .iter()
        .map(|t| PartialFractionTerm {
            beta: Rational::from(&half - &t.beta),
            order: t.order,
            coeff: if t.order % 2 == 0 { t.coeff.clone() } else { Rational::from(-&t.coeff) },
        })
        .collect();

    let opts = SumOptions::default();
    let h_fwd = evaluate(
        &SeriesProblem::partial_fractions(vec![p], sigma, HarmonicOffset::Current, forward.clone())?,
        wp,
        &opts,
    )?;
    let h_bwd = evaluate(
        &SeriesProblem::partial_fractions(vec![p], sigma, HarmonicOffset::Previous, backward.clone())?,
        wp,
        &opts,
    )?;
    let w_fwd = weight_sum(&v, &forward, sigma)?;
    let w_bwd = weight_sum(&v, &backward, sigma)?;

    // Σ σ^n (h_n + (−1)^p t̃(p)) r(n − 1/2) and Σ σ^n (t̃(p) − h_{n−1}) r(1/2 − n)
    let s_fwd = Float::with_val(wp, &h_fwd.value + Float::with_val(wp, &tt * &w_fwd) * sign(p));
    let s_bwd = Float::with_val(wp, &tt * &w_bwd) - &h_bwd.value;
    let (forward_half, backward_half) = match sigma {
        Sign::Plus => (-s_fwd, Float::with_val(wp, &s_bwd * -sign(p))),
        Sign::Minus => (s_fwd, Float::with_val(wp, &s_bwd * -sign(p))),
    };

    let mut integers = Float::new(wp);
    match sigma {
        Sign::Plus => {
            // 2 Σ_k t̃(2k)/(p−2k)! Σ_{n≥0} r^(p−2k)(n)
            for k in 1..=p / 2 {
                let d = p - 2 * k;
                let s = derivative_sum(&v, r, d, sigma)? * v.tt(2 * k)?;
                integers += s / Float::with_val(wp, Float::factorial(d));
            }
            integers <<= 1u32;
        }
        Sign::Minus => {
            // −2 Σ_k t̃(2k+1‾)/(p−1−2k)! Σ_{n≥0} (−1)^n r^(p−1−2k)(n)
            for k in 0..=(p - 1) / 2 {
                let d = p - 1 - 2 * k;
                let s = derivative_sum(&v, r, d, sigma)? * v.tt_bar(2 * k + 1)?;
                integers += s / Float::with_val(wp, Float::factorial(d));
            }
            integers <<= 1u32;
            integers = -integers;
        }
    }

    let mut poles = Float::new(wp);
    for (beta, m) in r.poles() {
        let order = m as usize + 2;
        let base = v.rat(&beta);
        let k = kernel_jet(kind, &base, order, wp)?;
        let g = psi_jet(p, &base, order, wp)?;
        let rj = r.laurent_jet(&beta, order, wp)?;
        poles += jet_residue(&jet_mul(&jet_mul(&k, &g)?, &rj)?)?;
    }

    Ok(ResidueTerms {
        forward_half,
        backward_half,
        integers,
        poles,
        terms_used: h_fwd.terms_used + h_bwd.terms_used,
    })
}

/// `Σ_{n≥1} σ^n Σ c (n − β)^(-m)` in closed form. For `σ = +1` the
/// simple-pole coefficients sum to zero, so the regularized `ζ(1; ·)`
/// constants cancel.
fn weight_sum(v: &Values, terms: &[PartialFractionTerm], sigma: Sign) -> Result<Float> {
    let mut acc = Float::new(v.wp);
    for t in terms {
        // n − β = k + (1 − β), k ≥ 0
        let x = Rational::from(1 - t.beta.clone());
        let z = match sigma {
            Sign::Plus => v.zeta(t.order, &x)?,
            Sign::Minus => -v.alt_zeta(t.order, &x)?,
        };
        acc += z * v.rat(&t.coeff);
    }
    Ok(acc)
}

/// `Σ_{n≥0} σ^n r^(d)(n)` with `r^(d)(z) = Σ c (−1)^d (m)_d (z − β)^(−m−d)`.
fn derivative_sum(v: &Values, r: &PartialFractionRational, d: u32, sigma: Sign) -> Result<Float> {
    let mut acc = Float::new(v.wp);
    for t in r.terms() {
        let mut rising = Integer::from(1);
        for i in 0..d {
            rising *= t.order + i;
        }
        if d % 2 == 1 {
            rising = -rising;
        }
        let x = Rational::from(-&t.beta);
        let s = t.order + d;
        let z = match sigma {
            Sign::Plus => v.zeta(s, &x)?,
            Sign::Minus => v.alt_zeta(s, &x)?,
        };
        acc += z * v.rat(&Rational::from(&t.coeff * rising));
    }
    Ok(acc)
}
