//! Coefficient-by-coefficient comparison of the kernel and `Ψ` jets with
//! their closed-form expansions at `n`, `n − 1/2` and `1/2 − n`,
//! `n ∈ {0, 1, 2, 3}`.

use std::time::Instant;

use rug::{Float, Rational};

use super::common::{hypothesis, sign, Values};
use super::report::{CaseParams, IdentityCase, IdentityId, VerificationReport};
use crate::error::Result;
use crate::numeric::jet::JetSeries;
use crate::numeric::real::{binomial, check_precision, Real};
use crate::series::harmonic::{harmonic, odd_harmonic};
use crate::special::convention::ZetaConvention;
use crate::special::kernel::{kernel_jet, kernel_laurent, psi_jet, KernelKind};
use crate::special::zeta::alt_zeta;

const MAX_ORDER: usize = 8;
const POINTS: [u32; 4] = [0, 1, 2, 3];
const PSI_ORDERS: [u32; 3] = [1, 2, 3];

/// Largest discrepancy seen so far, with the pair that produced it.
struct Worst {
    gap: Float,
    computed: Float,
    expected: Float,
}

impl Worst {
    fn new(wp: u32) -> Self {
        Self {
            gap: Float::with_val(wp, -1),
            computed: Float::new(wp),
            expected: Float::new(wp),
        }
    }

    fn compare(&mut self, jet: &JetSeries, expected: &[Float]) {
        for (c, e) in jet.coeffs().iter().zip(expected) {
            let gap = Float::with_val(self.gap.prec(), c - e).abs();
            if gap > self.gap {
                self.gap = gap;
                self.computed = c.clone();
                self.expected = e.clone();
            }
        }
    }

    fn report(self, identity: IdentityId, order: usize, prec: u32, tolerance: &Real, start: Instant) -> VerificationReport {
        let case = IdentityCase {
            identity,
            params: CaseParams::Order { order },
            precision: prec,
            tolerance: tolerance.clone(),
        };
        VerificationReport::new(
            case,
            Float::with_val(prec, self.computed),
            Float::with_val(prec, self.expected),
            0,
            start.elapsed(),
        )
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(hypothesis(format!("expansion order must be in 1..={MAX_ORDER}, got {order}")));
    }
    Ok(())
}

fn half_odd(n: i64, wp: u32) -> Float {
    Float::with_val(wp, Rational::from((2 * n - 1, 2)))
}

/// Expansions of `Ψ^(p−1)(1/2 − z)/(p−1)!` for `p = 1, 2, 3`:
///
/// ```text
/// z → n:       (z−n)^-p + (−1)^p Σ_{i≥p} C(i−1, p−1) ((−1)^i H_n^(i) + ζ(i)) (z−n)^(i−p)
/// z → n − 1/2: (−1)^p Σ_{i≥p} C(i−1, p−1) ((−1)^i h_n^(i) + t̃(i)) (z−n+1/2)^(i−p)
/// z → 1/2 − n: (−1)^p Σ_{i≥p} C(i−1, p−1) (t̃(i) − h_{n−1}^(i)) (z+n−1/2)^(i−p)
/// ```
///
/// with `ζ(1) = −2 log 2` and `t̃(1) = 0`.
pub fn verify_psi_expansions(order: usize, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_order(order)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let zeta = |i: u32| -> Result<Float> {
        if i == 1 {
            v.conv.zeta1(wp)
        } else {
            crate::special::zeta::riemann_zeta(i, wp)
        }
    };
    let mut worst = Worst::new(wp);
    for p in PSI_ORDERS {
        let pu = p as usize;
        let coef = |i: u32, inner: Float| -> Float { inner * Float::with_val(wp, binomial(i - 1, p - 1)) * sign(p) };
        for n in POINTS {
            let base = Float::with_val(wp, n);
            let jet = psi_jet(p, &base, order, wp)?;
            let mut expected = vec![Float::new(wp); order + 1];
            expected[0] = Float::with_val(wp, 1);
            for i in p..=order as u32 {
                let h = Float::with_val(wp, harmonic(n as u64, i)) * sign(i);
                expected[i as usize] = coef(i, h + zeta(i)?);
            }
            worst.compare(&jet, &expected);

            let jet = psi_jet(p, &half_odd(n as i64, wp), order, wp)?;
            let mut expected = vec![Float::new(wp); order + 1];
            for i in p..=(p + order as u32) {
                let h = Float::with_val(wp, odd_harmonic(n as u64, i)) * sign(i);
                expected[i as usize - pu] = coef(i, h + v.tt(i)?);
            }
            worst.compare(&jet, &expected);

            if n >= 1 {
                let jet = psi_jet(p, &half_odd(1 - n as i64, wp), order, wp)?;
                let mut expected = vec![Float::new(wp); order + 1];
                for i in p..=(p + order as u32) {
                    let h = Float::with_val(wp, odd_harmonic(n as u64 - 1, i));
                    expected[i as usize - pu] = coef(i, v.tt(i)? - h);
                }
                worst.compare(&jet, &expected);
            }
        }
    }
    Ok(worst.report(IdentityId::PsiExpansions, order, prec, tolerance, start))
}

/// Expansions of `π tan(πz)` and `π/cos(πz)`:
///
/// ```text
/// π tan(πz)  at n − 1/2:  −w^-1 + 2 Σ ζ(2i) w^(2i−1)
/// π tan(πz)  at 0:        2 Σ t̃(2i) z^(2i−1)
/// π tan(πz)  at n:        k-th derivative = (1 − (−1)^k) k! t̃(k+1)
/// π/cos(πz)  at n − 1/2:  (−1)^n (w^-1 + 2 Σ ζ̄(2i) w^(2i−1))
/// π/cos(πz)  at 0:        −2 Σ t̃(2i+1‾) z^(2i)
/// π/cos(πz)  at n:        k-th derivative = (−1)^(n−1) (1 + (−1)^k) k! t̃(k+1‾)
/// ```
pub fn verify_trig_expansions(order: usize, prec: u32, tolerance: &Real) -> Result<VerificationReport> {
    check_precision(prec)?;
    check_order(order)?;
    let start = Instant::now();
    let v = Values::new(prec, ZetaConvention::standard());
    let wp = v.wp;
    let mut worst = Worst::new(wp);
    for n in POINTS {
        let pole = half_odd(n as i64, wp);
        // Laurent jets: index j ↔ power j − 1
        let tan = kernel_laurent(KernelKind::PiTan, &pole, order, wp)?;
        let sec = kernel_laurent(KernelKind::PiOverCos, &pole, order, wp)?;
        let mut e_tan = vec![Float::new(wp); order + 1];
        let mut e_sec = vec![Float::new(wp); order + 1];
        e_tan[0] = Float::with_val(wp, -1);
        e_sec[0] = Float::with_val(wp, sign(n));
        for j in (2..=order).step_by(2) {
            let i = j as u32 / 2;
            e_tan[j] = Float::with_val(wp, crate::special::zeta::riemann_zeta(2 * i, wp)? << 1u32);
            e_sec[j] = Float::with_val(wp, alt_zeta(2 * i, wp)? << 1u32) * sign(n);
        }
        worst.compare(&tan, &e_tan);
        worst.compare(&sec, &e_sec);

        // Taylor jets at the integer n; the case n = 0 is the power series
        // about the origin
        let base = Float::with_val(wp, n);
        let tan = kernel_jet(KernelKind::PiTan, &base, order, wp)?;
        let sec = kernel_jet(KernelKind::PiOverCos, &base, order, wp)?;
        let mut e_tan = vec![Float::new(wp); order + 1];
        let mut e_sec = vec![Float::new(wp); order + 1];
        for k in 0..=order as u32 {
            if k % 2 == 1 {
                e_tan[k as usize] = Float::with_val(wp, v.tt(k + 1)? << 1u32);
            } else {
                e_sec[k as usize] = Float::with_val(wp, v.tt_bar(k + 1)? << 1u32) * -sign(n);
            }
        }
        worst.compare(&tan, &e_tan);
        worst.compare(&sec, &e_sec);
    }
    Ok(worst.report(IdentityId::TrigExpansions, order, prec, tolerance, start))
}

/// Both expansion checks.
pub fn verify_kernel_expansions(order: usize, prec: u32, tolerance: &Real) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        verify_psi_expansions(order, prec, tolerance)?,
        verify_trig_expansions(order, prec, tolerance)?,
    ])
}
