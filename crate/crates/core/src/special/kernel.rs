//! Trigonometric kernels `π tan(πz)`, `π/cos(πz)`, `π cot(πz)`, `π/sin(πz)`
//! and the parametric digamma `Ψ^(p−1)(1/2 − z)/(p−1)!`, as point values
//! and as Taylor or Laurent jets.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Float, Integer};

use super::zeta::{guarded, hurwitz_any, riemann_zeta};
use crate::error::{domain, Error, Result};
use crate::numeric::jet::{convolve, recip_coeffs, JetSeries};
use crate::numeric::real::{binomial, check_precision, log2, pi, pow2, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KernelKind {
    PiTan,
    PiOverCos,
    PiCot,
    PiOverSin,
}

impl KernelKind {
    pub const ALL: [KernelKind; 4] = [
        KernelKind::PiTan,
        KernelKind::PiOverCos,
        KernelKind::PiCot,
        KernelKind::PiOverSin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::PiTan => "pi_tan",
            KernelKind::PiOverCos => "pi_over_cos",
            KernelKind::PiCot => "pi_cot",
            KernelKind::PiOverSin => "pi_over_sin",
        }
    }

    /// Poles sit at half-integers for tan/sec and at integers for cot/csc.
    fn pole_offset_is_half(self) -> bool {
        matches!(self, KernelKind::PiTan | KernelKind::PiOverCos)
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown kernel `{s}`")))
    }
}

/// Signed distance from `a` to the nearest pole of `kind`, and that pole's
/// integer label `n` (the pole is `n − 1/2` or `n`).
fn nearest_pole(kind: KernelKind, a: &Float, wp: u32) -> (Float, Integer) {
    let shifted = if kind.pole_offset_is_half() {
        Float::with_val(wp, a + 0.5f64)
    } else {
        Float::with_val(wp, a)
    };
    let n = Float::with_val(wp, shifted.round_ref());
    let d = Float::with_val(wp, &shifted - &n);
    (d, n.to_integer().unwrap_or_default())
}

fn check_pole(kind: KernelKind, a: &Float, prec: u32) -> Result<()> {
    let (d, _) = nearest_pole(kind, a, a.prec().max(prec) + 16);
    let bits = prec / 2;
    if d.abs() < pow2(prec, -(bits as i32)) {
        return Err(Error::PoleProximity {
            kind: kind.name().to_string(),
            at: a.to_string_radix(10, Some(20)),
            bits,
        });
    }
    Ok(())
}

/// `π tan(πa)`, `π/cos(πa)`, `π cot(πa)` or `π/sin(πa)`.
pub fn kernel_value(kind: KernelKind, a: &Real, prec: u32) -> Result<Real> {
    check_precision(prec)?;
    check_pole(kind, a, prec)?;
    let wp = guarded(prec);
    let pi = pi(wp);
    let x = Float::with_val(wp, &pi * a);
    let v = match kind {
        KernelKind::PiTan => x.tan() * &pi,
        KernelKind::PiOverCos => Float::with_val(wp, &pi / x.cos()),
        KernelKind::PiCot => x.cot() * &pi,
        KernelKind::PiOverSin => Float::with_val(wp, &pi / x.sin()),
    };
    Ok(Float::with_val(prec, v))
}

/// Taylor jet of a kernel at a regular point, from the derivative
/// recurrences `tan' = π(1 + tan²)`, `sec' = π sec tan`,
/// `cot' = −π(1 + cot²)`, `csc' = −π csc cot`.
pub fn kernel_jet(kind: KernelKind, base: &Real, order: usize, prec: u32) -> Result<JetSeries> {
    check_precision(prec)?;
    check_pole(kind, base, prec)?;
    let wp = guarded(prec) + 2 * order as u32;
    let pi = pi(wp);
    let x = Float::with_val(wp, &pi * base);
    let (sin, cos) = x.sin_cos(Float::new(wp));
    let cotangent = matches!(kind, KernelKind::PiCot | KernelKind::PiOverSin);
    // g = tan or cot, with g' = ±π(1 + g²)
    let sign = if cotangent { -1i32 } else { 1 };
    let g0 = if cotangent {
        Float::with_val(wp, &cos / &sin)
    } else {
        Float::with_val(wp, &sin / &cos)
    };
    let mut g = vec![g0];
    for d in 0..order {
        let mut acc = Float::new(wp);
        if d == 0 {
            acc += 1u32;
        }
        for i in 0..=d {
            acc += Float::with_val(wp, &g[i] * &g[d - i]);
        }
        g.push(acc * &pi * sign / (d as u32 + 1));
    }
    let coeffs: Vec<Float> = match kind {
        KernelKind::PiTan | KernelKind::PiCot => g,
        KernelKind::PiOverCos | KernelKind::PiOverSin => {
            // h = sec or csc, with h' = ±π h g
            let h0 = if cotangent {
                Float::with_val(wp, sin.recip_ref())
            } else {
                Float::with_val(wp, cos.recip_ref())
            };
            let mut h = vec![h0];
            for d in 0..order {
                let mut acc = Float::new(wp);
                for i in 0..=d {
                    acc += Float::with_val(wp, &h[i] * &g[d - i]);
                }
                h.push(acc * &pi * sign / (d as u32 + 1));
            }
            h
        }
    };
    let coeffs = coeffs
        .into_iter()
        .map(|c| Float::with_val(prec, c * &pi))
        .collect();
    Ok(JetSeries::taylor(Float::with_val(prec, base), coeffs))
}

/// Laurent jet of a kernel at one of its (simple) poles. The result has
/// `pole_order = 1` and `order + 1` coefficients, for the powers
/// `w^-1 .. w^(order-1)` of `w = z − pole`.
pub fn kernel_laurent(kind: KernelKind, pole: &Real, order: usize, prec: u32) -> Result<JetSeries> {
    check_precision(prec)?;
    let wp = guarded(prec) + 2 * order as u32;
    let (d, n) = nearest_pole(kind, pole, pole.prec().max(wp));
    if !d.is_zero() {
        return Err(domain(
            "kernel_laurent",
            format!("{pole} is not a pole of {kind}"),
        ));
    }
    let pi = pi(wp);
    let len = order + 1;
    // cos(πw) and sin(πw)/(πw) as power series in w
    let mut cos_c = vec![Float::new(wp); len];
    let mut sinc_c = vec![Float::new(wp); len];
    let pi2 = Float::with_val(wp, pi.square_ref());
    let mut term_cos = Float::with_val(wp, 1);
    let mut term_sinc = Float::with_val(wp, 1);
    let mut k = 0usize;
    while 2 * k < len {
        cos_c[2 * k] = term_cos.clone();
        sinc_c[2 * k] = term_sinc.clone();
        let a = (2 * k + 1) as u32;
        let b = (2 * k + 2) as u32;
        term_cos *= &pi2;
        term_cos /= a * b;
        term_cos = -term_cos;
        term_sinc *= &pi2;
        term_sinc /= b * (b + 1);
        term_sinc = -term_sinc;
        k += 1;
    }
    // π/sin(πw) = (1/w) · (sinc)^-1 ;  π cot(πw) = (1/w) · cos · (sinc)^-1
    let inv_sinc = recip_coeffs(&sinc_c, wp);
    let odd = n.is_odd();
    let coeffs: Vec<Float> = match kind {
        KernelKind::PiTan => convolve(&cos_c, &inv_sinc, len, wp)
            .into_iter()
            .map(|c| -c)
            .collect(),
        KernelKind::PiCot => convolve(&cos_c, &inv_sinc, len, wp),
        KernelKind::PiOverCos | KernelKind::PiOverSin => {
            if odd {
                inv_sinc.into_iter().map(|c| -c).collect()
            } else {
                inv_sinc
            }
        }
    };
    let coeffs = coeffs
        .into_iter()
        .map(|c| Float::with_val(prec, c))
        .collect();
    Ok(JetSeries::new(Float::with_val(prec, pole), coeffs, 1))
}

/// Jet of `G_p(z) = Ψ^(p−1)(1/2 − z)/(p−1)! = (−1)^p Σ_{k≥0} (k − z)^-p`.
///
/// Away from the poles, the `j`-th Taylor coefficient is
/// `(−1)^p C(p+j−1, j) ζ(p+j; −base)` (with `ζ(1; ·)` regularized). At a
/// pole `n ≥ 0` the result is a Laurent jet of pole order `p` whose
/// regular part has coefficients
/// `(−1)^p C(p+j−1, j) ((−1)^(p+j) H_n^(p+j) + ζ(p+j))`, `ζ(1) = −2 log 2`.
pub fn psi_jet(p: u32, base: &Real, order: usize, prec: u32) -> Result<JetSeries> {
    check_precision(prec)?;
    if p == 0 {
        return Err(domain("psi_jet", "p = 0"));
    }
    let wp = guarded(prec) + 2 * order as u32;
    let sign = if p % 2 == 0 { 1i32 } else { -1 };
    let rounded = Float::with_val(wp, base.round_ref());
    let nonneg_pole = rounded.cmp0() != Some(std::cmp::Ordering::Less);
    if nonneg_pole {
        let dist = Float::with_val(wp, base - &rounded).abs();
        if base.is_integer() {
            return psi_laurent(p, &rounded, order, prec, wp);
        }
        let bits = prec / 2;
        if dist < pow2(wp, -(bits as i32)) {
            return Err(Error::PoleProximity {
                kind: format!("psi_{p}"),
                at: base.to_string_radix(10, Some(20)),
                bits,
            });
        }
    }
    let neg = Float::with_val(wp, -base);
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order as u32 {
        let z = hurwitz_any(p + j, &neg, wp)?;
        let c = z * Float::with_val(wp, binomial(p + j - 1, j)) * sign;
        coeffs.push(Float::with_val(prec, c));
    }
    Ok(JetSeries::taylor(Float::with_val(prec, base), coeffs))
}

fn psi_laurent(p: u32, n: &Float, order: usize, prec: u32, wp: u32) -> Result<JetSeries> {
    let n = n.to_u32_saturating().unwrap_or(0);
    let sign = if p % 2 == 0 { 1i32 } else { -1 };
    let mut coeffs = vec![Float::new(prec); order + 1];
    coeffs[0] = Float::with_val(prec, 1);
    let p_us = p as usize;
    for idx in p_us..=order {
        let j = (idx - p_us) as u32;
        let i = p + j;
        let mut h = Float::new(wp);
        for k in 1..=n {
            h += Float::with_val(wp, Float::with_val(wp, k).pow(i as i32)).recip();
        }
        if i % 2 == 1 {
            h = -h;
        }
        let z = if i == 1 {
            Float::with_val(wp, log2(wp) * -2i32)
        } else {
            riemann_zeta(i, wp)?
        };
        let c = (h + z) * Float::with_val(wp, binomial(i - 1, j)) * sign;
        coeffs[idx] = Float::with_val(prec, c);
    }
    Ok(JetSeries::new(Float::with_val(prec, n), coeffs, p_us))
}
