//! Truncated Taylor/Laurent expansions ("jets") about a base point.
//!
//! A jet with `pole_order = m` and coefficients `c_0..c_K` represents
//!
//! ```text
//!     sum_{i=0}^{K} c_i (z - base)^(i - m)
//! ```
//!
//! so `c_0` is the leading singular coefficient when `m > 0`, and the
//! residue is `c_{m-1}`. Plain Taylor jets have `m = 0`.

use rug::Float;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct JetSeries {
    base: Float,
    coeffs: Vec<Float>,
    pole_order: usize,
}

impl JetSeries {
    pub fn new(base: Float, coeffs: Vec<Float>, pole_order: usize) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Self {
            base,
            coeffs,
            pole_order,
        }
    }

    pub fn taylor(base: Float, coeffs: Vec<Float>) -> Self {
        Self::new(base, coeffs, 0)
    }

    pub fn constant(base: Float, value: Float, order: usize) -> Self {
        let prec = value.prec();
        let mut coeffs = vec![Float::new(prec); order + 1];
        coeffs[0] = value;
        Self::taylor(base, coeffs)
    }

    /// The identity function `z` expanded about `base`.
    pub fn variable(base: Float, order: usize, prec: u32) -> Self {
        let mut coeffs = vec![Float::new(prec); order + 1];
        coeffs[0] = Float::with_val(prec, &base);
        if order >= 1 {
            coeffs[1] = Float::with_val(prec, 1);
        }
        Self::taylor(base, coeffs)
    }

    /// `(z - base)^(-m)` exactly.
    pub fn pure_pole(base: Float, m: usize, order: usize, prec: u32) -> Self {
        let mut coeffs = vec![Float::new(prec); order + 1];
        coeffs[0] = Float::with_val(prec, 1);
        Self::new(base, coeffs, m)
    }

    pub fn base(&self) -> &Float {
        &self.base
    }

    pub fn coeffs(&self) -> &[Float] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Float> {
        self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn prec(&self) -> u32 {
        self.coeffs[0].prec()
    }

    /// Coefficient of `(z - base)^power`, if it is inside the known range.
    pub fn coeff_of_power(&self, power: i64) -> Option<&Float> {
        let idx = power + self.pole_order as i64;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize)
    }

    fn check_compatible(&self, other: &JetSeries) -> Result<()> {
        if self.base != other.base {
            return Err(Error::JetMismatch(format!(
                "base points {} and {} differ",
                self.base, other.base
            )));
        }
        if self.order() != other.order() {
            return Err(Error::JetMismatch(format!(
                "orders {} and {} differ",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn scale(&self, factor: &Float) -> JetSeries {
        let prec = self.prec();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Float::with_val(prec, c * factor))
            .collect();
        JetSeries::new(self.base.clone(), coeffs, self.pole_order)
    }

    /// Derivative of the represented (Taylor) function, one order shorter.
    pub fn derivative(&self) -> Result<JetSeries> {
        if self.pole_order != 0 {
            return Err(Error::JetMismatch("derivative of a Laurent jet".into()));
        }
        let prec = self.prec();
        let coeffs: Vec<Float> = if self.order() == 0 {
            vec![Float::new(prec)]
        } else {
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| Float::with_val(prec, c * (i as u32 + 1)))
                .collect()
        };
        Ok(JetSeries::taylor(self.base.clone(), coeffs))
    }
}

/// Sum of two jets. Pole orders may differ; the result carries the larger
/// one and keeps only the coefficients known for both operands.
pub fn jet_add(a: &JetSeries, b: &JetSeries) -> Result<JetSeries> {
    a.check_compatible(b)?;
    let prec = a.prec().max(b.prec());
    let m = a.pole_order.max(b.pole_order);
    let shift_a = m - a.pole_order;
    let shift_b = m - b.pole_order;
    let len = a.coeffs.len();
    let coeffs = (0..len)
        .map(|i| {
            let mut c = Float::new(prec);
            if i >= shift_a {
                c += &a.coeffs[i - shift_a];
            }
            if i >= shift_b {
                c += &b.coeffs[i - shift_b];
            }
            c
        })
        .collect();
    Ok(JetSeries::new(a.base.clone(), coeffs, m))
}

/// Truncated product. Pole orders add.
pub fn jet_mul(a: &JetSeries, b: &JetSeries) -> Result<JetSeries> {
    a.check_compatible(b)?;
    let prec = a.prec().max(b.prec());
    let coeffs = convolve(&a.coeffs, &b.coeffs, a.coeffs.len(), prec);
    Ok(JetSeries::new(
        a.base.clone(),
        coeffs,
        a.pole_order + b.pole_order,
    ))
}

/// Reciprocal of a Taylor jet with nonzero constant term.
pub fn jet_recip(a: &JetSeries) -> Result<JetSeries> {
    if a.pole_order != 0 {
        return Err(Error::JetMismatch("reciprocal of a Laurent jet".into()));
    }
    if a.coeffs[0].is_zero() {
        return Err(Error::JetNotInvertible);
    }
    let coeffs = recip_coeffs(&a.coeffs, a.prec());
    Ok(JetSeries::taylor(a.base.clone(), coeffs))
}

/// Residue of a Laurent jet: the coefficient of `(z - base)^(-1)`.
pub fn jet_residue(f: &JetSeries) -> Result<Float> {
    let m = f.pole_order;
    if m == 0 {
        return Ok(Float::new(f.prec()));
    }
    if f.order() < m - 1 {
        return Err(Error::InsufficientOrder {
            order: f.order(),
            pole_order: m,
        });
    }
    Ok(f.coeffs[m - 1].clone())
}

pub(crate) fn convolve(a: &[Float], b: &[Float], len: usize, prec: u32) -> Vec<Float> {
    (0..len)
        .map(|k| {
            let mut acc = Float::new(prec);
            for i in 0..=k.min(a.len() - 1) {
                if k - i < b.len() {
                    acc += Float::with_val(prec, &a[i] * &b[k - i]);
                }
            }
            acc
        })
        .collect()
}

pub(crate) fn recip_coeffs(a: &[Float], prec: u32) -> Vec<Float> {
    let mut out: Vec<Float> = Vec::with_capacity(a.len());
    let inv0 = Float::with_val(prec, a[0].recip_ref());
    out.push(inv0.clone());
    for k in 1..a.len() {
        let mut acc = Float::new(prec);
        for i in 1..=k {
            acc += Float::with_val(prec, &a[i] * &out[k - i]);
        }
        out.push(-acc * &inv0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet(vals: &[f64]) -> JetSeries {
        JetSeries::taylor(
            Float::new(64),
            vals.iter().map(|&v| Float::with_val(64, v)).collect(),
        )
    }

    fn as_f64(j: &JetSeries) -> Vec<f64> {
        j.coeffs().iter().map(|c| c.to_f64()).collect()
    }

    #[test]
    fn product_of_conjugates() {
        let p = jet_mul(&jet(&[1.0, 1.0, 0.0]), &jet(&[1.0, -1.0, 0.0])).unwrap();
        assert_eq!(as_f64(&p), vec![1.0, 0.0, -1.0]);
    }

    #[test]
    fn geometric_reciprocal() {
        let r = jet_recip(&jet(&[1.0, 1.0, 0.0, 0.0])).unwrap();
        assert_eq!(as_f64(&r), vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn exp_like_convolution() {
        // e^x * e^x = e^{2x}: coefficients 2^k / k!
        let mut fact = 1.0;
        let mut c = Vec::new();
        for k in 0..=5 {
            if k > 0 {
                fact *= k as f64;
            }
            c.push(1.0 / fact);
        }
        let e = jet(&c);
        let sq = jet_mul(&e, &e).unwrap();
        let mut fact = 1.0;
        for (k, v) in as_f64(&sq).into_iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((v - 2f64.powi(k as i32) / fact).abs() < 1e-15);
        }
    }

    #[test]
    fn residues() {
        let simple = JetSeries::new(
            Float::new(64),
            vec![Float::with_val(64, 5), Float::with_val(64, 1)],
            1,
        );
        assert_eq!(jet_residue(&simple).unwrap(), 5);
        let double = JetSeries::new(
            Float::new(64),
            vec![Float::with_val(64, 3), Float::with_val(64, 7)],
            2,
        );
        assert_eq!(jet_residue(&double).unwrap(), 7);
        let short = JetSeries::new(Float::new(64), vec![Float::with_val(64, 3)], 3);
        assert!(matches!(
            jet_residue(&short),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn residue_of_partial_fraction_pair() {
        // 1/(z(z-1)) at 0: (1/z) * (-(1 + z + z^2 + ...)) -> residue -1
        let base = Float::new(64);
        let pole = JetSeries::pure_pole(base.clone(), 1, 3, 64);
        let z_minus_1 = JetSeries::taylor(
            base,
            vec![
                Float::with_val(64, -1),
                Float::with_val(64, 1),
                Float::new(64),
                Float::new(64),
            ],
        );
        let f = jet_mul(&pole, &jet_recip(&z_minus_1).unwrap()).unwrap();
        assert_eq!(jet_residue(&f).unwrap(), -1);
    }

    #[test]
    fn mismatches_rejected() {
        let a = jet(&[1.0, 2.0]);
        let b = jet(&[1.0, 2.0, 3.0]);
        assert!(matches!(jet_mul(&a, &b), Err(Error::JetMismatch(_))));
        let c = JetSeries::taylor(Float::with_val(64, 1), vec![Float::new(64); 2]);
        assert!(matches!(jet_add(&a, &c), Err(Error::JetMismatch(_))));
        assert!(matches!(
            jet_recip(&jet(&[0.0, 1.0])),
            Err(Error::JetNotInvertible)
        ));
    }

    #[test]
    fn add_aligns_pole_orders() {
        let base = Float::new(64);
        let pole = JetSeries::pure_pole(base.clone(), 1, 2, 64);
        let one = JetSeries::constant(base, Float::with_val(64, 1), 2);
        let s = jet_add(&pole, &one).unwrap();
        assert_eq!(s.pole_order(), 1);
        assert_eq!(as_f64(&s), vec![1.0, 1.0, 0.0]);
    }
}
