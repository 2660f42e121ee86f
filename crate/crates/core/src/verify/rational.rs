use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numeric::jet::JetSeries;
use crate::numeric::real::binomial;
use crate::series::PartialFractionTerm;

/// `r(z) = Σ c (z − β)^(-m)`, decaying like `z^-2` and with no pole at
/// `0`, a positive integer or a half-odd integer.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractionRational {
    terms: Vec<PartialFractionTerm>,
}

impl PartialFractionRational {
    /// Merges repeated `(β, m)` pairs, drops zero coefficients and checks
    /// admissibility.
    pub fn new(terms: Vec<PartialFractionTerm>) -> Result<Self> {
        let mut merged: BTreeMap<(Rational, u32), Rational> = BTreeMap::new();
        for t in terms {
            if t.order == 0 {
                return Err(Error::Inadmissible("pole order must be ≥ 1".into()));
            }
            *merged.entry((t.beta, t.order)).or_default() += t.coeff;
        }
        let terms: Vec<_> = merged
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((beta, order), coeff)| PartialFractionTerm { beta, order, coeff })
            .collect();
        if terms.is_empty() {
            return Err(Error::Inadmissible("r is identically zero".into()));
        }
        let residue_sum = terms
            .iter()
            .filter(|t| t.order == 1)
            .fold(Rational::new(), |acc, t| acc + &t.coeff);
        if residue_sum != 0 {
            return Err(Error::Inadmissible(format!(
                "simple-pole coefficients sum to {residue_sum}, so r is not O(z^-2)"
            )));
        }
        let half = Rational::from((1, 2));
        for t in &terms {
            let b = &t.beta;
            if *b == 0 {
                return Err(Error::Inadmissible("pole at 0".into()));
            }
            if b.is_integer() && *b > 0 {
                return Err(Error::Inadmissible(format!("pole at the positive integer {b}")));
            }
            if Rational::from(b + &half).is_integer() {
                return Err(Error::Inadmissible(format!("pole at the half-integer {b}")));
            }
        }
        Ok(Self { terms })
    }

    /// `1/((z + a)(z + b))` for `a ≠ b`.
    pub fn shifted_product(a: &Rational, b: &Rational) -> Result<Self> {
        if a == b {
            return Err(Error::Inadmissible("coincident poles".into()));
        }
        let c = Rational::from(b - a).recip();
        Self::new(vec![
            PartialFractionTerm {
                beta: Rational::from(-a),
                order: 1,
                coeff: c.clone(),
            },
            PartialFractionTerm {
                beta: Rational::from(-b),
                order: 1,
                coeff: -c,
            },
        ])
    }

    pub fn terms(&self) -> &[PartialFractionTerm] {
        &self.terms
    }

    /// Distinct poles with their maximal order, in increasing order.
    pub fn poles(&self) -> Vec<(Rational, u32)> {
        let mut out: Vec<(Rational, u32)> = Vec::new();
        for t in &self.terms {
            match out.last_mut() {
                Some((b, m)) if *b == t.beta => *m = (*m).max(t.order),
                _ => out.push((t.beta.clone(), t.order)),
            }
        }
        out
    }

    pub fn max_order(&self) -> u32 {
        self.terms.iter().map(|t| t.order).max().unwrap_or(0)
    }

    /// Laurent jet of `r` about the pole `beta`, with `pole_order` equal to
    /// the maximal order there and `order + 1` coefficients.
    pub fn laurent_jet(&self, beta: &Rational, order: usize, prec: u32) -> Result<JetSeries> {
        let m = self
            .terms
            .iter()
            .filter(|t| t.beta == *beta)
            .map(|t| t.order as usize)
            .max()
            .ok_or_else(|| Error::Inadmissible(format!("{beta} is not a pole of r")))?;
        if order < m {
            return Err(Error::InsufficientOrder { order, pole_order: m });
        }
        let mut coeffs = vec![Float::new(prec); order + 1];
        for t in &self.terms {
            if t.beta == *beta {
                coeffs[m - t.order as usize] += Float::with_val(prec, &t.coeff);
                continue;
            }
            // c (β − β' + w)^-k = c Σ_j C(k+j−1, j) (−1)^j (β − β')^(−k−j) w^j
            let d = Float::with_val(prec, Rational::from(beta - &t.beta));
            let inv = Float::with_val(prec, d.recip_ref());
            let mut pow = Float::with_val(prec, Float::with_val(prec, &inv).pow(t.order));
            pow *= Float::with_val(prec, &t.coeff);
            for j in 0..=(order - m) {
                let mut c = Float::with_val(prec, &pow * binomial(t.order + j as u32 - 1, j as u32));
                if j % 2 == 1 {
                    c = -c;
                }
                coeffs[m + j] += c;
                pow *= &inv;
            }
        }
        Ok(JetSeries::new(Float::with_val(prec, beta), coeffs, m))
    }

    /// `r(x)` at a point that is not a pole.
    pub fn eval(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::new(prec);
        for t in &self.terms {
            let d = Float::with_val(prec, x - &t.beta);
            let v = Float::with_val(prec, d.pow(t.order)).recip() * &t.coeff;
            acc += v;
        }
        acc
    }
}

impl fmt::Display for PartialFractionRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}/(z-({}))^{}", t.coeff, t.beta, t.order)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(b: (i32, i32), order: u32, c: i32) -> PartialFractionTerm {
        PartialFractionTerm {
            beta: Rational::from(b),
            order,
            coeff: Rational::from(c),
        }
    }

    #[test]
    fn admissibility() {
        assert!(PartialFractionRational::new(vec![term((-1, 4), 2, 1)]).is_ok());
        let not_decaying = PartialFractionRational::new(vec![term((-1, 4), 1, 1)]);
        assert!(matches!(not_decaying, Err(Error::Inadmissible(_))));
        for bad in [(0, 1), (2, 1), (1, 2), (-3, 2)] {
            let r = PartialFractionRational::new(vec![term(bad, 2, 1)]);
            assert!(matches!(r, Err(Error::Inadmissible(_))), "{bad:?}");
        }
        // negative integers are allowed
        assert!(PartialFractionRational::new(vec![term((-2, 1), 3, 1)]).is_ok());
    }

    #[test]
    fn merging_and_cancellation() {
        let r = PartialFractionRational::new(vec![term((-1, 3), 2, 1), term((-1, 3), 2, 2), term((-1, 5), 3, 0)]).unwrap();
        assert_eq!(r.terms().len(), 1);
        assert_eq!(r.terms()[0].coeff, 3);
        assert!(PartialFractionRational::new(vec![term((-1, 3), 2, 1), term((-1, 3), 2, -1)]).is_err());
    }

    #[test]
    fn laurent_jet_reproduces_values() {
        let prec = 128;
        let r = PartialFractionRational::new(vec![
            term((-1, 3), 2, 1),
            term((-1, 3), 1, 1),
            term((-2, 5), 1, -1),
            term((-7, 4), 3, 2),
        ])
        .unwrap();
        let beta = Rational::from((-1, 3));
        let jet = r.laurent_jet(&beta, 24, prec).unwrap();
        assert_eq!(jet.pole_order(), 2);
        let w = Float::with_val(prec, 0.001);
        let mut series = Float::new(prec);
        for (i, c) in jet.coeffs().iter().enumerate() {
            let e = i as i32 - 2;
            series += Float::with_val(prec, (&w).pow(e)) * c;
        }
        let x = Float::with_val(prec, &beta) + &w;
        let exact = r.eval(&x);
        let gap = Float::with_val(prec, &exact - &series).abs().to_f64();
        assert!(gap < 1e-15, "{gap}");
    }

    #[test]
    fn shifted_product_matches() {
        let a = Rational::from((1, 4));
        let b = Rational::from((1, 3));
        let r = PartialFractionRational::shifted_product(&a, &b).unwrap();
        let x = Float::with_val(64, 2.5);
        let expect = 1.0 / ((2.5 + 0.25) * (2.5 + 1.0 / 3.0));
        assert!((r.eval(&x).to_f64() - expect).abs() < 1e-15);
        assert_eq!(r.poles().len(), 2);
    }
}
