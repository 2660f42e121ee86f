//! Large-`x` expansions of the smooth summand in powers of `u = 1/x` and
//! `L = log x`, used for the integral term of the Euler–Maclaurin tail.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::spec::{HarmonicOffset, Weight};
use crate::error::Result;
use crate::numeric::bernoulli::bernoulli_half;
use crate::numeric::real::binomial;
use crate::special::tvalues::ttilde;
use crate::special::zeta::digamma_shifted;

/// `Σ_{e,j} coeffs[e][j] L^e u^j`, truncated at `u^j_max`.
#[derive(Debug, Clone)]
pub(crate) struct LogSeries {
    pub coeffs: Vec<Vec<Float>>,
}

impl LogSeries {
    fn zero(e_max: usize, j_max: usize, prec: u32) -> Self {
        Self {
            coeffs: vec![vec![Float::new(prec); j_max + 1]; e_max + 1],
        }
    }

    fn j_max(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn from_rationals(row: &[Rational], prec: u32) -> Self {
        Self {
            coeffs: vec![row.iter().map(|r| Float::with_val(prec, r)).collect()],
        }
    }

    pub fn mul(&self, other: &LogSeries, prec: u32) -> LogSeries {
        let j_max = self.j_max().min(other.j_max());
        let e_max = self.coeffs.len() + other.coeffs.len() - 2;
        let mut out = LogSeries::zero(e_max, j_max, prec);
        for (e1, r1) in self.coeffs.iter().enumerate() {
            for (e2, r2) in other.coeffs.iter().enumerate() {
                for (j1, c1) in r1.iter().enumerate().take(j_max + 1) {
                    if c1.is_zero() {
                        continue;
                    }
                    for j2 in 0..=(j_max - j1) {
                        if r2[j2].is_zero() {
                            continue;
                        }
                        out.coeffs[e1 + e2][j1 + j2] += Float::with_val(prec, c1 * &r2[j2]);
                    }
                }
            }
        }
        out
    }

    /// `∫_X^∞` of the series, term by term, together with the magnitude of
    /// the contribution from the highest retained power (a truncation
    /// estimate). Powers `u^0` and `u^1` must vanish.
    pub fn integral_from(&self, x: &Float, prec: u32) -> (Float, Float) {
        let ln_x = Float::with_val(prec, x.ln_ref());
        let x_inv = Float::with_val(prec, x.recip_ref());
        let j_max = self.j_max();
        let mut total = Float::new(prec);
        let mut last = Float::new(prec);
        // X^(1−j), built incrementally from j = 2
        let mut x_pow = x_inv.clone();
        for j in 2..=j_max {
            let s = (j - 1) as u32;
            let mut column = Float::new(prec);
            for (e, row) in self.coeffs.iter().enumerate() {
                let c = &row[j];
                if c.is_zero() {
                    continue;
                }
                // ∫ L^e x^-j = X^(1−j) Σ_i e!/(e−i)! L^(e−i) / s^(i+1)
                let mut inner = Float::new(prec);
                let mut falling = Integer::from(1);
                for i in 0..=e {
                    if i > 0 {
                        falling *= (e - i + 1) as u32;
                    }
                    let lp = Float::with_val(prec, (&ln_x).pow((e - i) as u32));
                    let denom = Integer::from(s).pow((i + 1) as u32);
                    inner += lp * Float::with_val(prec, Rational::from((falling.clone(), denom)));
                }
                column += inner * c;
            }
            column *= &x_pow;
            if j == j_max {
                last = Float::with_val(prec, column.abs_ref());
            }
            total += &column;
            x_pow *= &x_inv;
        }
        (total, last)
    }
}

/// Expansion of the smooth interpolant `h_{x−δ}^(p)` for large `x`.
pub(crate) fn harmonic_expansion(p: u32, offset: HarmonicOffset, j_max: usize, prec: u32) -> Result<LogSeries> {
    let mut row = vec![Rational::new(); j_max + 1];
    let mut series = if p == 1 {
        // h_x = ψ(x + 1/2) − ψ(1/2) ~ L − ψ(1/2) − Σ_{k even} B_k(1/2)/k u^k
        for k in (2..=j_max).step_by(2) {
            row[k] -= bernoulli_half(k) / Rational::from(k as u32);
        }
        let mut s = LogSeries::zero(1, j_max, prec);
        for (j, r) in row.iter().enumerate() {
            s.coeffs[0][j] = Float::with_val(prec, r);
        }
        s.coeffs[1][0] = Float::with_val(prec, 1);
        let psi_half = digamma_shifted(&Float::with_val(prec, 0.5), prec)?;
        s.coeffs[0][0] = -psi_half;
        s
    } else {
        // h_x = t̃(p) − ζ(p; x + 1/2)
        // ζ(p; x + 1/2) ~ u^(p−1)/(p−1) + Σ_{k even} B_k(1/2) (p)_{k−1}/k! u^(p−1+k)
        let base = (p - 1) as usize;
        if base <= j_max {
            row[base] -= Rational::from((1, p - 1));
        }
        let mut rising = Integer::from(p); // (p)_{k−1}, starting at k = 2
        let mut fact = Integer::from(2); // k!
        let mut k = 2usize;
        while base + k <= j_max {
            let c = bernoulli_half(k) * Rational::from((rising.clone(), fact.clone()));
            row[base + k] -= c;
            rising *= p + k as u32 - 1;
            rising *= p + k as u32;
            fact *= (k + 1) as u32;
            fact *= (k + 2) as u32;
            k += 2;
        }
        let mut s = LogSeries::from_rationals(&row, prec);
        s.coeffs[0][0] = ttilde(p, prec)?;
        s
    };
    if offset == HarmonicOffset::Previous {
        // h_{x−1} = h_x − (x − 1/2)^-p,  (x − 1/2)^-p = u^p Σ C(p+i−1, i) 2^-i u^i
        for i in 0..=j_max {
            let j = p as usize + i;
            if j > j_max {
                break;
            }
            let c = Rational::from(binomial(p + i as u32 - 1, i as u32)) >> i as u32;
            series.coeffs[0][j] -= Float::with_val(prec, &c);
        }
    }
    Ok(series)
}

/// Expansion of the weight `W(x)` in powers of `u`, exact before rounding.
pub(crate) fn weight_expansion(weight: &Weight, j_max: usize, prec: u32) -> LogSeries {
    let mut row = vec![Rational::new(); j_max + 1];
    match weight {
        Weight::Product(factors) => {
            row[0] = Rational::from(1);
            for (alpha, q) in factors {
                // (x + α)^-q = u^q Σ (−1)^i C(q+i−1, i) α^i u^i
                let mut f = vec![Rational::new(); j_max + 1];
                let mut alpha_pow = Rational::from(1);
                for i in 0..=j_max {
                    let j = *q as usize + i;
                    if j > j_max {
                        break;
                    }
                    let mut c = Rational::from(binomial(q + i as u32 - 1, i as u32)) * &alpha_pow;
                    if i % 2 == 1 {
                        c = -c;
                    }
                    f[j] = c;
                    alpha_pow *= alpha;
                }
                let mut next = vec![Rational::new(); j_max + 1];
                for (j1, c1) in row.iter().enumerate() {
                    if *c1 == 0 {
                        continue;
                    }
                    for j2 in 0..=(j_max - j1) {
                        if f[j2] != 0 {
                            next[j1 + j2] += Rational::from(c1 * &f[j2]);
                        }
                    }
                }
                row = next;
            }
        }
        Weight::PartialFractions(terms) => {
            for t in terms {
                // c (x − β)^-m = c u^m Σ C(m+i−1, i) β^i u^i
                let mut beta_pow = Rational::from(1);
                for i in 0..=j_max {
                    let j = t.order as usize + i;
                    if j > j_max {
                        break;
                    }
                    let c = Rational::from(binomial(t.order + i as u32 - 1, i as u32)) * &beta_pow;
                    row[j] += c * &t.coeff;
                    beta_pow *= &t.beta;
                }
            }
        }
    }
    LogSeries::from_rationals(&row, prec)
}
