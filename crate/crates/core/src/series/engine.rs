//! Summation of `Σ_{n≥1} σ^n Π_i h_{n−δ}^(p_i) W(n)`.
//!
//! The first `N` terms are summed directly in fixed-size chunks. The
//! remainder from `X = N + 1` is obtained from the Taylor jet of the smooth
//! summand at `X`: Euler–Maclaurin plus an asymptotic integral for `σ = +1`,
//! Boole summation for `σ = −1`. The chunk layout and the combine order do
//! not depend on the number of worker threads, so results are bit-identical
//! for any pool size.

use rug::ops::Pow;
use rug::{Float, Rational};
use serde::Serialize;

use super::asymptotic::{harmonic_expansion, weight_expansion};
use super::spec::{SeriesProblem, Sign, SumSpec, Weight};
use crate::error::{Error, Result};
use crate::numeric::bernoulli::float_tables;
use crate::numeric::jet::convolve;
use crate::numeric::real::{binomial, check_precision, pow2, working_precision, Real};
use crate::special::zeta::hurwitz_shifted;

const CHUNK: u64 = 1024;

/// Value of a series with its estimated truncation error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesResult {
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub value: Real,
    #[serde(serialize_with = "crate::numeric::real::serialize_real")]
    pub tail_bound: Real,
    pub terms_used: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOptions {
    pub initial_terms: u64,
    pub max_terms: u64,
    /// Force the single-threaded path even when the `parallel` feature is on.
    pub sequential: bool,
}

impl Default for SumOptions {
    fn default() -> Self {
        Self {
            initial_terms: 1 << 14,
            max_terms: 1 << 22,
            sequential: false,
        }
    }
}

pub fn euler_t_sum(spec: &SumSpec, prec: u32) -> Result<SeriesResult> {
    evaluate(&SeriesProblem::from_spec(spec)?, prec, &SumOptions::default())
}

pub fn euler_t_sum_with(spec: &SumSpec, prec: u32, opts: &SumOptions) -> Result<SeriesResult> {
    evaluate(&SeriesProblem::from_spec(spec)?, prec, opts)
}

/// Accelerated evaluation with the term count doubled until the tail
/// estimate drops below `2^(16−prec)`.
pub fn evaluate(problem: &SeriesProblem, prec: u32, opts: &SumOptions) -> Result<SeriesResult> {
    check_precision(prec)?;
    let target = pow2(64, 16 - prec as i32);
    let mut n = opts.initial_terms.max(min_terms(problem));
    loop {
        let r = evaluate_fixed(problem, prec, n, opts.sequential)?;
        if r.tail_bound <= target {
            return Ok(r);
        }
        n *= 2;
        if n > opts.max_terms {
            return Err(Error::TermBudgetExceeded(opts.max_terms));
        }
    }
}

/// The asymptotic expansions need `X` well beyond every shift parameter.
fn min_terms(problem: &SeriesProblem) -> u64 {
    let largest = match &problem.weight {
        Weight::Product(f) => f.iter().map(|(a, _)| a.clone().abs()).max(),
        Weight::PartialFractions(t) => t.iter().map(|t| t.beta.clone().abs()).max(),
    }
    .unwrap_or_default();
    let bound = (largest * Rational::from(64)).ceil();
    let b = bound.numer().to_u64().unwrap_or(u64::MAX / 4);
    b.next_power_of_two().max(64)
}

/// Direct sum of `terms` terms plus the accelerated remainder.
pub fn evaluate_fixed(problem: &SeriesProblem, prec: u32, terms: u64, sequential: bool) -> Result<SeriesResult> {
    check_precision(prec)?;
    let wp = engine_precision(problem, prec, terms);
    let ctx = Context::new(problem, wp);
    let (head, h_end) = direct_sum(&ctx, terms, sequential);
    let (tail, bound) = accelerated_tail(&ctx, terms + 1, &h_end)?;
    Ok(SeriesResult {
        value: Float::with_val(prec, head + tail),
        tail_bound: Float::with_val(64, bound),
        terms_used: terms,
    })
}

/// Plain partial sum of `terms` terms, with a heuristic remainder bound:
/// `2N|f(N)| (1/(Q−1) + 1/((Q−1)² log N))` for `σ = +1` (`Q` the weight's
/// decay order) and the first omitted term for `σ = −1`.
pub fn naive_sum(problem: &SeriesProblem, prec: u32, terms: u64) -> Result<SeriesResult> {
    check_precision(prec)?;
    let wp = engine_precision(problem, prec, terms);
    let ctx = Context::new(problem, wp);
    let (head, h_end) = direct_sum(&ctx, terms, false);
    let bound = match problem.sigma {
        Sign::Minus => {
            let mut h = h_end.clone();
            let next = ctx.term_with_update(terms + 1, &mut h);
            Float::with_val(64, next.abs_ref())
        }
        Sign::Plus => {
            let mut h = ctx.h_before(terms, &h_end);
            let last = ctx.term_with_update(terms, &mut h);
            let q = f64::from(ctx.decay_order() - 1);
            let n = terms as f64;
            let factor = 2.0 * n * (1.0 / q + 1.0 / (q * q * n.ln()));
            Float::with_val(64, last.abs_ref()) * factor
        }
    };
    Ok(SeriesResult {
        value: Float::with_val(prec, head),
        tail_bound: bound,
        terms_used: terms,
    })
}

fn engine_precision(problem: &SeriesProblem, prec: u32, terms: u64) -> u32 {
    let extra = match problem.weight {
        // cancellation between partial-fraction terms at large n
        Weight::PartialFractions(_) => 24,
        Weight::Product(_) => 0,
    };
    working_precision(prec, terms) + extra
}

struct Context<'a> {
    problem: &'a SeriesProblem,
    wp: u32,
    /// distinct harmonic orders, ascending
    orders: Vec<u32>,
    /// multiplicity of each order in the product
    mult: Vec<u32>,
    shifts: Vec<Float>,
}

impl<'a> Context<'a> {
    fn new(problem: &'a SeriesProblem, wp: u32) -> Self {
        let mut orders: Vec<u32> = Vec::new();
        let mut mult: Vec<u32> = Vec::new();
        for &p in &problem.p {
            if orders.last() == Some(&p) {
                *mult.last_mut().unwrap() += 1;
            } else {
                orders.push(p);
                mult.push(1);
            }
        }
        let shifts = match &problem.weight {
            Weight::Product(f) => f.iter().map(|(a, _)| Float::with_val(wp, a)).collect(),
            Weight::PartialFractions(t) => t.iter().map(|t| Float::with_val(wp, &t.beta)).collect(),
        };
        Self {
            problem,
            wp,
            orders,
            mult,
            shifts,
        }
    }

    fn decay_order(&self) -> u32 {
        match &self.problem.weight {
            Weight::Product(f) => f.iter().map(|(_, q)| q).sum(),
            Weight::PartialFractions(t) => {
                // the 1/n terms cancel for convergent plain sums
                let has_simple = t.iter().any(|t| t.order == 1);
                if has_simple && self.problem.sigma == Sign::Plus {
                    2
                } else {
                    t.iter().map(|t| t.order).min().unwrap_or(1)
                }
            }
        }
    }

    /// `(n − 1/2)^-p` for every distinct order.
    fn increments(&self, n: u64) -> Vec<Float> {
        let x = Float::with_val(self.wp, n) - 0.5f64;
        let inv = Float::with_val(self.wp, x.recip_ref());
        self.orders
            .iter()
            .map(|&p| Float::with_val(self.wp, (&inv).pow(p)))
            .collect()
    }

    fn weight(&self, n: u64) -> Float {
        let wp = self.wp;
        match &self.problem.weight {
            Weight::Product(f) => {
                let mut acc = Float::with_val(wp, 1);
                for ((_, q), shift) in f.iter().zip(&self.shifts) {
                    let x = Float::with_val(wp, shift + n);
                    acc /= Float::with_val(wp, (&x).pow(*q));
                }
                acc
            }
            Weight::PartialFractions(t) => {
                let mut acc = Float::new(wp);
                for (term, beta) in t.iter().zip(&self.shifts) {
                    let x = Float::with_val(wp, n - beta);
                    let v = Float::with_val(wp, (&x).pow(term.order)).recip();
                    acc += v * Float::with_val(wp, &term.coeff);
                }
                acc
            }
        }
    }

    /// Term `n`, given `h` holding `h_{n−1}` per order; advances `h` to `h_n`.
    fn term_with_update(&self, n: u64, h: &mut [Float]) -> Float {
        let inc = self.increments(n);
        let previous = self.problem.offset.delta() == 1;
        let mut prod = self.weight(n);
        for ((hi, d), m) in h.iter_mut().zip(&inc).zip(&self.mult) {
            if !previous {
                *hi += d;
            }
            for _ in 0..*m {
                prod *= &*hi;
            }
            if previous {
                *hi += d;
            }
        }
        if self.problem.sigma == Sign::Minus && n % 2 == 1 {
            prod = -prod;
        }
        prod
    }

    /// `h_{n−1}` from `h_n`.
    fn h_before(&self, n: u64, h_n: &[Float]) -> Vec<Float> {
        let inc = self.increments(n);
        h_n.iter().zip(&inc).map(|(h, d)| Float::with_val(self.wp, h - d)).collect()
    }
}

fn map_chunks<T, F>(count: u64, sequential: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !sequential {
        use rayon::prelude::*;
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = sequential;
    (0..count).map(f).collect()
}

/// Sum of terms `1..=terms`, and `h_terms` for every distinct order.
fn direct_sum(ctx: &Context<'_>, terms: u64, sequential: bool) -> (Float, Vec<Float>) {
    let wp = ctx.wp;
    let chunks = terms.div_ceil(CHUNK);
    let range = |c: u64| (c * CHUNK + 1, ((c + 1) * CHUNK).min(terms));
    // pass 1: harmonic increments per chunk
    let partial: Vec<Vec<Float>> = map_chunks(chunks, sequential, |c| {
        let (lo, hi) = range(c);
        let mut acc = vec![Float::new(wp); ctx.orders.len()];
        for n in lo..=hi {
            for (a, d) in acc.iter_mut().zip(ctx.increments(n)) {
                *a += d;
            }
        }
        acc
    });
    // pass 2: prefix sums give h at each chunk start
    let mut starts = Vec::with_capacity(chunks as usize);
    let mut running = vec![Float::new(wp); ctx.orders.len()];
    for p in &partial {
        starts.push(running.clone());
        for (r, d) in running.iter_mut().zip(p) {
            *r += d;
        }
    }
    // pass 3: chunk sums of the terms
    let sums: Vec<Float> = map_chunks(chunks, sequential, |c| {
        let (lo, hi) = range(c);
        let mut h = starts[c as usize].clone();
        let mut acc = Float::new(wp);
        for n in lo..=hi {
            acc += ctx.term_with_update(n, &mut h);
        }
        acc
    });
    // pass 4: fixed-order combine
    let mut total = Float::new(wp);
    for s in &sums {
        total += s;
    }
    (total, running)
}

/// Jet order for the tail at `X`: enough for `X^-K` to pass `2^-wp`.
fn tail_order(wp: u32, x: u64) -> usize {
    let lx = (x as f64).log2().max(4.0);
    (wp as f64 / lx).ceil() as usize + 4
}

fn accelerated_tail(ctx: &Context<'_>, x: u64, h_end: &[Float]) -> Result<(Float, Float)> {
    let wp = ctx.wp;
    let k = tail_order(wp, x);
    let problem = ctx.problem;
    let delta = problem.offset.delta();
    let xf = Float::with_val(wp, x);

    // harmonic jets at y0 = X − δ
    let y0 = x - delta;
    let inc = ctx.increments(x);
    let mut jet = weight_jet(ctx, &xf, k);
    for (idx, &p) in ctx.orders.iter().enumerate() {
        let c0 = if delta == 0 {
            Float::with_val(wp, &h_end[idx] + &inc[idx])
        } else {
            h_end[idx].clone()
        };
        let arg = Float::with_val(wp, y0) + 0.5f64;
        let mut hj = vec![c0];
        for d in 1..=k as u32 {
            let z = hurwitz_shifted(p + d, &arg, wp)?;
            let mut c = z * Float::with_val(wp, binomial(p + d - 1, d));
            if d % 2 == 0 {
                c = -c;
            }
            hj.push(c);
        }
        for _ in 0..ctx.mult[idx] {
            jet = convolve(&jet, &hj, k + 1, wp);
        }
    }

    match problem.sigma {
        Sign::Minus => {
            let tables = float_tables(wp, 0, k);
            let mut tail = Float::new(wp);
            let mut last = Float::new(wp);
            for (d, c) in jet.iter().enumerate() {
                let t = Float::with_val(wp, c * &tables.boole_scaled[d]);
                if !t.is_zero() {
                    last = Float::with_val(wp, t.abs_ref());
                }
                tail += t;
            }
            if x % 2 == 1 {
                tail = -tail;
            }
            Ok((tail, last))
        }
        Sign::Plus => {
            let j_max = k + 4;
            let mut series = weight_expansion(&problem.weight, j_max, wp);
            for (idx, &p) in ctx.orders.iter().enumerate() {
                let h = harmonic_expansion(p, problem.offset, j_max, wp)?;
                for _ in 0..ctx.mult[idx] {
                    series = series.mul(&h, wp);
                }
            }
            let (integral, int_last) = series.integral_from(&xf, wp);
            let tables = float_tables(wp, k / 2 + 1, 0);
            let mut tail = integral + Float::with_val(wp, &jet[0] >> 1u32);
            let mut last = Float::new(wp);
            let mut i = 1;
            while 2 * i - 1 <= k {
                let t = Float::with_val(wp, &jet[2 * i - 1] * &tables.em_over_2k[i - 1]);
                last = Float::with_val(wp, t.abs_ref());
                tail -= t;
                i += 1;
            }
            Ok((tail, last + int_last))
        }
    }
}

/// Taylor jet of the weight at `X`.
fn weight_jet(ctx: &Context<'_>, x: &Float, k: usize) -> Vec<Float> {
    let wp = ctx.wp;
    match &ctx.problem.weight {
        Weight::Product(f) => {
            let mut jet = vec![Float::new(wp); k + 1];
            jet[0] = Float::with_val(wp, 1);
            for ((_, q), shift) in f.iter().zip(&ctx.shifts) {
                // (x + α)^-q: (−1)^d C(q+d−1, d) (X + α)^(-q-d)
                let base = Float::with_val(wp, x + shift);
                let inv = Float::with_val(wp, base.recip_ref());
                let mut pw = Float::with_val(wp, (&inv).pow(*q));
                let mut fj = Vec::with_capacity(k + 1);
                for d in 0..=k as u32 {
                    let mut c = Float::with_val(wp, &pw * Float::with_val(wp, binomial(q + d - 1, d)));
                    if d % 2 == 1 {
                        c = -c;
                    }
                    fj.push(c);
                    pw *= &inv;
                }
                jet = convolve(&jet, &fj, k + 1, wp);
            }
            jet
        }
        Weight::PartialFractions(t) => {
            let mut jet = vec![Float::new(wp); k + 1];
            for (term, beta) in t.iter().zip(&ctx.shifts) {
                let base = Float::with_val(wp, x - beta);
                let inv = Float::with_val(wp, base.recip_ref());
                let mut pw = Float::with_val(wp, (&inv).pow(term.order)) * Float::with_val(wp, &term.coeff);
                for (d, slot) in jet.iter_mut().enumerate() {
                    let d = d as u32;
                    let mut c = Float::with_val(wp, &pw * Float::with_val(wp, binomial(term.order + d - 1, d)));
                    if d % 2 == 1 {
                        c = -c;
                    }
                    *slot += c;
                    pw *= &inv;
                }
            }
            jet
        }
    }
}
