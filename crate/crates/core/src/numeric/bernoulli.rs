//! Exact Bernoulli numbers and the derived coefficient tables used by the
//! Euler–Maclaurin and Boole tail formulas.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::{Float, Integer, Rational};

use super::real::binomial;

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::from(1)]))
}

/// Exact Bernoulli number `B_n` with `B_1 = -1/2`, memoized.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = table().read().unwrap().get(n) {
        return b.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= n {
        let m = t.len();
        if m > 1 && m % 2 == 1 {
            t.push(Rational::new());
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rational::new();
        for (j, bj) in t.iter().enumerate() {
            if bj.cmp0().is_eq() {
                continue;
            }
            acc += Rational::from(binomial(m as u32 + 1, j as u32)) * bj;
        }
        let bm = -acc / Integer::from(m + 1);
        t.push(bm);
    }
    t[n].clone()
}

/// Bernoulli polynomial value `B_n(1/2) = (2^(1-n) - 1) B_n`.
pub fn bernoulli_half(n: usize) -> Rational {
    let two_pow = Rational::from((Integer::from(1), Integer::from(1) << (n as u32)));
    let factor = two_pow * 2u32 - 1u32;
    factor * bernoulli(n)
}

/// Taylor coefficients `b_d` of `1 / (1 + e^t)`, exact and memoized.
pub fn boole_coefficient(d: usize) -> Rational {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    let tbl = TABLE.get_or_init(|| RwLock::new(vec![Rational::from((1, 2))]));
    if let Some(b) = tbl.read().unwrap().get(d) {
        return b.clone();
    }
    let mut t = tbl.write().unwrap();
    while t.len() <= d {
        let n = t.len();
        // (1 + e^t) B(t) = 1  =>  2 b_n + sum_{i=1}^{n} b_{n-i} / i! = 0
        let mut acc = Rational::new();
        let mut fact = Integer::from(1);
        for i in 1..=n {
            fact *= i as u32;
            acc += Rational::from(&t[n - i] / Rational::from(&fact));
        }
        t.push(-acc / 2u32);
    }
    t[d].clone()
}

/// Floating tables at one precision: `B_{2k} / (2k)` and `B_{2k} / (2k)!`
/// for `k = 1..`, plus `d! b_d` for the Boole tail.
#[derive(Debug)]
pub(crate) struct FloatTables {
    pub em_over_2k: Vec<Float>,
    pub em_over_fact: Vec<Float>,
    pub boole_scaled: Vec<Float>,
}

fn float_cache() -> &'static RwLock<HashMap<u32, Arc<FloatTables>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FloatTables>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Tables holding at least `k_max` Euler–Maclaurin entries and `d_max`
/// Boole entries at precision `prec`.
pub(crate) fn float_tables(prec: u32, k_max: usize, d_max: usize) -> Arc<FloatTables> {
    if let Some(t) = float_cache().read().unwrap().get(&prec) {
        if t.em_over_2k.len() >= k_max && t.boole_scaled.len() > d_max {
            return t.clone();
        }
    }
    let k_max = k_max.max(64);
    let d_max = d_max.max(64);
    let mut em_over_2k = Vec::with_capacity(k_max);
    let mut em_over_fact = Vec::with_capacity(k_max);
    let mut fact = Integer::from(1);
    for k in 1..=k_max {
        let b = bernoulli(2 * k);
        fact *= (2 * k - 1) as u32;
        fact *= (2 * k) as u32;
        em_over_2k.push(Float::with_val(prec, &b / Rational::from(2 * k as u32)));
        em_over_fact.push(Float::with_val(prec, &b / Rational::from(&fact)));
    }
    let mut boole_scaled = Vec::with_capacity(d_max + 1);
    let mut fact = Integer::from(1);
    for d in 0..=d_max {
        if d > 0 {
            fact *= d as u32;
        }
        boole_scaled.push(Float::with_val(prec, boole_coefficient(d) * &fact));
    }
    let t = Arc::new(FloatTables {
        em_over_2k,
        em_over_fact,
        boole_scaled,
    });
    float_cache().write().unwrap().insert(prec, t.clone());
    t
}
