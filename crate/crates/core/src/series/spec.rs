use std::fmt;

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sign pattern of the summand: `+1` for plain sums, `−1` for `(−1)^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Which harmonic number multiplies the `n`-th term: `h_n` or `h_{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HarmonicOffset {
    Current,
    Previous,
}

impl HarmonicOffset {
    pub(crate) fn delta(self) -> u64 {
        match self {
            HarmonicOffset::Current => 0,
            HarmonicOffset::Previous => 1,
        }
    }
}

/// `Σ_{n≥1} σ^n Π_i h_{n−δ}^(p_i) / Π_j (n + a_j − 1/2)^(q_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SumSpec {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    pub a: Vec<Rational>,
    pub sigma: Sign,
    pub offset: HarmonicOffset,
}

impl SumSpec {
    pub fn new(p: Vec<u32>, q: Vec<u32>, a: Vec<Rational>, sigma: Sign, offset: HarmonicOffset) -> Self {
        Self {
            p,
            q,
            a,
            sigma,
            offset,
        }
    }

    /// Validated form: `p` sorted, `q_j = 0` factors dropped.
    pub fn normalized(&self) -> Result<SumSpec> {
        if self.q.len() != self.a.len() {
            return Err(Error::Config(format!(
                "{} exponents q but {} shifts a",
                self.q.len(),
                self.a.len()
            )));
        }
        if let Some(&bad) = self.p.iter().find(|&&p| p == 0) {
            return Err(Error::Config(format!("harmonic order p = {bad} must be ≥ 1")));
        }
        let mut p = self.p.clone();
        p.sort_unstable();
        let mut q = Vec::new();
        let mut a = Vec::new();
        for (qi, ai) in self.q.iter().zip(&self.a) {
            if *qi == 0 {
                continue;
            }
            let shift = Rational::from(ai - Rational::from((1, 2)));
            if shift.is_integer() && shift < 0 {
                return Err(Error::Singular(format!(
                    "a = {ai} puts a zero of the denominator at n = {}",
                    -shift
                )));
            }
            q.push(*qi);
            a.push(ai.clone());
        }
        let total: u32 = q.iter().sum();
        let needed = match self.sigma {
            Sign::Plus => 2,
            Sign::Minus => 1,
        };
        if total < needed {
            return Err(Error::Divergent(format!(
                "total denominator degree {total} < {needed} for sign {}",
                self.sigma.as_i32()
            )));
        }
        Ok(SumSpec {
            p,
            q,
            a,
            sigma: self.sigma,
            offset: self.offset,
        })
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.p.iter().map(|x| x.to_string()).collect();
        let q: Vec<String> = self.q.iter().map(|x| x.to_string()).collect();
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "p=({}) q=({}) a=({}) sigma={} offset={}",
            p.join(","),
            q.join(","),
            a.join(","),
            self.sigma.as_i32(),
            match self.offset {
                HarmonicOffset::Current => "n",
                HarmonicOffset::Previous => "n-1",
            }
        )
    }
}

/// Weight `W(n)` multiplying the harmonic product.
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    /// `Π (n + α_j)^(-q_j)`.
    Product(Vec<(Rational, u32)>),
    /// `Σ c (n − β)^(-m)`.
    PartialFractions(Vec<PartialFractionTerm>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractionTerm {
    pub beta: Rational,
    pub order: u32,
    pub coeff: Rational,
}

/// General summation problem `Σ_{n≥1} σ^n Π_i h_{n−δ}^(p_i) W(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesProblem {
    pub p: Vec<u32>,
    pub sigma: Sign,
    pub offset: HarmonicOffset,
    pub weight: Weight,
}

impl SeriesProblem {
    pub fn from_spec(spec: &SumSpec) -> Result<Self> {
        let s = spec.normalized()?;
        let half = Rational::from((1, 2));
        let factors = s
            .a
            .iter()
            .zip(&s.q)
            .map(|(a, &q)| (Rational::from(a - &half), q))
            .collect();
        Ok(Self {
            p: s.p,
            sigma: s.sigma,
            offset: s.offset,
            weight: Weight::Product(factors),
        })
    }

    /// Weighted sum with a partial-fraction weight. Poles at positive
    /// integers are rejected, and the weight must decay like `n^-2`
    /// (`σ = +1`) or `n^-1` (`σ = −1`).
    pub fn partial_fractions(
        p: Vec<u32>,
        sigma: Sign,
        offset: HarmonicOffset,
        terms: Vec<PartialFractionTerm>,
    ) -> Result<Self> {
        if p.contains(&0) {
            return Err(Error::Config("harmonic order p must be ≥ 1".into()));
        }
        let mut terms: Vec<_> = terms.into_iter().filter(|t| t.coeff != 0).collect();
        terms.sort_by(|x, y| (&x.beta, x.order).cmp(&(&y.beta, y.order)));
        for t in &terms {
            if t.order == 0 {
                return Err(Error::Config("partial-fraction order must be ≥ 1".into()));
            }
            if t.beta.is_integer() && t.beta > 0 {
                return Err(Error::Singular(format!("pole of the weight at n = {}", t.beta)));
            }
        }
        if terms.is_empty() {
            return Err(Error::Config("empty weight".into()));
        }
        let residue_sum: Rational = terms
            .iter()
            .filter(|t| t.order == 1)
            .fold(Rational::new(), |acc, t| acc + &t.coeff);
        if sigma == Sign::Plus && residue_sum != 0 {
            return Err(Error::Divergent("weight decays only like 1/n".into()));
        }
        let mut p = p;
        p.sort_unstable();
        Ok(Self {
            p,
            sigma,
            offset,
            weight: Weight::PartialFractions(terms),
        })
    }
}
