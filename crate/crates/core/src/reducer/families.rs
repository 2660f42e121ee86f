//! Closed forms of the double t- and T-values of mixed parity.
//!
//! Each family fixes the parity of both arguments and whether the first
//! one carries an alternating sign; `(j, m)` parametrize the arguments.

use std::fmt;
use std::str::FromStr;

use rug::Rational;
use serde::{Serialize, Serializer};

use super::symbolic::{Factor, SymbolicExpr};
use crate::error::{domain, Error, Result};
use crate::numeric::real::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `t(2j, 2m+1)`, `j ≥ 1`, `m ≥ 0`.
    TEvenOdd,
    /// `t(2j+1, 2m)`, `j, m ≥ 1`.
    TOddEven,
    /// `t(2j‾, 2m)`, `j, m ≥ 1`.
    TBarEven,
    /// `t(2j+1‾, 2m+1)`, `j, m ≥ 0`.
    TBarOdd,
    /// `T(2j, 2m+1)`, `j ≥ 1`, `m ≥ 0`.
    CapitalTEvenOdd,
    /// `T(2j+1, 2m)`, `j, m ≥ 1`.
    CapitalTOddEven,
    /// `T(2j‾, 2m+1)`, `j ≥ 1`, `m ≥ 0`.
    CapitalTBarEven,
    /// `T(2j+1‾, 2m)`, `j ≥ 0`, `m ≥ 1`.
    CapitalTBarOdd,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::TEvenOdd,
        Family::TOddEven,
        Family::TBarEven,
        Family::TBarOdd,
        Family::CapitalTEvenOdd,
        Family::CapitalTOddEven,
        Family::CapitalTBarEven,
        Family::CapitalTBarOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TEvenOdd => "t_even_odd",
            Family::TOddEven => "t_odd_even",
            Family::TBarEven => "t_bar_even",
            Family::TBarOdd => "t_bar_odd",
            Family::CapitalTEvenOdd => "T_even_odd",
            Family::CapitalTOddEven => "T_odd_even",
            Family::CapitalTBarEven => "T_bar_even",
            Family::CapitalTBarOdd => "T_bar_odd",
        }
    }

    /// Smallest admissible `(j, m)`.
    pub fn min_params(self) -> (u32, u32) {
        match self {
            Family::TEvenOdd | Family::CapitalTEvenOdd | Family::CapitalTBarEven => (1, 0),
            Family::TOddEven | Family::TBarEven | Family::CapitalTOddEven => (1, 1),
            Family::TBarOdd => (0, 0),
            Family::CapitalTBarOdd => (0, 1),
        }
    }

    /// `(s1, s2)` of the reduced value.
    pub fn arguments(self, j: u32, m: u32) -> (u32, u32) {
        match self {
            Family::TEvenOdd | Family::CapitalTEvenOdd | Family::CapitalTBarEven => (2 * j, 2 * m + 1),
            Family::TOddEven | Family::CapitalTOddEven | Family::CapitalTBarOdd => (2 * j + 1, 2 * m),
            Family::TBarEven => (2 * j, 2 * m),
            Family::TBarOdd => (2 * j + 1, 2 * m + 1),
        }
    }

    pub fn is_alternating(self) -> bool {
        matches!(
            self,
            Family::TBarEven | Family::TBarOdd | Family::CapitalTBarEven | Family::CapitalTBarOdd
        )
    }

    pub fn is_capital(self) -> bool {
        matches!(
            self,
            Family::CapitalTEvenOdd | Family::CapitalTOddEven | Family::CapitalTBarEven | Family::CapitalTBarOdd
        )
    }

    /// Display name of the reduced value, e.g. `t(2,1)` or `T_bar(3,2)`.
    pub fn value_label(self, j: u32, m: u32) -> String {
        let (s1, s2) = self.arguments(j, m);
        let head = if self.is_capital() { "T" } else { "t" };
        let bar = if self.is_alternating() { "_bar" } else { "" };
        format!("{head}{bar}({s1},{s2})")
    }

    pub fn check(self, j: u32, m: u32) -> Result<()> {
        let (j0, m0) = self.min_params();
        if j < j0 || m < m0 {
            return Err(domain(
                "reduce",
                format!("{} needs j ≥ {j0} and m ≥ {m0}, got j = {j}, m = {m}", self.name()),
            ));
        }
        Ok(())
    }

    /// All admissible `(j, m)` with `s1 + s2 ≤ weight_max`, ordered by `j` then `m`.
    pub fn params_up_to(self, weight_max: u32) -> Vec<(u32, u32)> {
        let (j0, m0) = self.min_params();
        let mut out = Vec::new();
        let mut j = j0;
        loop {
            let (s1, s2) = self.arguments(j, m0);
            if s1 + s2 > weight_max {
                break;
            }
            let mut m = m0;
            loop {
                let (s1, s2) = self.arguments(j, m);
                if s1 + s2 > weight_max {
                    break;
                }
                out.push((j, m));
                m += 1;
            }
            j += 1;
        }
        out
    }

    pub fn reduce(self, j: u32, m: u32) -> Result<SymbolicExpr> {
        self.check(j, m)?;
        Ok(match self {
            Family::TEvenOdd => t_even_odd(j, m),
            Family::TOddEven => t_odd_even(j, m),
            Family::TBarEven => t_bar_even(j, m),
            Family::TBarOdd => t_bar_odd(j, m),
            Family::CapitalTEvenOdd => capital_t_even_odd(j, m),
            Family::CapitalTOddEven => capital_t_odd_even(j, m),
            Family::CapitalTBarEven => capital_t_bar_even(j, m),
            Family::CapitalTBarOdd => capital_t_bar_odd(j, m),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown reduction family `{s}`")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn b(n: u32, k: u32) -> Rational {
    Rational::from(binomial(n, k))
}

/// `C(n, k) / 2^e`.
fn b_over_pow2(n: u32, k: u32, e: u32) -> Rational {
    b(n, k) >> e
}

fn half() -> Rational {
    Rational::from((1, 2))
}

fn t_even_odd(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add_product(Rational::from(1), Factor::t(2 * j), Factor::t(2 * m + 1));
    e.add(-half(), Factor::t(w + 1));
    for k in 1..=m {
        let s = w - 2 * k + 1;
        e.add_product(-b_over_pow2(w - 2 * k, 2 * j - 1, s), Factor::zeta(s), Factor::t(2 * k));
    }
    for l in 1..=j {
        let s = w - 2 * l + 1;
        e.add_product(-b_over_pow2(w - 2 * l, 2 * m, s), Factor::zeta(s), Factor::t(2 * l));
    }
    e
}

fn t_odd_even(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(-half(), Factor::t(w + 1));
    for k in 1..=m {
        let s = w - 2 * k + 1;
        e.add_product(b_over_pow2(w - 2 * k, 2 * j, s), Factor::zeta(s), Factor::t(2 * k));
    }
    for l in 1..=j {
        let s = w - 2 * l + 1;
        e.add_product(b_over_pow2(w - 2 * l, 2 * m - 1, s), Factor::zeta(s), Factor::t(2 * l));
    }
    e
}

fn t_bar_even(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(-half(), Factor::t_bar(w));
    for k in 0..m {
        let s = w - 2 * k - 1;
        e.add_product(b_over_pow2(w - 2 * k - 2, 2 * j - 1, s), Factor::zeta_bar(s), Factor::t_bar(2 * k + 1));
    }
    for l in 0..j {
        let s = w - 2 * l - 1;
        e.add_product(b_over_pow2(w - 2 * l - 2, 2 * m - 1, s), Factor::zeta(s), Factor::t_bar(2 * l + 1));
    }
    e
}

fn t_bar_odd(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add_product(Rational::from(1), Factor::t_bar(2 * j + 1), Factor::t(2 * m + 1));
    e.add(-half(), Factor::t_bar(w + 2));
    for k in 0..=m {
        let s = w - 2 * k + 1;
        e.add_product(-b_over_pow2(w - 2 * k, 2 * j, s), Factor::zeta_bar(s), Factor::t_bar(2 * k + 1));
    }
    for l in 0..=j {
        let s = w - 2 * l + 1;
        e.add_product(-b_over_pow2(w - 2 * l, 2 * m, s), Factor::zeta(s), Factor::t_bar(2 * l + 1));
    }
    e
}

fn capital_t_even_odd(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(b(w, 2 * m), Factor::big_t(w + 1));
    for k in 1..=m {
        e.add_product(-b(w - 2 * k, 2 * j - 1), Factor::big_t(w - 2 * k + 1), Factor::big_t(2 * k));
    }
    for l in 1..j {
        e.add_product(
            -b_over_pow2(w - 2 * l, 2 * m, 2 * l - 1),
            Factor::zeta(2 * l),
            Factor::big_t(w - 2 * l + 1),
        );
    }
    e
}

fn capital_t_odd_even(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(-b(w, 2 * j + 1), Factor::big_t(w + 1));
    for k in 1..=m {
        e.add_product(b(w - 2 * k, 2 * j), Factor::big_t(w - 2 * k + 1), Factor::big_t(2 * k));
    }
    for l in 1..=j {
        e.add_product(
            b_over_pow2(w - 2 * l, 2 * m - 1, 2 * l - 1),
            Factor::zeta(2 * l),
            Factor::big_t(w - 2 * l + 1),
        );
    }
    e
}

fn capital_t_bar_even(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(-b(w, 2 * m), Factor::big_t(w + 1));
    for k in 0..=m {
        e.add_product(
            b(w - 2 * k - 1, 2 * j - 1),
            Factor::big_t_bar(w - 2 * k),
            Factor::big_t_bar(2 * k + 1),
        );
    }
    for l in 1..j {
        e.add_product(
            -b_over_pow2(w - 2 * l, 2 * m, 2 * l - 1),
            Factor::zeta_bar(2 * l),
            Factor::big_t(w - 2 * l + 1),
        );
    }
    e
}

fn capital_t_bar_odd(j: u32, m: u32) -> SymbolicExpr {
    let mut e = SymbolicExpr::new();
    let w = 2 * j + 2 * m;
    e.add(b(w, 2 * j + 1), Factor::big_t(w + 1));
    for k in 0..m {
        e.add_product(
            -b(w - 2 * k - 1, 2 * j),
            Factor::big_t_bar(w - 2 * k),
            Factor::big_t_bar(2 * k + 1),
        );
    }
    for l in 1..=j {
        e.add_product(
            b_over_pow2(w - 2 * l, 2 * m - 1, 2 * l - 1),
            Factor::zeta_bar(2 * l),
            Factor::big_t(w - 2 * l + 1),
        );
    }
    e
}

pub fn reduce_t_even_odd(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::TEvenOdd.reduce(j, m)
}

pub fn reduce_t_odd_even(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::TOddEven.reduce(j, m)
}

pub fn reduce_t_bar_even(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::TBarEven.reduce(j, m)
}

pub fn reduce_t_bar_odd(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::TBarOdd.reduce(j, m)
}

pub fn reduce_capital_t_even_odd(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::CapitalTEvenOdd.reduce(j, m)
}

pub fn reduce_capital_t_odd_even(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::CapitalTOddEven.reduce(j, m)
}

pub fn reduce_capital_t_bar_even(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::CapitalTBarEven.reduce(j, m)
}

pub fn reduce_capital_t_bar_odd(j: u32, m: u32) -> Result<SymbolicExpr> {
    Family::CapitalTBarOdd.reduce(j, m)
}
