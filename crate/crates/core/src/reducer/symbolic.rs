use std::collections::BTreeMap;
use std::fmt;

use rug::{Float, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::numeric::real::{check_precision, log2, pi, Real};
use crate::special::tvalues::{single_capital_t, single_capital_t_bar, single_t, single_t_bar};
use crate::special::zeta::{alt_zeta, riemann_zeta};

/// Constants that closed forms are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisSymbol {
    Zeta(u32),
    ZetaBar(u32),
    LittleT(u32),
    LittleTBar(u32),
    BigT(u32),
    BigTBar(u32),
    Log2,
    Pi,
}

impl BasisSymbol {
    pub fn weight(self) -> u32 {
        match self {
            BasisSymbol::Zeta(k)
            | BasisSymbol::ZetaBar(k)
            | BasisSymbol::LittleT(k)
            | BasisSymbol::LittleTBar(k)
            | BasisSymbol::BigT(k)
            | BasisSymbol::BigTBar(k) => k,
            BasisSymbol::Log2 | BasisSymbol::Pi => 1,
        }
    }

    pub fn eval(self, prec: u32) -> Result<Real> {
        match self {
            BasisSymbol::Zeta(k) => riemann_zeta(k, prec),
            BasisSymbol::ZetaBar(k) => alt_zeta(k, prec),
            BasisSymbol::LittleT(k) => single_t(k, prec),
            BasisSymbol::LittleTBar(k) => single_t_bar(k, prec),
            BasisSymbol::BigT(k) => single_capital_t(k, prec),
            BasisSymbol::BigTBar(k) => single_capital_t_bar(k, prec),
            BasisSymbol::Log2 => {
                check_precision(prec)?;
                Ok(log2(prec))
            }
            BasisSymbol::Pi => {
                check_precision(prec)?;
                Ok(pi(prec))
            }
        }
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::Zeta(k) => write!(f, "zeta({k})"),
            BasisSymbol::ZetaBar(k) => write!(f, "zeta_bar({k})"),
            BasisSymbol::LittleT(k) => write!(f, "t({k})"),
            BasisSymbol::LittleTBar(k) => write!(f, "t_bar({k})"),
            BasisSymbol::BigT(k) => write!(f, "T({k})"),
            BasisSymbol::BigTBar(k) => write!(f, "T_bar({k})"),
            BasisSymbol::Log2 => f.write_str("log2"),
            BasisSymbol::Pi => f.write_str("pi"),
        }
    }
}

/// A basis constant with a rational prefactor, or zero. Divergent
/// symbols are rewritten here: `ζ(1) → −2 log 2`, `t(1) → 0`,
/// `T(1) = 2 t(1) → 0`, and the convergent `ζ̄(1)` becomes `log 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factor(Option<(Rational, BasisSymbol)>);

impl Factor {
    fn one(sym: BasisSymbol) -> Self {
        Factor(Some((Rational::from(1), sym)))
    }

    pub fn zeta(k: u32) -> Self {
        match k {
            0 => panic!("zeta(0) is not a basis constant"),
            1 => Factor(Some((Rational::from(-2), BasisSymbol::Log2))),
            _ => Self::one(BasisSymbol::Zeta(k)),
        }
    }

    pub fn zeta_bar(k: u32) -> Self {
        match k {
            0 => panic!("zeta_bar(0) is not a basis constant"),
            1 => Self::one(BasisSymbol::Log2),
            _ => Self::one(BasisSymbol::ZetaBar(k)),
        }
    }

    pub fn t(k: u32) -> Self {
        match k {
            0 => panic!("t(0) is not a basis constant"),
            1 => Factor(None),
            _ => Self::one(BasisSymbol::LittleT(k)),
        }
    }

    pub fn t_bar(k: u32) -> Self {
        assert!(k >= 1, "t_bar(0) is not a basis constant");
        Self::one(BasisSymbol::LittleTBar(k))
    }

    pub fn big_t(k: u32) -> Self {
        match k {
            0 => panic!("T(0) is not a basis constant"),
            1 => Factor(None),
            _ => Self::one(BasisSymbol::BigT(k)),
        }
    }

    pub fn big_t_bar(k: u32) -> Self {
        assert!(k >= 1, "T_bar(0) is not a basis constant");
        Self::one(BasisSymbol::BigTBar(k))
    }
}

/// Sorted product of one or two basis symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<BasisSymbol>);

impl Monomial {
    pub fn new(mut symbols: Vec<BasisSymbol>) -> Self {
        assert!(
            (1..=2).contains(&symbols.len()),
            "monomials have degree 1 or 2"
        );
        symbols.sort_unstable();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[BasisSymbol] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|s| s.weight()).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Rational linear combination of monomials, kept canonical: no zero
/// coefficients and a fixed term order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicExpr {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymbolicExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, symbols: &[BasisSymbol]) -> Rational {
        self.terms
            .get(&Monomial::new(symbols.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_monomial(&mut self, coeff: Rational, monomial: Monomial) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(monomial.clone()).or_default();
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&monomial);
        }
    }

    /// Adds `coeff · f`.
    pub fn add(&mut self, coeff: Rational, f: Factor) {
        if let Factor(Some((c, s))) = f {
            self.add_monomial(coeff * c, Monomial::new(vec![s]));
        }
    }

    /// Adds `coeff · f · g`.
    pub fn add_product(&mut self, coeff: Rational, f: Factor, g: Factor) {
        if let (Factor(Some((c1, s1))), Factor(Some((c2, s2)))) = (f, g) {
            self.add_monomial(coeff * c1 * c2, Monomial::new(vec![s1, s2]));
        }
    }

    /// Common weight of all monomials, if there is one.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Rewrites `t(k)` and `T(k)` through `ζ(k)`; alternating symbols are
    /// left as they are.
    pub fn normalize_to_zeta(&self) -> SymbolicExpr {
        let mut out = SymbolicExpr::new();
        for (mono, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut syms = Vec::with_capacity(2);
            for s in mono.symbols() {
                let (factor, sym) = match *s {
                    BasisSymbol::LittleT(k) => (odd_part(k), BasisSymbol::Zeta(k)),
                    BasisSymbol::BigT(k) => (odd_part(k) * 2u32, BasisSymbol::Zeta(k)),
                    other => (Rational::from(1), other),
                };
                c *= factor;
                syms.push(sym);
            }
            out.add_monomial(c, Monomial::new(syms));
        }
        out
    }

    pub fn eval(&self, prec: u32) -> Result<Real> {
        let wp = prec + 16;
        let mut acc = Float::new(wp);
        for (mono, coeff) in &self.terms {
            let mut term = Float::with_val(wp, coeff);
            for s in mono.symbols() {
                term *= s.eval(wp)?;
            }
            acc += term;
        }
        Ok(Float::with_val(prec, acc))
    }
}

/// `1 − 2^-k`.
fn odd_part(k: u32) -> Rational {
    Rational::from(1) - (Rational::from(1) >> k)
}

/// Evaluates every symbol numerically and sums with the exact coefficients.
pub fn eval_symbolic(expr: &SymbolicExpr, prec: u32) -> Result<Real> {
    expr.eval(prec)
}

pub fn normalize_to_zeta(expr: &SymbolicExpr) -> SymbolicExpr {
    expr.normalize_to_zeta()
}

impl fmt::Display for SymbolicExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            let negative = *coeff < 0;
            match (i, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{} * {mono}", Rational::from(coeff.abs_ref()))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord {
    coeff: String,
    symbols: Vec<String>,
}

impl Serialize for SymbolicExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                coeff: c.to_string(),
                symbols: m.symbols().iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        let mut st = s.serialize_struct("SymbolicExpr", 2)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::real::pow2;

    fn q(n: i32, d: i32) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn conventions_at_construction() {
        let mut e = SymbolicExpr::new();
        e.add(q(1, 2), Factor::zeta(1));
        e.add_product(q(1, 1), Factor::t(1), Factor::t(2));
        e.add(q(1, 1), Factor::zeta_bar(1));
        // ζ(1)/2 = −log 2 cancels ζ̄(1) = log 2, and t(1) annihilates its product
        assert!(e.is_empty());
        e.add(q(1, 1), Factor::zeta(1));
        assert_eq!(e.coefficient(&[BasisSymbol::Log2]), -2);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let mut e = SymbolicExpr::new();
        e.add_product(q(1, 3), Factor::t(2), Factor::zeta(3));
        e.add_product(q(-1, 3), Factor::zeta(3), Factor::t(2));
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn display_is_deterministic() {
        let mut e = SymbolicExpr::new();
        e.add(q(-1, 2), Factor::t(3));
        e.add_product(q(1, 1), Factor::t(2), Factor::zeta(1));
        assert_eq!(e.to_string(), "-2 * t(2) * log2 - 1/2 * t(3)");
    }

    #[test]
    fn normalization() {
        let mut e = SymbolicExpr::new();
        e.add(q(1, 1), Factor::t(2));
        let n = e.normalize_to_zeta();
        assert_eq!(n.coefficient(&[BasisSymbol::Zeta(2)]), q(3, 4));
        let mut e = SymbolicExpr::new();
        e.add(q(1, 1), Factor::big_t(3));
        let n = e.normalize_to_zeta();
        assert_eq!(n.coefficient(&[BasisSymbol::Zeta(3)]), q(7, 4));
        assert_eq!(n.normalize_to_zeta(), n);
    }

    #[test]
    fn evaluation_matches_direct_values() {
        let prec = 192;
        let mut e = SymbolicExpr::new();
        e.add(q(1, 1), Factor::big_t(3));
        let v = eval_symbolic(&e, prec).unwrap();
        let z3 = riemann_zeta(3, prec).unwrap();
        let expect = Float::with_val(prec, z3 * 7u32) / 4u32;
        assert!(Float::with_val(prec, &v - &expect).abs() < pow2(prec, -180));

        let mut e = SymbolicExpr::new();
        e.add_product(q(1, 2), Factor::zeta_bar(1), Factor::t(2));
        let v = eval_symbolic(&e, prec).unwrap().to_f64();
        let expect = 0.5 * std::f64::consts::LN_2 * std::f64::consts::PI.powi(2) / 8.0;
        assert!((v - expect).abs() < 1e-15);
    }

    #[test]
    fn weights() {
        let mut e = SymbolicExpr::new();
        e.add_product(q(1, 1), Factor::zeta(1), Factor::t(4));
        e.add(q(1, 1), Factor::t(5));
        assert_eq!(e.homogeneous_weight(), Some(5));
        e.add(q(1, 1), Factor::t(2));
        assert_eq!(e.homogeneous_weight(), None);
    }
}
