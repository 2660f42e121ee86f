//! Exact closed forms of double t- and T-values of mixed parity in terms of
//! single zeta, t- and T-values, with numeric certification.

mod certify;
mod families;
mod symbolic;

pub use certify::{certify, oracle_value, ReductionRecord};
pub use families::{
    reduce_capital_t_bar_even, reduce_capital_t_bar_odd, reduce_capital_t_even_odd, reduce_capital_t_odd_even,
    reduce_t_bar_even, reduce_t_bar_odd, reduce_t_even_odd, reduce_t_odd_even, Family,
};
pub use symbolic::{eval_symbolic, normalize_to_zeta, BasisSymbol, Factor, Monomial, SymbolicExpr};

#[cfg(test)]
mod tests {
    use rug::Rational;

    use super::*;
    use crate::verify::default_tolerance;

    const P: u32 = 192;

    fn q(n: i32, d: i32) -> Rational {
        Rational::from((n, d))
    }

    use BasisSymbol::*;

    #[test]
    fn t_two_one() {
        let e = reduce_t_even_odd(1, 0).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&[Log2, LittleT(2)]), 1);
        assert_eq!(e.coefficient(&[LittleT(3)]), q(-1, 2));
        let v = eval_symbolic(&e, P).unwrap().to_f64();
        assert!((v - 0.3292).abs() < 1e-4, "{v}");
    }

    #[test]
    fn t_two_three() {
        let e = reduce_t_even_odd(1, 1).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.coefficient(&[LittleT(2), LittleT(3)]), 1);
        assert_eq!(e.coefficient(&[LittleT(5)]), q(-1, 2));
        assert_eq!(e.coefficient(&[Zeta(3), LittleT(2)]), q(-3, 8));
    }

    #[test]
    fn t_three_two() {
        let e = reduce_t_odd_even(1, 1).unwrap();
        assert_eq!(e.coefficient(&[LittleT(5)]), q(-1, 2));
        assert_eq!(e.coefficient(&[Zeta(3), LittleT(2)]), q(3, 8));
        assert!(reduce_t_odd_even(0, 1).is_err());
    }

    #[test]
    fn alternating_boundary_case() {
        let e = reduce_t_bar_odd(0, 0).unwrap();
        assert_eq!(e.coefficient(&[LittleTBar(2)]), q(-1, 2));
        // −ζ̄(1)/2 − ζ(1)/2 = −log 2/2 + log 2
        assert_eq!(e.coefficient(&[Log2, LittleTBar(1)]), q(1, 2));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn capital_t_instances() {
        let e = reduce_capital_t_even_odd(1, 0).unwrap();
        assert_eq!(e.to_string(), "1 * T(3)");
        let e = reduce_capital_t_odd_even(1, 1).unwrap();
        assert_eq!(e.coefficient(&[BigT(5)]), -4);
        assert_eq!(e.coefficient(&[BigT(2), BigT(3)]), 1);
        assert_eq!(e.coefficient(&[Zeta(2), BigT(3)]), 1);
    }

    #[test]
    fn homogeneous_weights() {
        for family in Family::ALL {
            for (j, m) in family.params_up_to(13) {
                let (s1, s2) = family.arguments(j, m);
                let e = family.reduce(j, m).unwrap();
                assert_eq!(e.homogeneous_weight(), Some(s1 + s2), "{family} {j} {m}: {e}");
            }
        }
    }

    #[test]
    fn no_divergent_symbols() {
        for m in 0..4 {
            let e = reduce_t_even_odd(2, m).unwrap();
            for (mono, _) in e.terms() {
                assert!(!mono.symbols().contains(&LittleT(1)));
                assert!(!mono.symbols().contains(&Zeta(1)));
            }
        }
    }

    #[test]
    fn certified_against_series() {
        let tol = default_tolerance(P);
        for family in Family::ALL {
            for (j, m) in family.params_up_to(7) {
                let rec = certify(family, j, m, P, &tol).unwrap();
                assert!(rec.passed, "{} {}: gap {}", rec.case_id(), rec.expr, rec.absolute_gap.to_f64());
            }
        }
    }

    #[test]
    fn normalization_preserves_values() {
        let tol = default_tolerance(P);
        for family in Family::ALL {
            for (j, m) in family.params_up_to(9) {
                let e = family.reduce(j, m).unwrap();
                let n = normalize_to_zeta(&e);
                let d = rug::Float::with_val(P, eval_symbolic(&e, P).unwrap() - eval_symbolic(&n, P).unwrap()).abs();
                assert!(d <= tol);
                assert_eq!(normalize_to_zeta(&n), n);
            }
        }
    }

    #[test]
    fn parameter_enumeration() {
        assert_eq!(Family::CapitalTEvenOdd.params_up_to(3), vec![(1, 0)]);
        assert_eq!(Family::TBarOdd.params_up_to(4), vec![(0, 0), (0, 1), (1, 0)]);
        assert!(Family::TOddEven.params_up_to(4).is_empty());
    }
}
