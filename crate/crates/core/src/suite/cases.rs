use std::fmt;

use rug::Rational;

use super::config::{Selection, SuiteConfig};
use crate::error::{Error, Result};
use crate::numeric::real::Real;
use crate::reducer::Family;
use crate::series::PartialFractionTerm;
use crate::verify::{check_case, CaseParams, IdentityCase, IdentityId, PartialFractionRational};

/// One unit of work in a suite.
#[derive(Debug, Clone, PartialEq)]
pub enum SuiteCase {
    Identity(IdentityCase),
    Reduction { family: Family, j: u32, m: u32, precision: u32, tolerance: Real },
}

impl SuiteCase {
    pub fn case_id(&self) -> String {
        match self {
            SuiteCase::Identity(c) => c.case_id(),
            SuiteCase::Reduction { family, j, m, .. } => format!("{family}[j={j} m={m}]"),
        }
    }
}

impl fmt::Display for SuiteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.case_id())
    }
}

fn term(beta: (i32, i32), order: u32, coeff: (i32, i32)) -> PartialFractionTerm {
    PartialFractionTerm {
        beta: Rational::from(beta),
        order,
        coeff: Rational::from(coeff),
    }
}

/// Fixed rational functions with poles of order 2 and 3 that supplement
/// the products built from the parameter samples.
pub fn builtin_rationals() -> Vec<PartialFractionRational> {
    [
        vec![term((-1, 4), 2, (1, 1))],
        vec![term((-1, 5), 1, (1, 1)), term((-1, 4), 2, (-2, 3)), term((2, 7), 1, (-1, 1)), term((2, 7), 3, (1, 2))],
        vec![term((-1, 5), 1, (1, 1)), term((2, 7), 1, (-1, 1)), term((-3, 1), 3, (5, 1))],
    ]
    .into_iter()
    .map(|t| PartialFractionRational::new(t).expect("built-in rational is admissible"))
    .collect()
}

const RATIONAL_P_MAX: u32 = 3;

/// Expands a configuration into its cases. Pair identities reject samples
/// that violate their hypotheses; the one-parameter corollaries and the
/// residue theorems skip values outside their domains.
pub fn build_cases(config: &SuiteConfig) -> Result<Vec<SuiteCase>> {
    config.validate()?;
    let precision = config.precision_bits;
    let tolerance = config.tolerance_value()?;
    let pairs: Vec<(&Rational, &Rational)> = config
        .parameter_samples
        .iter()
        .filter(|s| s.len() == 2)
        .map(|s| (&s[0], &s[1]))
        .collect();
    let mut singles: Vec<Rational> = config.parameter_samples.iter().flatten().cloned().collect();
    singles.sort_unstable();
    singles.dedup();

    let mut cases = Vec::new();
    let mut push = |identity: IdentityId, params: CaseParams| {
        cases.push(IdentityCase {
            identity,
            params,
            precision,
            tolerance: tolerance.clone(),
        })
    };
    for sel in &config.families {
        let Selection::Identity(id) = *sel else { continue };
        use IdentityId::*;
        match id {
            TanPair | SecPair => {
                if pairs.is_empty() {
                    return Err(Error::Config(format!("{id} needs parameter pairs `a,b`")));
                }
                for &(a, b) in &pairs {
                    for p in 1..=config.p_max {
                        push(id, CaseParams::Pair { p, a: a.clone(), b: b.clone() });
                    }
                }
            }
            TanSymmetric | TanReflected | SecSymmetric | SecReflected => {
                // harmonic order is 2m for the secant symmetric case, 2m+1 otherwise
                let even = id == SecSymmetric;
                for a in &singles {
                    for m in 0..=config.p_max / 2 {
                        let p = if even { 2 * m } else { 2 * m + 1 };
                        if p == 0 || p > config.p_max {
                            continue;
                        }
                        push(id, CaseParams::Single { m, a: a.clone() });
                    }
                }
            }
            TanRational | SecRational => {
                let mut rs: Vec<PartialFractionRational> = pairs
                    .iter()
                    .filter_map(|(a, b)| PartialFractionRational::shifted_product(a, b).ok())
                    .collect();
                rs.extend(builtin_rationals());
                for r in &rs {
                    for p in 1..=config.p_max.min(RATIONAL_P_MAX) {
                        push(id, CaseParams::Rational { p, r: r.clone() });
                    }
                }
            }
            PsiExpansions | TrigExpansions => push(
                id,
                CaseParams::Order {
                    order: config.expansion_order,
                },
            ),
        }
    }

    let mut out = Vec::with_capacity(cases.len());
    for case in cases {
        let skippable = matches!(
            case.identity,
            IdentityId::TanSymmetric | IdentityId::TanReflected | IdentityId::SecSymmetric | IdentityId::SecReflected
        );
        match check_case(&case) {
            Ok(()) => out.push(SuiteCase::Identity(case)),
            Err(Error::Hypothesis(_)) if skippable => {}
            Err(e) => return Err(e),
        }
    }
    for sel in &config.families {
        let Selection::Reduction(family) = *sel else { continue };
        for (j, m) in family.params_up_to(config.weight_max) {
            out.push(SuiteCase::Reduction {
                family,
                j,
                m,
                precision,
                tolerance: tolerance.clone(),
            });
        }
    }
    out.sort_by_cached_key(SuiteCase::case_id);
    out.dedup_by(|x, y| x.case_id() == y.case_id());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::config::{parse_families, parse_samples};

    fn config(families: &str, samples: &str) -> SuiteConfig {
        SuiteConfig {
            families: parse_families(families).unwrap(),
            parameter_samples: parse_samples(samples).unwrap(),
            ..Default::default()
        }
    }

    #[test]
    fn pair_cases() {
        let cases = build_cases(&config("thm3_1,thm3_4", "1/4,1/3;1/5,2/5")).unwrap();
        assert_eq!(cases.len(), 2 * 2 * 5);
    }

    #[test]
    fn invalid_pair_is_rejected() {
        let err = build_cases(&config("thm3_1", "1/4,1/4")).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn corollaries_filter_their_domain() {
        // reflected cases need 0 < a < 1 and a ≠ 1/2, so −1/7 drops out
        let cases = build_cases(&config("cor3_3", "1/7,-1/7")).unwrap();
        assert_eq!(cases.len(), 3);
        let cases = build_cases(&config("cor3_5", "1/7,-1/7")).unwrap();
        assert_eq!(cases.len(), 2 * 2);
    }

    #[test]
    fn default_suite_shape() {
        let cases = build_cases(&SuiteConfig::default()).unwrap();
        let rational = cases
            .iter()
            .filter(|c| matches!(c, SuiteCase::Identity(i) if i.identity == IdentityId::TanRational))
            .count();
        assert_eq!(rational, 6 * 3);
        let ids: Vec<String> = cases.iter().map(SuiteCase::case_id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert!(ids.iter().any(|i| i == "lemma2_4[order=6]"));
        assert!(ids.iter().any(|i| i == "T_even_odd[j=1 m=0]"));
    }
}
