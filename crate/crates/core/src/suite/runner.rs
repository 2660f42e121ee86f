use std::time::{Duration, Instant, SystemTime};

use serde::{Serialize, Serializer};

use super::cases::{build_cases, SuiteCase};
use super::config::SuiteConfig;
use crate::error::Result;
use crate::reducer::{certify, ReductionRecord};
use crate::verify::{run_case, VerificationReport};

/// Outcome of one suite case.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseRecord {
    Identity(VerificationReport),
    Reduction(ReductionRecord),
}

impl CaseRecord {
    pub fn case_id(&self) -> String {
        match self {
            CaseRecord::Identity(r) => r.case.case_id(),
            CaseRecord::Reduction(r) => r.case_id(),
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            CaseRecord::Identity(r) => r.passed,
            CaseRecord::Reduction(r) => r.passed,
        }
    }

    pub fn elapsed(&self) -> Duration {
        match self {
            CaseRecord::Identity(r) => r.elapsed,
            CaseRecord::Reduction(r) => r.elapsed,
        }
    }

    fn clear_timing(&mut self) {
        match self {
            CaseRecord::Identity(r) => r.elapsed = Duration::ZERO,
            CaseRecord::Reduction(r) => r.elapsed = Duration::ZERO,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Everything a suite run produced, in canonical case order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub suite_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    #[serde(rename = "total_elapsed_ms", serialize_with = "serialize_ms")]
    pub total_elapsed: Duration,
}

fn serialize_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl RunRecord {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Stable identifier of the numeric content of a configuration. Output
/// settings, worker count and timing do not enter it.
pub fn suite_id(config: &SuiteConfig) -> String {
    let samples: Vec<String> = config
        .parameter_samples
        .iter()
        .map(|s| s.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    let families: Vec<String> = config.families.iter().map(|f| f.to_string()).collect();
    let canonical = format!(
        "prec={};tol={};families={};weight={};samples={};p_max={};order={}",
        config.precision_bits,
        config.tolerance.trim(),
        families.join(","),
        config.weight_max,
        samples.join(";"),
        config.p_max,
        config.expansion_order,
    );
    // 64-bit FNV-1a
    let hash = canonical
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    format!("{hash:016x}")
}

fn run_one(case: &SuiteCase) -> Result<CaseRecord> {
    match case {
        SuiteCase::Identity(c) => run_case(c).map(CaseRecord::Identity),
        SuiteCase::Reduction {
            family,
            j,
            m,
            precision,
            tolerance,
        } => certify(*family, *j, *m, *precision, tolerance).map(CaseRecord::Reduction),
    }
}

#[cfg(feature = "parallel")]
fn run_all(cases: &[SuiteCase], workers: usize) -> Vec<Result<CaseRecord>> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build();
    match pool {
        Ok(pool) => pool.install(|| cases.par_iter().map(run_one).collect()),
        Err(_) => cases.iter().map(run_one).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all(cases: &[SuiteCase], _workers: usize) -> Vec<Result<CaseRecord>> {
    cases.iter().map(run_one).collect()
}

/// Runs already-built cases. The first error, in case order, aborts the run.
pub fn run_cases(config: &SuiteConfig, cases: &[SuiteCase]) -> Result<RunRecord> {
    let started = SystemTime::now();
    let clock = Instant::now();
    let mut records = run_all(cases, config.workers)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_cached_key(CaseRecord::case_id);
    let passed = records.iter().filter(|r| r.passed()).count();
    let summary = Summary {
        total: records.len(),
        passed,
        failed: records.len() - passed,
    };
    let mut total_elapsed = clock.elapsed();
    let mut timestamp = Some(humantime::format_rfc3339_seconds(started).to_string());
    if config.omit_timing {
        records.iter_mut().for_each(CaseRecord::clear_timing);
        total_elapsed = Duration::ZERO;
        timestamp = None;
    }
    Ok(RunRecord {
        suite_id: suite_id(config),
        timestamp,
        cases: records,
        summary,
        total_elapsed,
    })
}

/// Builds and runs every case selected by `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<RunRecord> {
    let cases = build_cases(config)?;
    run_cases(config, &cases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::config::{parse_families, parse_samples};

    fn small() -> SuiteConfig {
        SuiteConfig {
            families: parse_families("thm3_1,lemma2_4,t_even_odd").unwrap(),
            parameter_samples: parse_samples("1/4,1/3").unwrap(),
            p_max: 2,
            weight_max: 4,
            expansion_order: 4,
            ..Default::default()
        }
    }

    #[test]
    fn runs_and_tallies() {
        let rec = run_suite(&small()).unwrap();
        assert!(rec.all_passed());
        assert_eq!(rec.summary.total, rec.cases.len());
        assert_eq!(rec.summary.passed + rec.summary.failed, rec.summary.total);
        assert!(rec.timestamp.is_some());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let mut c = small();
        c.omit_timing = true;
        c.workers = 1;
        let one = run_suite(&c).unwrap();
        c.workers = 4;
        let four = run_suite(&c).unwrap();
        assert_eq!(one, four);
        assert!(one.timestamp.is_none());
    }

    #[test]
    fn suite_id_ignores_output_settings() {
        let a = small();
        let mut b = small();
        b.workers = 7;
        b.omit_timing = true;
        assert_eq!(suite_id(&a), suite_id(&b));
        b.precision_bits = 256;
        assert_ne!(suite_id(&a), suite_id(&b));
    }
}
