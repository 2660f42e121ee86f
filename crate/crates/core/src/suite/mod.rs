//! Batch runs over identity checks and reduction certificates.

pub mod cases;
pub mod config;
pub mod output;
pub mod runner;

pub use cases::{build_cases, builtin_rationals, SuiteCase};
pub use config::{parse_families, parse_samples, Format, Selection, SuiteConfig};
pub use output::{reduction_text, render_reductions, render_run, to_json, write_output, CSV_HEADER};
pub use runner::{run_cases, run_suite, suite_id, CaseRecord, RunRecord, Summary};
