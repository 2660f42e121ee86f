use std::fmt::Write as _;
use std::io::Write;

use super::config::Format;
use super::runner::{CaseRecord, RunRecord};
use crate::error::{Error, Result};
use crate::numeric::real::{decimal_digits, to_decimal, Real};
use crate::reducer::ReductionRecord;

pub const CSV_HEADER: [&str; 8] = ["case_id", "family", "params", "lhs", "rhs", "gap", "passed", "elapsed_ms"];

fn full(x: &Real) -> String {
    to_decimal(x, decimal_digits(x.prec()))
}

fn short(x: &Real) -> String {
    to_decimal(x, 6)
}

struct Row {
    case_id: String,
    family: String,
    params: String,
    lhs: String,
    rhs: String,
    gap: String,
    passed: bool,
    elapsed_ms: f64,
}

fn row(rec: &CaseRecord) -> Row {
    match rec {
        CaseRecord::Identity(r) => Row {
            case_id: r.case.case_id(),
            family: r.case.identity.to_string(),
            params: r.case.params.to_string(),
            lhs: full(&r.lhs),
            rhs: full(&r.rhs),
            gap: short(&r.absolute_gap),
            passed: r.passed,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        },
        CaseRecord::Reduction(r) => reduction_row(r),
    }
}

fn reduction_row(r: &ReductionRecord) -> Row {
    Row {
        case_id: r.case_id(),
        family: r.family.to_string(),
        params: format!("j={} m={}", r.j, r.m),
        lhs: full(&r.value),
        rhs: full(&r.oracle),
        gap: short(&r.absolute_gap),
        passed: r.passed,
        elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
    }
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(io_error)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<'a>(rows: impl Iterator<Item = Row> + 'a) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io_error)?;
    for r in rows {
        let elapsed = format!("{:.3}", r.elapsed_ms);
        w.write_record([
            r.case_id.as_str(),
            &r.family,
            &r.params,
            &r.lhs,
            &r.rhs,
            &r.gap,
            if r.passed { "true" } else { "false" },
            &elapsed,
        ])
        .map_err(io_error)?;
    }
    let bytes = w.into_inner().map_err(io_error)?;
    String::from_utf8(bytes).map_err(io_error)
}

/// Renders a suite run in the requested format.
pub fn render_run(record: &RunRecord, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(record),
        Format::Csv => csv_rows(record.cases.iter().map(row)),
        Format::Text => {
            let mut out = String::new();
            for rec in &record.cases {
                let r = row(rec);
                let _ = writeln!(
                    out,
                    "{} {}  gap={}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.case_id,
                    r.gap
                );
            }
            let s = record.summary;
            let _ = write!(out, "suite {}: {} cases, {} passed, {} failed", record.suite_id, s.total, s.passed, s.failed);
            if let Some(ts) = &record.timestamp {
                let _ = write!(out, " at {ts} in {:.1} s", record.total_elapsed.as_secs_f64());
            }
            out.push('\n');
            Ok(out)
        }
    }
}

/// Renders reduction certificates, one per row or paragraph.
pub fn render_reductions(records: &[ReductionRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&records),
        Format::Csv => csv_rows(records.iter().map(reduction_row)),
        Format::Text => Ok(records.iter().map(reduction_text).collect()),
    }
}

/// `T(2,1) = 1 * T(3)` followed by the numeric certificate.
pub fn reduction_text(r: &ReductionRecord) -> String {
    format!(
        "{} = {}\n  value  = {}\n  oracle = {}\n  gap    = {} ({})\n",
        r.label,
        r.expr,
        full(&r.value),
        full(&r.oracle),
        short(&r.absolute_gap),
        if r.passed { "pass" } else { "FAIL" }
    )
}

/// Writes `content` to `path`, or to stdout when `path` is `None`.
pub fn write_output(content: &str, path: Option<&std::path::Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes()).and_then(|_| out.flush()).map_err(io_error)
        }
    }
}
