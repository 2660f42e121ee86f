use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tsum::numeric::real::parse_rational;
use tsum::reducer::Family;
use tsum::series::{euler_t_sum, HarmonicOffset, Sign, SumSpec};
use tsum::suite::{
    parse_families, parse_samples, render_reductions, render_run, reduction_text, run_suite, to_json, write_output,
    CaseRecord, Format, Selection, SuiteConfig,
};
use tsum::{Error, Result};

const OK: u8 = 0;
const CASE_FAILED: u8 = 1;
const INVALID: u8 = 2;
const IO_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "tsum", version, about = "Parametric Euler T-sums: verification suites, reductions and evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks and reduction certificates.
    Verify(VerifyArgs),
    /// Reduce one double t- or T-value to single values.
    Reduce(ReduceArgs),
    /// Evaluate one parametric Euler T-sum.
    Eval(EvalArgs),
    /// Emit every reduction of a family up to a weight bound.
    Table(TableArgs),
}

#[derive(Args)]
struct Precision {
    /// Working precision in bits.
    #[arg(long, env = "TSUM_DEFAULT_PRECISION_BITS", default_value_t = tsum::suite::config::DEFAULT_PRECISION)]
    precision_bits: u32,
}

#[derive(Args)]
struct Output {
    /// json, csv or text.
    #[arg(long, default_value = "json")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated identity ids and reduction families, or `all`.
    #[arg(long, default_value = "all")]
    families: String,
    /// Parameter samples, e.g. "1/4,1/3;1/5,2/5".
    #[arg(long, default_value = "1/4,1/3;1/5,2/5;1/7,-1/7", allow_hyphen_values = true)]
    samples: String,
    /// Jet order for the expansion checks.
    #[arg(long, default_value_t = tsum::suite::config::DEFAULT_ORDER)]
    order: usize,
    /// Largest harmonic order for the two-parameter identities.
    #[arg(long, default_value_t = tsum::suite::config::DEFAULT_P_MAX)]
    p_max: u32,
    /// Weight bound for reduction certificates.
    #[arg(long, default_value_t = tsum::suite::config::DEFAULT_WEIGHT_MAX)]
    weight_max: u32,
    #[command(flatten)]
    precision: Precision,
    /// Absolute tolerance.
    #[arg(long, default_value = tsum::suite::config::DEFAULT_TOLERANCE)]
    tolerance: String,
    /// Worker threads; 0 uses every CPU.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Leave out timestamps and elapsed times.
    #[arg(long)]
    omit_timing: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    j: u32,
    #[arg(long)]
    m: u32,
    /// json, csv or text.
    #[arg(long, default_value = "text")]
    format: Format,
    #[command(flatten)]
    precision: Precision,
    #[arg(long, default_value = tsum::suite::config::DEFAULT_TOLERANCE)]
    tolerance: String,
}

#[derive(Args)]
struct EvalArgs {
    /// Harmonic orders, comma-separated; may be empty.
    #[arg(long, default_value = "")]
    p: String,
    /// Denominator exponents, comma-separated.
    #[arg(long)]
    q: String,
    /// Shift parameters as rationals, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// 1 for plain sums, -1 for alternating ones.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    sigma: i32,
    /// `cur` for h_n, `prev` for h_{n-1}.
    #[arg(long, default_value = "cur")]
    offset: String,
    #[command(flatten)]
    precision: Precision,
    /// json or text.
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// A family name or `all`.
    #[arg(long, default_value = "all")]
    family: String,
    #[arg(long, default_value_t = tsum::suite::config::DEFAULT_WEIGHT_MAX)]
    weight_max: u32,
    #[command(flatten)]
    precision: Precision,
    #[arg(long, default_value = tsum::suite::config::DEFAULT_TOLERANCE)]
    tolerance: String,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    output: Output,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => IO_FAILURE,
        Error::TermBudgetExceeded(_)
        | Error::PoleProximity { .. }
        | Error::JetMismatch(_)
        | Error::JetNotInvertible
        | Error::InsufficientOrder { .. } => CASE_FAILED,
        _ => INVALID,
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let config = SuiteConfig {
        precision_bits: args.precision.precision_bits,
        tolerance: args.tolerance,
        families: parse_families(&args.families)?,
        weight_max: args.weight_max,
        parameter_samples: parse_samples(&args.samples)?,
        p_max: args.p_max,
        expansion_order: args.order,
        output_path: args.output.out,
        format: args.output.format,
        workers: args.workers,
        omit_timing: args.omit_timing,
    };
    let record = run_suite(&config)?;
    write_output(&render_run(&record, config.format)?, config.output_path.as_deref())?;
    Ok(if record.all_passed() { OK } else { CASE_FAILED })
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8> {
    let config = SuiteConfig {
        precision_bits: args.precision.precision_bits,
        tolerance: args.tolerance,
        ..Default::default()
    };
    config.validate()?;
    let tol = config.tolerance_value()?;
    let record = tsum::reducer::certify(args.family, args.j, args.m, config.precision_bits, &tol)?;
    let text = match args.format {
        Format::Text => reduction_text(&record),
        f => render_reductions(std::slice::from_ref(&record), f)?,
    };
    write_output(&text, None)?;
    Ok(if record.passed { OK } else { CASE_FAILED })
}

fn parse_list<T>(s: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(parse).collect()
}

fn cmd_eval(args: EvalArgs) -> Result<u8> {
    let int = |x: &str| x.parse::<u32>().map_err(|_| Error::Config(format!("`{x}` is not a non-negative integer")));
    let sigma = match args.sigma {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        s => return Err(Error::Config(format!("sigma must be 1 or -1, got {s}"))),
    };
    let offset = match args.offset.as_str() {
        "cur" | "current" | "n" => HarmonicOffset::Current,
        "prev" | "previous" | "n-1" => HarmonicOffset::Previous,
        o => return Err(Error::Config(format!("offset must be `cur` or `prev`, got `{o}`"))),
    };
    let spec = SumSpec::new(
        parse_list(&args.p, int)?,
        parse_list(&args.q, int)?,
        parse_list(&args.a, parse_rational)?,
        sigma,
        offset,
    );
    let prec = args.precision.precision_bits;
    if prec < tsum::suite::config::MIN_SUITE_PRECISION {
        return Err(Error::Config(format!("precision of {prec} bits is below 64")));
    }
    let result = euler_t_sum(&spec, prec)?;
    let text = match args.format {
        Format::Json => to_json(&result)?,
        Format::Csv => return Err(Error::Config("eval supports json and text output".into())),
        Format::Text => {
            let digits = tsum::numeric::real::decimal_digits(prec);
            format!(
                "{spec}\n  value      = {}\n  tail_bound = {}\n  terms_used = {}\n",
                tsum::numeric::real::to_decimal(&result.value, digits),
                tsum::numeric::real::to_decimal(&result.tail_bound, 6),
                result.terms_used
            )
        }
    };
    write_output(&text, None)?;
    Ok(OK)
}

fn cmd_table(args: TableArgs) -> Result<u8> {
    let families = match args.family.as_str() {
        "all" => Family::ALL.into_iter().map(Selection::Reduction).collect(),
        name => vec![Selection::Reduction(name.parse()?)],
    };
    let config = SuiteConfig {
        precision_bits: args.precision.precision_bits,
        tolerance: args.tolerance,
        families,
        weight_max: args.weight_max,
        workers: args.workers,
        omit_timing: true,
        ..Default::default()
    };
    let record = run_suite(&config)?;
    let rows: Vec<_> = record
        .cases
        .into_iter()
        .filter_map(|c| match c {
            CaseRecord::Reduction(r) => Some(r),
            CaseRecord::Identity(_) => None,
        })
        .collect();
    write_output(&render_reductions(&rows, args.output.format)?, args.output.out.as_deref())?;
    Ok(if rows.iter().all(|r| r.passed) { OK } else { CASE_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => cmd_table(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("tsum: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
