use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numeric::real::{parse_rational, Real};
use crate::reducer::Family;
use crate::verify::IdentityId;

pub const MIN_SUITE_PRECISION: u32 = 64;
pub const DEFAULT_PRECISION: u32 = 192;
pub const DEFAULT_TOLERANCE: &str = "1e-40";
pub const DEFAULT_WEIGHT_MAX: u32 = 9;
pub const WEIGHT_GUARD: u32 = 13;
pub const DEFAULT_ORDER: usize = 6;
pub const DEFAULT_P_MAX: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" | "txt" => Ok(Format::Text),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

/// A selectable group of cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Selection {
    Identity(IdentityId),
    Reduction(Family),
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(id) = s.parse::<IdentityId>() {
            return Ok(Selection::Identity(id));
        }
        if let Ok(f) = s.parse::<Family>() {
            return Ok(Selection::Reduction(f));
        }
        Err(Error::Config(format!("unknown family `{s}`")))
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::Identity(i) => write!(f, "{i}"),
            Selection::Reduction(r) => write!(f, "{r}"),
        }
    }
}

/// Everything that determines a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub precision_bits: u32,
    /// Absolute tolerance as a decimal string, e.g. `1e-40`.
    pub tolerance: String,
    pub families: Vec<Selection>,
    pub weight_max: u32,
    /// Each sample is one rational or a pair `a, b`.
    pub parameter_samples: Vec<Vec<Rational>>,
    /// Largest `p` for the two-parameter identities.
    pub p_max: u32,
    /// Jet order for the expansion checks.
    pub expansion_order: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; `0` picks the number of CPUs.
    pub workers: usize,
    /// Drop timestamps and elapsed times so reports are byte-reproducible.
    pub omit_timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            precision_bits: DEFAULT_PRECISION,
            tolerance: DEFAULT_TOLERANCE.into(),
            families: all_selections(),
            weight_max: DEFAULT_WEIGHT_MAX,
            parameter_samples: default_samples(),
            p_max: DEFAULT_P_MAX,
            expansion_order: DEFAULT_ORDER,
            output_path: None,
            format: Format::Json,
            workers: 0,
            omit_timing: false,
        }
    }
}

pub fn all_selections() -> Vec<Selection> {
    IdentityId::ALL
        .into_iter()
        .map(Selection::Identity)
        .chain(Family::ALL.into_iter().map(Selection::Reduction))
        .collect()
}

pub fn default_samples() -> Vec<Vec<Rational>> {
    vec![
        vec![Rational::from((1, 4)), Rational::from((1, 3))],
        vec![Rational::from((1, 5)), Rational::from((2, 5))],
        vec![Rational::from((1, 7)), Rational::from((-1, 7))],
    ]
}

/// Parses `all`, `identities`, `reductions` or a comma-separated list of names.
pub fn parse_families(s: &str) -> Result<Vec<Selection>> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        match name {
            "all" => out.extend(all_selections()),
            "identities" => out.extend(IdentityId::ALL.into_iter().map(Selection::Identity)),
            "reductions" => out.extend(Family::ALL.into_iter().map(Selection::Reduction)),
            _ => out.push(name.parse()?),
        }
    }
    if out.is_empty() {
        return Err(Error::Config("no families selected".into()));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses `a,b;c;d,e` into samples of one or two rationals.
pub fn parse_samples(s: &str) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    for sample in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
        let values = sample
            .split(',')
            .map(|v| parse_rational(v.trim()))
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() || values.len() > 2 {
            return Err(Error::Config(format!("sample `{sample}` must hold one or two rationals")));
        }
        out.push(values);
    }
    if out.is_empty() {
        return Err(Error::Config("no parameter samples".into()));
    }
    Ok(out)
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < MIN_SUITE_PRECISION {
            return Err(Error::Config(format!(
                "precision of {} bits is below {MIN_SUITE_PRECISION}",
                self.precision_bits
            )));
        }
        self.tolerance_value()?;
        if self.weight_max > WEIGHT_GUARD {
            return Err(Error::Config(format!(
                "weight bound {} exceeds the guard {WEIGHT_GUARD}",
                self.weight_max
            )));
        }
        if self.families.is_empty() {
            return Err(Error::Config("no families selected".into()));
        }
        if self.p_max == 0 {
            return Err(Error::Config("p_max must be ≥ 1".into()));
        }
        Ok(())
    }

    pub fn tolerance_value(&self) -> Result<Real> {
        let parsed = Float::parse(self.tolerance.trim())
            .map_err(|e| Error::Config(format!("tolerance `{}`: {e}", self.tolerance)))?;
        let v = Float::with_val(self.precision_bits.max(64), parsed);
        if !v.is_finite() || v <= 0 {
            return Err(Error::Config(format!("tolerance `{}` must be positive", self.tolerance)));
        }
        Ok(v)
    }
}
