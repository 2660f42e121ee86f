use thiserror::Error;

/// Errors raised by the numeric, series and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("precision of {0} bits is below the supported minimum of {1}")]
    PrecisionTooLow(u32, u32),

    #[error("argument outside the domain of {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{0} is a divergent symbol; request it through ZetaConvention")]
    DivergentSymbol(String),

    #[error("jet mismatch: {0}")]
    JetMismatch(String),

    #[error("jet has a vanishing constant term and cannot be inverted")]
    JetNotInvertible,

    #[error("jet order {order} is too small for a pole of order {pole_order}")]
    InsufficientOrder { order: usize, pole_order: usize },

    #[error("{kind} has a pole within 2^-{bits} of {at}")]
    PoleProximity { kind: String, at: String, bits: u32 },

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("singular shift parameter: {0}")]
    Singular(String),

    #[error("series did not reach the requested accuracy within {0} terms")]
    TermBudgetExceeded(u64),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("inadmissible rational function: {0}")]
    Inadmissible(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
