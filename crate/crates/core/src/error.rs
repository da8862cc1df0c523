use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field GF({p}^{n}) exceeds the size cap {cap}")]
    FieldTooLarge { p: u32, n: u32, cap: u64 },

    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),

    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("group is abelian, so its commuting graph has no vertices")]
    AbelianGroup,

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("multiplication table is not a group: {0}")]
    InvalidTable(String),

    #[error("matrix of dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("unknown formula `{0}`")]
    UnknownFormula(String),

    #[error("formula {id} does not apply: {reason}")]
    Inapplicable { id: String, reason: String },

    #[error("formula {id}: no printed case covers {quantity} for {params}")]
    CaseGap {
        id: String,
        quantity: String,
        params: String,
    },

    #[error("formula {0} has no printed spectra")]
    NoPrintedSpectra(String),

    #[error("expression error: {0}")]
    Expr(String),
}

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
