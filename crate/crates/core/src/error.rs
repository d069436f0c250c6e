use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation parameter t must be at least 1, got {0}")]
    InvalidTruncation(i64),

    #[error("row index must be nonnegative, got {0}")]
    NegativeRow(i64),

    #[error("(n, k) = ({n}, {k}) is out of range: need 0 <= k <= n")]
    OutOfRange { n: i64, k: i64 },

    #[error("enumeration of C({n}, {k}) = {total} objects exceeds the cap of {cap}")]
    CapExceeded { n: i64, k: i64, total: String, cap: u64 },

    #[error("path is not {t}-admissible: {path}")]
    InadmissiblePath { t: u32, path: String },

    #[error("tableau is not a {t}-admissible columnar tableau: {tableau}")]
    InadmissibleTableau { t: u32, tableau: String },

    #[error("path {path} does not end at ({k}, {y}) for n = {n}")]
    WrongEndpoint { path: String, n: i64, k: i64, y: i64 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("polynomial has an x[0] term and lies outside the domain of D")]
    OutsideDomain,

    #[error("exponent N must be at least 1, got {0}")]
    InvalidExponent(i64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("base {0} exceeds the supported prime bound of 1000000")]
    UnsupportedBase(u64),

    #[error("lucas method requires t to be a power of two, got t = {0}")]
    NotPowerOfTwo(u32),

    #[error("vandermonde check requires l <= m, got l = {l}, m = {m}")]
    InvalidSplit { m: u64, l: u64 },

    #[error("row count must be at least 1, got {0}")]
    InvalidRowCount(i64),

    #[error("format {0} is not supported for this command")]
    UnsupportedFormat(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::NotPowerOfTwo(_) => 4,
            Error::Io(_) => 5,
            _ => 2,
        }
    }
}
