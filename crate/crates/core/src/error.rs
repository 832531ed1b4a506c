use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a coefficient with {0} radical terms is not supported")]
    UnsupportedRadicalDivision(usize),
    #[error("square root of zero (dimensionally null normalization)")]
    ZeroRadicand,
    #[error("square root of a quantity with negative leading coefficient: {0}")]
    NegativeRadicand(String),
    #[error("pole at N = {0}")]
    PoleAtN(u64),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("cannot tensor an operator with a ket")]
    MixedRoleTensor,
    #[error("leg reordering violates orientation: {0}")]
    OrientationViolation(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("idempotency check failed: e*e is not proportional to e")]
    NotProportional,
    #[error("no builtin basis for k = {0} (supported: 1..=3)")]
    UnsupportedK(usize),
    #[error("invalid cycle decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("bad epsilon block size: {0}")]
    BadBlockSize(String),
    #[error("cannot compare quantities with differing radicals; compare squared values instead")]
    RadicalComparisonUnsupported,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dense realization too large: {0} entries (cap {1})")]
    TooLarge(u128, u128),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case tag for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::UnsupportedRadicalDivision(_) => "unsupported_radical_division",
            Error::ZeroRadicand => "zero_radicand",
            Error::NegativeRadicand(_) => "negative_radicand",
            Error::PoleAtN(_) => "pole_at_n",
            Error::SignatureMismatch(_) => "signature_mismatch",
            Error::MixedRoleTensor => "mixed_role_tensor",
            Error::OrientationViolation(_) => "orientation_violation",
            Error::OutOfRange(_) => "out_of_range",
            Error::NotProportional => "not_proportional",
            Error::UnsupportedK(_) => "unsupported_k",
            Error::InvalidDecomposition(_) => "invalid_decomposition",
            Error::BadBlockSize(_) => "bad_block_size",
            Error::RadicalComparisonUnsupported => "radical_comparison_unsupported",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::TooLarge(_, _) => "too_large",
            Error::Parse(_) => "parse",
        }
    }
}
