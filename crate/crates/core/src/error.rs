use alloc::string::String;

/// Errors raised by the exact q-series kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inverse of zero")]
    InverseOfZero,
    /// A pole was hit: some theta divisor or Appell-Lerch denominator vanishes
    /// for the chosen parameter values.
    #[error("non-generic parameter: {0}")]
    NonGenericParameter(String),
    #[error("series has fractional exponents")]
    FractionalExponents,
    #[error("no formula case covers d={d}, a={a}, M={modulus}")]
    UnsupportedCase { d: i64, a: i64, modulus: i64 },
    #[error("unknown series name `{0}`")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precision shortfall: wanted order {wanted}, reached {reached}")]
    Precision { wanted: String, reached: String },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn non_generic(msg: impl Into<String>) -> Error {
    Error::NonGenericParameter(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
