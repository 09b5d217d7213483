use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two classes: rejections of invalid input (bad Cartan
/// data, non-dominant weights, malformed partitions, ...) and internal
/// invariant violations that indicate a bug rather than a bad argument
/// (`InexactDivision`, `UnclassifiableSubsystem`, `NotAPartition`,
/// `Internal`). [`Error::is_invalid_input`] distinguishes the two.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan datum: {0}")]
    InvalidCartanDatum(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("partition totals differ: {0}")]
    TotalMismatch(String),
    #[error("sign type is not admissible")]
    NotAdmissible,
    #[error("no parabolic subset of simple roots matches type {0}")]
    NoParabolicMatch(String),
    #[error("subsystem component matches no standard Dynkin diagram")]
    UnclassifiableSubsystem,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("zero polynomial has no vanishing order")]
    ZeroPolynomial,
    #[error("sequence is not weakly decreasing: {0}")]
    NotAPartition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's input, as opposed to an
    /// internal invariant failure.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::InvalidCartanDatum(_)
                | Error::DimensionMismatch(_)
                | Error::NotDominant(_)
                | Error::InvalidLevel(_)
                | Error::InvalidArgument(_)
                | Error::InvalidPartition(_)
                | Error::TooLarge(_)
                | Error::TotalMismatch(_)
        )
    }
}
