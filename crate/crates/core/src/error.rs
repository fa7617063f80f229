use thiserror::Error;

use crate::rep_model::IndexPair;

pub type Result<T> = std::result::Result<T, Error>;

fn pairs(idx: &[IndexPair]) -> String {
    idx.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Every failure the library can report. Each variant maps to a stable
/// machine-readable code (see [`Error::code`]) used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("representation descriptor has no summands")]
    EmptyDescriptor,
    #[error("summand {0} has a negative symmetric-power degree")]
    NegativeSymmetricDegree(usize),
    #[error("representation is not generic")]
    NotGeneric,
    #[error("representation is not uniform")]
    NotUniform,
    #[error("moment map can vanish: k_a + 2 l_a takes both signs or zero")]
    MomentHitsZero,
    #[error("ray direction must be nonzero")]
    ZeroRay,
    #[error("ray lies on the diagonal nu1 = nu2")]
    DiagonalRay,
    #[error("ray is critical, witnesses {}", pairs(.0))]
    CriticalRay(Vec<IndexPair>),
    #[error("ray lies on a wedge boundary")]
    OnBoundary,
    #[error("ray misses the moment image")]
    OutsideImage,
    #[error("one side of the weight partition is empty")]
    EmptySide,
    #[error("probe ray is not strictly inside the wedge")]
    ProbeOutsideWedge,
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("Segre generators need p, q >= 2")]
    TooSmall,
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("block of length {got} does not match degree {k}")]
    BadLength { k: usize, got: usize },
    #[error("vector has zero norm")]
    ZeroVector,
    #[error("gave up after {0} resampling attempts")]
    MaxResamplesExceeded(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyDescriptor => "empty_descriptor",
            Error::NegativeSymmetricDegree(_) => "negative_symmetric_degree",
            Error::NotGeneric => "not_generic",
            Error::NotUniform => "not_uniform",
            Error::MomentHitsZero => "moment_hits_zero",
            Error::ZeroRay => "zero_ray",
            Error::DiagonalRay => "diagonal_ray_unsupported",
            Error::CriticalRay(_) => "critical_ray",
            Error::OnBoundary => "on_boundary",
            Error::OutsideImage => "outside_image",
            Error::EmptySide => "empty_side",
            Error::ProbeOutsideWedge => "probe_outside_wedge",
            Error::OutOfRange(_) => "out_of_range",
            Error::TooSmall => "too_small",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::BadLength { .. } => "bad_length",
            Error::ZeroVector => "zero_vector",
            Error::MaxResamplesExceeded(_) => "max_resamples_exceeded",
            Error::Malformed(_) => "malformed_input",
        }
    }
}
