use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("baton needs at least one step")]
    EmptyBaton,
    #[error("baton step {index} is not positive")]
    NonPositiveStep { index: usize },
    #[error("expected {expected} points, found {found}")]
    PointCountMismatch { expected: usize, found: usize },
    #[error("direction {direction} out of range for dimension {dim}")]
    DirectionOutOfRange { direction: usize, dim: usize },
    #[error("perturbation for step {step}, coordinate {coord} exceeds its step length")]
    PerturbationOutOfBounds { step: usize, coord: usize },
    #[error("perturbation matrix must be {rows}x{cols}")]
    PerturbationShape { rows: usize, cols: usize },
    #[error("invalid snake parameters: {0}")]
    InvalidParams(&'static str),
    #[error("contours need a_n > 1 and n >= 1")]
    ContourHypothesis,
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("consecutive points {index} and {next} coincide", next = index + 1)]
    ZeroLengthSegment { index: usize },
    #[error("equivalence constant must be positive")]
    NonPositiveConstant,
    #[error("facet functionals do not span the space")]
    DegenerateFacets,
    #[error("embedding is not invertible (needs as many facets as dimensions)")]
    NonInvertibleEmbedding,
    #[error("point is outside the image of the embedding")]
    OutsideImage,
    #[error("search region is empty")]
    EmptyRegion,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
