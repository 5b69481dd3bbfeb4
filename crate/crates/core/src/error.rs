use thiserror::Error;

/// Domain errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not irreducible over the rationals")]
    NotIrreducible,
    #[error("polynomial is not totally real")]
    NotTotallyReal,
    #[error("basis is not a ring basis containing 1 closed under multiplication")]
    BasisNotRing,
    #[error("defining polynomial degree {0} exceeds the supported maximum of 8")]
    DegreeTooLarge(usize),
    #[error("operands belong to different orders")]
    MixedOrders,
    #[error("vector rank does not match the form")]
    RankMismatch,
    #[error("tensor diagonal is not integral in the order")]
    NotIntegralDiagonal,
    #[error("map is not a ring embedding")]
    NotAnEmbedding,
    #[error("malformed form: {0}")]
    MalformedForm(String),
    #[error("exponent vector does not sum to the declared degree")]
    NonHomogeneous,
    #[error("degree must be even for definiteness")]
    OddDegree,
    #[error("form is not totally positive definite")]
    NotPositiveDefinite,
    #[error("no nonzero m-th power lies below the target")]
    NoSuchBeta,
    #[error("Minkowski guarantee violated: no lattice point despite norm hypothesis")]
    InternalAnomaly,
    #[error("operation requires a real quadratic order")]
    NotQuadratic,
    #[error("residual could not be matched against the representative set")]
    ResidualNotClassified,
    #[error("generated target is not represented by the form")]
    TargetNotRepresented,
    #[error("search bound exceeds the configured enumeration cap")]
    BoundOverflow,
    #[error("element is not totally positive")]
    NotTotallyPositive,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
