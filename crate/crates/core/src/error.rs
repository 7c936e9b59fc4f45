use thiserror::Error;

use crate::rootsys::CartanType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("support must be a nonempty set of simple indices")]
    EmptySupport,
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not regular dominant")]
    NotRegular(Vec<i64>),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("word {0:?} does not give a reduced decomposition of the longest element")]
    NotReduced(Vec<usize>),
    #[error("enumeration does not hit every root exactly once")]
    NotBijective,
    #[error("type {0} is not supported by this construction")]
    UnsupportedType(CartanType),
    #[error("support of the weight is not contained in the enumeration support")]
    SupportMismatch,
    #[error("vectors have different weights")]
    WeightMismatch,
    #[error("essential sets were computed for different enumerations")]
    EnumerationMismatch,
    #[error("valuation of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("module dimension {dim} exceeds the limit {max}")]
    TooLarge { dim: u128, max: u128 },
    #[error("module was built only to depth {built}, depth {needed} requested")]
    Truncated { built: usize, needed: usize },
    #[error("closed form and inductive computation disagree: {0}")]
    Disagreement(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a bug.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NotBijective | Error::Disagreement(_) | Error::InternalInvariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
