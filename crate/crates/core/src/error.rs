use thiserror::Error;

use crate::weights::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("({0}, {1}) is not a coprime pair")]
    NotCoprime(i64, i64),

    #[error("adjacent isotropy pairs have determinant 0")]
    IllegalDeterminant,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("matrix with determinant {0} is not unimodular")]
    NotUnimodular(i128),

    #[error("weight system is not legal:\n{0}")]
    IllegalWeightSystem(ValidationReport),

    #[error("selected isotropies {0} and {1} differ")]
    IsotropyMismatch(String, String),

    #[error("summands carry different orientations")]
    OrientationMismatch,

    #[error("junction determinant between {0} and {1} vanishes")]
    IllegalJunction(String, String),

    #[error("selection {0} does not exist in the weight system")]
    InvalidSelection(String),

    #[error("no solution with entries bounded by {0}")]
    NoSolutionInBound(i64),

    #[error("illegal parameters: {0}")]
    IllegalParameters(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
