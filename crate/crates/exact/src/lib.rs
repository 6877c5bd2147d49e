//! Exact arithmetic for the workspace: rationals, cyclotomic fields, sparse
//! matrices, deterministic elimination and subquotients.

pub mod cyclotomic;
pub mod echelon;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod subquotient;

pub use cyclotomic::Cyclotomic;
pub use echelon::{image_basis, inverse, kernel, rank, rank_of, solve, Reducer};
pub use matrix::{Matrix, SparseVec};
pub use rational::Rational;
pub use scalar::{Field, FieldError, Scalar};
pub use subquotient::{agree_on, induced_map, Subquotient};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("quotient generator {column} is not in the subspace")]
    NotContained { column: usize },
    #[error("vector is not in the subspace")]
    NotInSubspace,
    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),
}
