use smashcyc_exact::{FieldError, LinAlgError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("not a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("not a matched pair: {0}")]
    NotMatched(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error(transparent)]
    UnsupportedField(#[from] FieldError),
    #[error("not a complex: d∘d != 0 at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("not a mixed complex: {0}")]
    NotMixed(String),
    #[error("not a cyclic module: {0}")]
    NotCyclic(String),
    #[error("not a bimodule: {0}")]
    NotBimodule(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("wrong algebra: {0}")]
    WrongAlgebra(String),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

pub type Result<T> = std::result::Result<T, Error>;
