use thiserror::Error;

use crate::hom_lie::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not an involution (its square is not the identity)")]
    NotInvolution,

    #[error("matrix is singular")]
    Singular,

    #[error("letter {letter} out of range for dimension {dim}")]
    LetterOutOfRange { letter: usize, dim: usize },

    #[error("tensor words must be nonempty")]
    EmptyWord,

    #[error("linear map does not intertwine the twisting maps")]
    NotIntertwining,

    #[error("map is not an automorphism of the bracket")]
    NotAutomorphism,

    #[error("Hom-associative axiom `{axiom}` fails at basis triple {witness:?}")]
    HomAssocAxiom { axiom: &'static str, witness: Vec<usize> },

    #[error("Hom-Lie axioms fail: {0}")]
    Axioms(AxiomReport),

    #[error("positions {position} and {next} do not form an inversion", next = position + 1)]
    NotAnInversion { position: usize },

    #[error("adapted basis does not match the algebra")]
    BasisMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown basis name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
