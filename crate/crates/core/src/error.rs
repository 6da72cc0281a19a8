use thiserror::Error;

use crate::weights::{Weight, Word};

#[derive(Debug, Error)]
pub enum Error {
    #[error("division does not stay in the ring")]
    NonDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid specialisation: {0}")]
    InvalidSpecialization(String),
    #[error("weight {0} is not a weight of the fundamental module")]
    WeightNotInModule(Weight),
    #[error("words do not match: {0} vs {1}")]
    MismatchedWords(Word, Word),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("not a dominant subsequence of {word}: {reason}")]
    NotADominantSubsequence { word: Word, reason: String },
    #[error("words {0} and {1} have different weights")]
    WeightMismatch(Word, Word),
    #[error("vector is not in the span of the basis")]
    NotInSpan,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
