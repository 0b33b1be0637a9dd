use thiserror::Error;

use crate::permcore::{Pattern, Word};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {0} occurs more than once")]
    RepeatedLetter(u32),

    #[error("`{0}` is not a permutation of 1..{len}", len = .0.len())]
    NotPermutation(Word),

    #[error("invalid pattern `{0}`: a pattern must be a permutation of 1..k")]
    InvalidPattern(String),

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("`{word}` contains the forbidden pattern {pattern}")]
    ContainsPattern { word: Word, pattern: Pattern },

    #[error("entry e_{index} = {value} violates 0 <= e_i < i")]
    InvalidInversionSequence { index: usize, value: u32 },

    #[error("sequence ({entries}) contains the forbidden pattern {pattern}")]
    SequenceContainsPattern { entries: String, pattern: String },

    #[error("no structural case applies to `{0}`")]
    NoCaseApplies(Word),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }
}
