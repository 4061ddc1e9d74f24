use alloc::string::String;

/// Errors raised by the combinatorial routines.
///
/// Each variant names a violated precondition. `Internal` is reserved for
/// broken invariants that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} is out of range (valid: 1..={len})")]
    OutOfRange { index: usize, len: usize },

    #[error("rule term {index} is zero; terms must be positive")]
    NonPositiveTerm { index: usize },

    #[error("entry e_{index} = {value} violates 0 <= e_i < {bound}")]
    EntryOutOfBounds { index: usize, value: u64, bound: u64 },

    #[error("type D ascents require the doubled rule s = (2, 4, 6, ...)")]
    WrongRule,

    #[error("signed words may not contain the letter 0")]
    ZeroLetter,

    #[error("descent statistics are undefined on the empty word")]
    EmptyWord,

    #[error("word has an odd number of negative letters")]
    OddNegatives,

    #[error("word is not a signed permutation of 1..={0}")]
    NotSignedPermutation(usize),

    #[error("word has repeated letters")]
    RepeatedLetters,

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("size parameter must be at least 1")]
    ZeroSize,

    #[error("labeling has {labels} labels but the forest has {vertices} vertices")]
    IncompleteLabeling { labels: usize, vertices: usize },

    #[error("labels must be nonzero with pairwise distinct absolute values")]
    InvalidLabeling,

    #[error("map is not a type B partition of the labeled forest")]
    NotAPartition,

    #[error("values are not compatible with the word")]
    NotCompatible,

    #[error("forest syntax error at byte {0}")]
    ForestSyntax(usize),

    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,

    #[error("closed form value at t = {0} is not an integer")]
    NonIntegral(u64),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
