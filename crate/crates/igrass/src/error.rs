use thiserror::Error;

/// Errors produced across the library. Validation-style failures carry
/// enough context to print a useful diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("grading is not pointed")]
    NotPointed,

    #[error("ample class is degenerate: {0}")]
    ChamberDegenerate(String),

    #[error("cannot verify face structure: {0}")]
    UnknownStructure(String),

    #[error("anticanonical class is not integral: 2*sum(w_ij) = ({0}, {1}) is not divisible by n - 1 = {2}")]
    NonIntegralClass(i64, i64, i64),

    #[error("no positivity certificate found within the search bound; grading is not pointed")]
    NoCertificate,

    #[error("oracle budget exceeded: lambda*target = {needed} > bound {bound}")]
    OracleTooLarge { needed: i64, bound: i64 },

    #[error("restriction needs a variable permutation: {0}")]
    NeedsPermutation(String),

    #[error("class is ample: no contraction")]
    NoContraction,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
