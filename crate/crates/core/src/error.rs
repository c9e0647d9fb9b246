use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed permutation `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} repeated in `{text}`")]
    RepeatedPoint { point: usize, text: String },

    #[error("generators act on different degrees ({expected} and {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group order {order} exceeds the enumeration cap {cap}; use the bounds-only pipeline")]
    CapExceeded { order: String, cap: u64 },

    #[error("element is not a member of {group}")]
    NotMember { group: String },

    #[error("eigenspace splitting did not converge: {0}")]
    Splitting(String),

    #[error("character value lifting failed: {0}")]
    Lifting(String),

    #[error("{file}:{line}: {reason}")]
    Syntax {
        file: String,
        line: usize,
        reason: String,
    },

    #[error("order mismatch for {name}: declared {declared}, computed {computed}")]
    OrderMismatch {
        name: String,
        declared: String,
        computed: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search budget exhausted: {0}")]
    SearchExhausted(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
