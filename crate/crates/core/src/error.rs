use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition token `{token}`: {reason}")]
    MalformedToken { token: String, reason: &'static str },

    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("inner partition ({inner}) is not contained in outer partition ({outer})")]
    NotContained { outer: String, inner: String },

    #[error("quiver has an oriented cycle")]
    OrientedCycle,

    #[error("arrow ({tail}, {head}) refers to a vertex outside 0..{vertices}")]
    BadArrow {
        tail: usize,
        head: usize,
        vertices: usize,
    },

    #[error("vector has {got} entries but the quiver has {expected} vertices")]
    QuiverMismatch { expected: usize, got: usize },

    #[error("dimension vectors must be nonnegative")]
    NegativeDimension,

    #[error("a generalized Kronecker quiver needs at least one arrow")]
    NoArrows,

    #[error("exceptional pair fails Euler-form condition: {0}")]
    NotExceptional(String),

    #[error("exponents sum to {got}, expected {expected}")]
    ExponentSum { expected: u32, got: u32 },

    #[error("at least {needed} values are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("rectangle ({width}^{height}) must have positive width and height")]
    EmptyRectangle { width: u32, height: u32 },

    #[error("invalid range {lo}..={hi}")]
    BadRange { lo: u32, hi: u32 },

    #[error("constructed filling is not a Littlewood-Richardson filling")]
    InvalidConstruction,
}

pub type Result<T> = std::result::Result<T, Error>;
