use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial uses column {column} but the ring has width {width}")]
    WidthViolation { column: u32, width: u32 },

    #[error("row {row} is outside 1..={rows}")]
    RowOutOfRange { row: u32, rows: u32 },

    #[error("ideals live in rings with {left} and {right} rows")]
    RowMismatch { left: u32, right: u32 },

    #[error("delta is undefined for the {0} ideal")]
    UndefinedDelta(&'static str),

    #[error("the zero ideal has infinitely many standard monomials")]
    InfiniteCount,

    #[error("expected a proper nonzero ideal, got the {0} ideal")]
    Degenerate(&'static str),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{what} has size {size}, above the cap {cap}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not applicable: {0}")]
    NotApplicable(String),
}
