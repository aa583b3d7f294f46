use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideal is not artinian: no pure power of variable {variable}")]
    NotArtinian { variable: usize },

    #[error("the zero ideal has no presentation")]
    ZeroIdeal,

    #[error("staircase of {cells} lattice cells exceeds the limit of {limit}")]
    TooLarge { cells: u128, limit: u128 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("colength {d} exceeds the budget of {limit}; pass an explicit override")]
    Budget { d: u32, limit: u32 },

    #[error("binomial coefficient overflowed 64 bits")]
    Overflow,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
