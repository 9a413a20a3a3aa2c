use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} too large, must be below 2^63")]
    ModulusTooLarge(u64),

    #[error("operation undefined for the void complex")]
    VoidComplex,

    #[error("face {{{0}}} is not in the complex")]
    FaceNotInComplex(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not a subcomplex")]
    NotSubcomplex(String),

    #[error("no linear system of parameters found over GF({p}) after {attempts} attempts")]
    LsopSearchExhausted { p: u64, attempts: u32 },

    #[error("candidate forms are not a linear system of parameters")]
    NotLsop,

    #[error("saturation chain did not stabilize after {0} steps")]
    SaturationDivergence(u32),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("random complex sampling produced no faces")]
    EmptySample,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
