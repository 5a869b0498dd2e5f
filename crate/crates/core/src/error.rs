use thiserror::Error;

/// Errors produced by the simulation library and CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("site index {site} out of range 1..={max}")]
    SiteOutOfRange { site: usize, max: usize },

    #[error("invalid measurement program: {0}")]
    InvalidProgram(String),

    #[error("z = {z} outside schedule span [0, {span}]")]
    ZOutOfSpan { z: f64, span: f64 },

    #[error("state vector not normalized: |norm^2 - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("step too coarse: ||H||*h = {hnorm:.3} exceeds 0.5, increase step count")]
    StepTooCoarse { hnorm: f64 },

    #[error("operation requires a two-level system, got {m} sites")]
    NotTwoLevel { m: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("band {band} degenerate at (phi = {phi}, dbeta = {dbeta}): gap {gap:.3e} below tolerance")]
    Degeneracy {
        band: usize,
        phi: f64,
        dbeta: f64,
        gap: f64,
    },

    #[error("overlap underflow: |<a|b>|^2 = {value:.3e} below 1e-14, decay rate diverges")]
    OverlapUnderflow { value: f64 },

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
