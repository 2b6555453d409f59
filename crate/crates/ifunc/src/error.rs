//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building parameter objects or
/// evaluating contour integrals, transforms and distributions.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A gamma factor was evaluated at (numerically) a nonpositive integer.
    #[error("gamma pole at {re}{im:+}i in {location}")]
    Pole { re: f64, im: f64, location: String },

    /// The pole-separating strip for the contour abscissa is empty.
    #[error("empty pole-separating strip: left bound {left}, right bound {right}")]
    EmptyStrip { left: f64, right: f64 },

    /// The contour integral does not converge for the requested argument.
    #[error("contour integral diverges: {0}")]
    Divergence(String),

    /// The quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance unreachable: achieved {achieved:.3e} (target {target:.3e}) at height {height}")]
    Quadrature {
        achieved: f64,
        target: f64,
        height: f64,
    },

    /// Invalid argument or parameter outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A real power of a negative base was requested with a non-integer exponent.
    #[error("branch error: {0}")]
    Branch(String),

    /// A Mellin evaluation point left the strip of validity.
    #[error("s = {re}{im:+}i outside Mellin strip ({lo}, {hi})")]
    Strip { re: f64, im: f64, lo: f64, hi: f64 },

    /// The normalizing constant could not be computed.
    #[error("normalization failed: {0}")]
    Normalization(String),

    /// The density probe grid found a negative value.
    #[error("negative density at probe point x = {x}: pdf = {value:.6e}")]
    NegativeDensity { x: f64, value: f64 },

    /// The requested moment does not exist.
    #[error("moment of order {order} does not exist")]
    MomentDivergence { order: f64 },

    /// A series representation failed to converge within its term cap.
    #[error("series failed to converge within {cap} terms")]
    SeriesDivergence { cap: usize },

    /// A parameter sign restriction was violated.
    #[error("parameter restriction violated: {0}")]
    Restriction(String),

    /// Quantile bracketing failed.
    #[error("failed to bracket quantile: {0}")]
    Bracket(String),

    /// An oracle integration failed to converge.
    #[error("integration failed to converge: {0}")]
    NonConvergence(String),

    /// Input could not be parsed against a schema.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn pole(z: num_complex::Complex64, location: impl Into<String>) -> Self {
        Error::Pole {
            re: z.re,
            im: z.im,
            location: location.into(),
        }
    }
}
