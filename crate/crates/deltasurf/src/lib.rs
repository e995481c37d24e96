//! Spectral laboratory for the Schrodinger operator `-Delta - alpha delta(x - Gamma)`
//! with the attractive delta interaction supported by an asymptotically planar
//! surface `Gamma` in R^3.
//!
//! The crate builds the surface geometry and its layer neighbourhood, solves the
//! one-dimensional transverse problems, discretizes the comparison operator
//! `S = -Delta_Gamma + K - M^2` and its bracketing companions `U_d^{+-}`, locates
//! true eigenvalues through the Birman-Schwinger boundary integral, squeezes
//! finite potentials onto the surface, and cross-checks everything against the
//! strong-coupling expansion `lambda_j(alpha) = -alpha^2/4 + mu_j + O(log(alpha)/alpha)`.

pub mod bracketing;
pub mod bs;
pub mod config;
pub mod geometry;
pub mod numerics;
pub mod report;
pub mod squeeze;
pub mod surface_op;
pub mod transverse;

pub use bracketing::{BracketReport, BracketRow};
pub use config::RunConfig;
pub use geometry::{GeodesicPolarProfile, GeometryGrid, LayerFields, SurfaceModel};
pub use surface_op::{SpectralResult, SymmetricOperator};

/// Errors shared by all modules of the laboratory.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The tubular map fails to be a diffeomorphism at the requested half-width.
    #[error("layer injectivity violated: {0}")]
    InjectivityViolation(String),
    /// The Jacobi field crossed zero: the surface admits no global normal
    /// parameterization at this resolution.
    #[error("conjugate point in Jacobi equation at r = {0}")]
    ConjugatePoint(f64),
    /// A transverse operator has no negative eigenvalue at these parameters.
    #[error("transverse problem has no bound state (alpha*d = {0})")]
    NoBoundState(f64),
    /// An iterative eigensolve missed its residual target.
    #[error("eigensolver failed to converge: {0}")]
    NoConvergence(String),
    /// A claimed bound was contradicted by the data used to validate it.
    #[error("validity violation: {0}")]
    ValidityViolation(String),
    /// The metric degenerated somewhere on the grid.
    #[error("degenerate metric: {0}")]
    DegenerateMetric(String),
    /// Bad run configuration.
    #[error("config error: {0}")]
    Config(String),
    /// Not enough data for the requested analysis.
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
