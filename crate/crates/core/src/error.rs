//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by geometry, quadrature, transform, and inversion
/// operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A tangential projection is undefined because the two directions are
    /// (anti)parallel within the degeneracy threshold.
    #[error("degenerate projection: directions are parallel within 1e-10 (dot = {dot})")]
    DegenerateProjection { dot: f64 },

    /// A vector with near-zero norm cannot be normalized.
    #[error("cannot normalize a near-zero vector (norm = {norm})")]
    DegenerateVector { norm: f64 },

    /// A periodic rule needs at least 4 equally spaced nodes, and an even
    /// count so that φ = 0 is a node.
    #[error("too few periodic nodes: got {got}, need an even count >= {min}")]
    TooFewNodes { got: usize, min: usize },

    /// Integration interval is empty or reversed.
    #[error("invalid integration interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    /// Gauss–Legendre order below the supported minimum.
    #[error("invalid quadrature order {order}, need >= 2")]
    InvalidOrder { order: usize },

    /// Negative weight exponent in a cumulative integral.
    #[error("invalid weight exponent {m}, need m >= 0")]
    InvalidExponent { m: i64 },

    /// A profile grid is malformed (too short, non-increasing nodes, or
    /// nodes outside [0, π/2]).
    #[error("invalid profile grid: {reason}")]
    InvalidProfile { reason: String },

    /// Requested index or argument outside the tabulated/valid range.
    #[error("out of range: {what}")]
    OutOfRange { what: String },

    /// Finite-difference stencil leaves the valid (ν, τ) domain.
    #[error("out of domain: nu = {nu} not in ({lo}, {hi}) for step h = {h}")]
    OutOfDomain { nu: f64, lo: f64, hi: f64, h: f64 },

    /// Field is not smooth enough for a derivative-based operation.
    #[error("field smoothness {found:?} insufficient, need C1 or analytic")]
    NotSmoothEnough { found: crate::field::Smoothness },

    /// Coefficient magnitude exceeded the floating-point representable range.
    #[error("coefficient table overflowed f64 range at k = {k}")]
    Overflow { k: usize },

    /// Averaged profiles are too sparse for the requested series index.
    #[error("insufficient profile: {nodes} nodes cannot support series index n = {n} (need >= {need})")]
    InsufficientProfile { nodes: usize, n: usize, need: usize },

    /// Azimuthal grid is not uniform over [0, 2π).
    #[error("nonuniform tau grid: {reason}")]
    NonuniformGrid { reason: String },

    /// Phantom name not in the catalog.
    #[error("unknown phantom '{name}'")]
    UnknownPhantom { name: String },

    /// Bad parameter string for a parameterized phantom.
    #[error("invalid phantom parameter: {reason}")]
    InvalidPhantomParam { reason: String },

    /// A transform-grid cell failed; carries the cell location for context.
    #[error("transform grid cell (nu = {nu}, tau = {tau}) failed: {source}")]
    GridCell {
        nu: f64,
        tau: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
