//! Funk and weighted Funk transforms on the unit 2-sphere, with an
//! iterative inversion of the two-data transform `(Ff, Cf)`.
//!
//! The library is organized around a small pipeline:
//!
//! * [`geom`] — unit vectors, pole-relative spherical coordinates, great-circle
//!   frames, and the projection-angle geometry used by the pole-shifted
//!   weighted transform.
//! * [`quad`] — periodic trapezoid and Gauss–Legendre rules, plus cumulative
//!   weighted integrals over `[0, π/2]` profiles.
//! * [`field`] — evaluable scalar fields on the sphere: analytic closures,
//!   grid-backed interpolants, even/odd parts.
//! * [`transforms`] — the forward transforms `Ff`, `Cf`, `Sf`, restriction
//!   Fourier analysis, sampled transform grids, and the consistency-recurrence
//!   residuals used for validation.
//! * [`coeffs`] — exact-rational recursive coefficient tables and the
//!   trigonometric polynomials built from them.
//! * [`profiles`] — azimuthal averages of `Ff` and `Cf` at fixed polar
//!   distance from a reconstruction point.
//! * [`inversion`] — the series reconstruction of `f` at a point from
//!   `(Ff, Cf, Sf)` data, the independent ODE-iteration oracle, and
//!   convergence reporting.
//! * [`phantom`] — analytic test functions with known transforms.
//!
//! Angles are radians everywhere. All types are immutable after construction
//! and safe to share across threads; transform evaluation is pure.
//!
//! # Conventions (fixed once, used everywhere)
//!
//! * World coordinates: the default North Pole is `N = (0, 0, 1)` and the
//!   world x-axis marks azimuth `τ = 0`, so a point at polar angle `ν` and
//!   azimuth `τ` relative to `N` is `(sin ν cos τ, sin ν sin τ, cos ν)`.
//! * On the great circle with pole `ω`, the angular coordinate `φ` starts at
//!   the reference direction (the normalized tangential projection of the
//!   chosen pole onto the plane orthogonal to `ω`) and increases clockwise as
//!   seen from the tip of `ω`: the `φ = π/2` direction is `e_ref × ω`.
//! * Rotations carrying a point to the North Pole anchor their free azimuth
//!   by transporting the tangential projection of a fixed world axis (x, with
//!   y as fallback near `±x`).

pub mod coeffs;
pub mod error;
pub mod field;
pub mod geom;
pub mod inversion;
pub mod phantom;
pub mod profiles;
pub mod quad;
pub mod rng;
pub mod transforms;

pub use error::{Error, Result};
pub use field::{AnalyticField, EvenPart, GridField, OddPart, Smoothness, SphereField};
pub use geom::{GreatCircleFrame, Rotation, SphericalCoords, UnitVector};

/// Default number of equiangular nodes on a great circle.
pub const DEFAULT_CIRCLE_NODES: usize = 256;
/// Default Gauss–Legendre order for interval integrals.
pub const DEFAULT_GL_ORDER: usize = 128;
/// Default node count for cumulative-integral profile grids.
pub const DEFAULT_CUMULATIVE_NODES: usize = 512;
/// Default node count for the ODE-oracle profile grids. The oracle iterates
/// cumulative integrals with piecewise-linear profiles (O(h²) per step), so
/// it wants a much denser grid than the spectral reconstruction path.
pub const DEFAULT_ORACLE_NODES: usize = 4096;
/// Default azimuthal node count for transform grids and profile averages.
pub const DEFAULT_TAU_NODES: usize = 64;
/// Default polar node count for transform grids.
pub const DEFAULT_NU_NODES: usize = 32;
/// Default truncation cap for the reconstruction series.
pub const DEFAULT_SERIES_CAP: usize = 20;
/// Default stopping tolerance for auto-truncated reconstructions,
/// applied to `|S_n − S_{n−1}|`.
pub const DEFAULT_SERIES_TOL: f64 = 1e-8;
/// Default coefficient-table depth.
pub const DEFAULT_KMAX: usize = 20;
