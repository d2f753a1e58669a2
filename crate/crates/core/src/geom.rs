//! Points, frames, and rotations on the unit 2-sphere.
//!
//! The fixed conventions (see the crate docs) are:
//!
//! * azimuth reference: the world x-axis marks `τ = 0` for the pole
//!   `N = (0, 0, 1)`; for any other pole, coordinates are conjugated through
//!   [`Rotation::to_pole`];
//! * circle orientation: on the great circle with pole `ω`, the angle `φ`
//!   runs clockwise as seen from the tip of `ω`, i.e. the `φ = π/2`
//!   direction is `e_ref × ω`.
//!
//! The orientation choice is not arbitrary decoration: it is the one for
//! which the consistency recurrences validated in
//! [`crate::transforms::recurrence_residual`] hold with the printed signs.

use crate::error::{Error, Result};
use std::f64::consts::{PI, TAU};

/// Two directions are considered (anti)parallel, and their mutual
/// tangential projection degenerate, when `|⟨a, b⟩| ≥ 1 − DEGENERACY_EPS`.
/// At that threshold the projection norm is ~1.4e-5 and normalizing it
/// amplifies rounding beyond the accuracy targets of the transforms.
pub const DEGENERACY_EPS: f64 = 1e-10;

/// A point or direction on the unit sphere, stored as its Cartesian
/// components with `‖·‖ = 1` within 1e-12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitVector {
    /// World North Pole `(0, 0, 1)`.
    pub const NORTH: UnitVector = UnitVector { x: 0.0, y: 0.0, z: 1.0 };
    /// World x-axis, the azimuth reference.
    pub const X: UnitVector = UnitVector { x: 1.0, y: 0.0, z: 0.0 };
    /// World y-axis.
    pub const Y: UnitVector = UnitVector { x: 0.0, y: 1.0, z: 0.0 };

    /// Normalizes `(x, y, z)`; fails on near-zero input.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !(norm > 1e-12) || !norm.is_finite() {
            return Err(Error::DegenerateVector { norm });
        }
        Ok(Self { x: x / norm, y: y / norm, z: z / norm })
    }

    /// Wraps components that are already unit length (within 1e-12).
    /// Panics in debug builds otherwise; use [`UnitVector::new`] for
    /// untrusted input.
    pub fn from_normalized(x: f64, y: f64, z: f64) -> Self {
        debug_assert!(((x * x + y * y + z * z).sqrt() - 1.0).abs() < 1e-12);
        Self { x, y, z }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Cross product; not unit length in general.
    pub fn cross(&self, other: &UnitVector) -> (f64, f64, f64) {
        (
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_error(&self) -> f64 {
        ((self.x * self.x + self.y * self.y + self.z * self.z).sqrt() - 1.0).abs()
    }

    /// Antipodal point.
    pub fn antipode(&self) -> UnitVector {
        UnitVector { x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl std::ops::Neg for UnitVector {
    type Output = UnitVector;
    fn neg(self) -> UnitVector {
        self.antipode()
    }
}

/// Pole-relative spherical coordinates: polar angle `nu ∈ [0, π]` measured
/// from `pole`, azimuth `tau` reduced into `[0, 2π)`.
#[derive(Debug, Clone, Copy)]
pub struct SphericalCoords {
    pub pole: UnitVector,
    pub nu: f64,
    pub tau: f64,
}

impl SphericalCoords {
    /// Reduces `tau` mod 2π. `nu` must already lie in `[0, π]` (allowing
    /// 1e-9 slack for round trips through `acos`).
    pub fn new(pole: UnitVector, nu: f64, tau: f64) -> Self {
        assert!(
            (-1e-9..=PI + 1e-9).contains(&nu),
            "polar angle {nu} outside [0, pi]"
        );
        Self { pole, nu: nu.clamp(0.0, PI), tau: reduce_mod_tau(tau) }
    }

    pub fn to_vector(&self) -> UnitVector {
        sph_to_vec(&self.pole, self.nu, self.tau)
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_mod_tau(tau: f64) -> f64 {
    let r = tau.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// The point at polar angle `nu` from `pole`, azimuth `tau`.
///
/// For `pole = N` this is `(sin ν cos τ, sin ν sin τ, cos ν)`; for any other
/// pole the same construction is conjugated through [`Rotation::to_pole`],
/// which anchors `τ = 0` at the transported world x-axis.
pub fn sph_to_vec(pole: &UnitVector, nu: f64, tau: f64) -> UnitVector {
    debug_assert!((-1e-9..=PI + 1e-9).contains(&nu), "nu = {nu} outside [0, pi]");
    let (sn, cn) = nu.sin_cos();
    let (st, ct) = tau.sin_cos();
    let local = [sn * ct, sn * st, cn];
    let rot = Rotation::to_pole(pole);
    let world = rot.apply_transpose(local);
    UnitVector::new(world[0], world[1], world[2]).expect("rotated unit vector")
}

/// Pole-relative coordinates of `p`: inverse of [`sph_to_vec`] up to the
/// usual azimuth ambiguity at `nu ∈ {0, π}`.
pub fn vec_to_sph(pole: &UnitVector, p: &UnitVector) -> SphericalCoords {
    let rot = Rotation::to_pole(pole);
    let local = rot.apply(p.components());
    let nu = local[2].clamp(-1.0, 1.0).acos();
    let tau = if local[0] == 0.0 && local[1] == 0.0 {
        0.0
    } else {
        reduce_mod_tau(local[1].atan2(local[0]))
    };
    SphericalCoords { pole: *pole, nu, tau }
}

/// Normalized tangential projection of `pole` onto the plane orthogonal to
/// `omega` — the reference point `φ = 0` on the great circle with pole
/// `omega`.
///
/// Equals `normalize(pole − ⟨pole, omega⟩ omega)`; in coordinates relative
/// to `pole`, an `omega = (ν, τ)` with `ν ∈ (0, π/2]` gets the reference
/// direction `(π/2 − ν, τ + π)`.
pub fn reference_direction(omega: &UnitVector, pole: &UnitVector) -> Result<UnitVector> {
    let d = omega.dot(pole);
    if d.abs() >= 1.0 - DEGENERACY_EPS {
        return Err(Error::DegenerateProjection { dot: d });
    }
    UnitVector::new(pole.x - d * omega.x, pole.y - d * omega.y, pole.z - d * omega.z)
}

/// Orthonormal frame on the great circle `S_ω`.
///
/// `e_ref` is the reference direction (projection of the chosen pole),
/// `e_quad = e_ref × omega` fixes the positive φ direction: clockwise as
/// seen from the tip of `omega`.
#[derive(Debug, Clone, Copy)]
pub struct GreatCircleFrame {
    pub omega: UnitVector,
    pub e_ref: UnitVector,
    pub e_quad: UnitVector,
}

/// Builds the circle frame for `omega` with reference pole `pole`.
pub fn great_circle_frame(omega: &UnitVector, pole: &UnitVector) -> Result<GreatCircleFrame> {
    let e_ref = reference_direction(omega, pole)?;
    let (qx, qy, qz) = e_ref.cross(omega);
    let e_quad = UnitVector::new(qx, qy, qz)?;
    Ok(GreatCircleFrame { omega: *omega, e_ref, e_quad })
}

/// The point of `S_ω` at angle `phi` from the frame's reference direction.
pub fn circle_point(frame: &GreatCircleFrame, phi: f64) -> UnitVector {
    let (s, c) = phi.sin_cos();
    UnitVector::from_normalized(
        c * frame.e_ref.x + s * frame.e_quad.x,
        c * frame.e_ref.y + s * frame.e_quad.y,
        c * frame.e_ref.z + s * frame.e_quad.z,
    )
}

/// Oriented angle `α ∈ (−π, π]` from the projection of `pole` to the
/// projection of `omega_cap` on `S_ω`, measured in the same clockwise sense
/// as `φ`.
///
/// With this angle, the weighted transform about `omega_cap` satisfies
/// `C_Ω f(ω) = cos α · Cf(ω) + sin α · Sf(ω)`.
pub fn alpha_angle(
    omega: &UnitVector,
    omega_cap: &UnitVector,
    pole: &UnitVector,
) -> Result<f64> {
    let frame = great_circle_frame(omega, pole)?;
    let proj = reference_direction(omega, omega_cap)?;
    let c = proj.dot(&frame.e_ref);
    let mut s = proj.dot(&frame.e_quad);
    // Angles below fp resolution are geometric noise; snapping keeps
    // `alpha_angle(ω, pole, pole) = 0` exact and antipodal projections at π.
    if s.abs() < 1e-15 {
        s = 0.0;
    }
    let mut alpha = s.atan2(c);
    if alpha <= -PI + 1e-12 {
        alpha = PI;
    }
    Ok(alpha)
}

/// Proper rotation (row-major 3×3, `det = +1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    m: [[f64; 3]; 3],
}

impl Rotation {
    pub const IDENTITY: Rotation =
        Rotation { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] };

    /// The rotation carrying `omega` to the North Pole.
    ///
    /// The free azimuth is fixed deterministically by frame transport: the
    /// tangential projection at `omega` of a fixed world axis (x, or y when
    /// `|⟨omega, x⟩| ≥ 0.9`) is mapped onto the projection of the same axis
    /// at N. `to_pole(N)` is the exact identity; `to_pole(−N)` is the
    /// rotation by π about the x-axis.
    pub fn to_pole(omega: &UnitVector) -> Rotation {
        let n = UnitVector::NORTH;
        if omega.x == 0.0 && omega.y == 0.0 && omega.z == 1.0 {
            return Rotation::IDENTITY;
        }
        let axis = if omega.x.abs() >= 0.9 { UnitVector::Y } else { UnitVector::X };
        // Tangent frame at omega: t1 from the anchor axis, t2 = omega × t1.
        let d = axis.dot(omega);
        let t1 = UnitVector::new(axis.x - d * omega.x, axis.y - d * omega.y, axis.z - d * omega.z)
            .expect("anchor axis not parallel to omega by construction");
        let (t2x, t2y, t2z) = omega.cross(&t1);
        // Tangent frame at N from the same anchor axis.
        let dn = axis.dot(&n);
        let u1 = UnitVector::new(axis.x - dn * n.x, axis.y - dn * n.y, axis.z - dn * n.z)
            .expect("anchor axis not parallel to N");
        let (u2x, u2y, u2z) = n.cross(&u1);
        // R = [u1 u2 N] · [t1 t2 omega]^T maps t1→u1, t2→u2, omega→N.
        let u = [[u1.x, u2x, n.x], [u1.y, u2y, n.y], [u1.z, u2z, n.z]];
        let t = [[t1.x, t2x, omega.x], [t1.y, t2y, omega.y], [t1.z, t2z, omega.z]];
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| u[i][k] * t[j][k]).sum();
            }
        }
        Rotation { m }
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    /// Applies the inverse (= transpose) rotation.
    pub fn apply_transpose(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[1][0] * v[1] + m[2][0] * v[2],
            m[0][1] * v[0] + m[1][1] * v[1] + m[2][1] * v[2],
            m[0][2] * v[0] + m[1][2] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn apply_unit(&self, v: &UnitVector) -> UnitVector {
        let w = self.apply(v.components());
        UnitVector::new(w[0], w[1], w[2]).expect("rotation preserves norm")
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max deviation of `R Rᵀ` from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| self.m[i][k] * self.m[j][k]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}
