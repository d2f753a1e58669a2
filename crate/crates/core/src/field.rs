//! Evaluable scalar fields on the sphere.
//!
//! A [`SphereField`] is any deterministic map from unit vectors to reals.
//! The two concrete backings are [`AnalyticField`] (a closure) and
//! [`GridField`] (bilinear interpolation of a `(ν, τ)` sample grid with
//! periodic τ wrap). [`EvenPart`]/[`OddPart`] split a field into its
//! symmetric and antisymmetric components under the antipodal map.

use crate::geom::{vec_to_sph, UnitVector};
use std::f64::consts::{PI, TAU};

/// Smoothness class of a field, consulted by derivative-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Continuous,
    C1,
    Analytic,
}

/// A deterministic real-valued function on the unit sphere.
pub trait SphereField: Sync {
    fn eval(&self, p: &UnitVector) -> f64;

    fn smoothness(&self) -> Smoothness {
        Smoothness::Analytic
    }
}

impl<F: SphereField + ?Sized> SphereField for &F {
    fn eval(&self, p: &UnitVector) -> f64 {
        (**self).eval(p)
    }
    fn smoothness(&self) -> Smoothness {
        (**self).smoothness()
    }
}

impl<F: SphereField + ?Sized> SphereField for Box<F> {
    fn eval(&self, p: &UnitVector) -> f64 {
        (**self).eval(p)
    }
    fn smoothness(&self) -> Smoothness {
        (**self).smoothness()
    }
}

impl<F: SphereField + ?Sized> SphereField for std::sync::Arc<F> {
    fn eval(&self, p: &UnitVector) -> f64 {
        (**self).eval(p)
    }
    fn smoothness(&self) -> Smoothness {
        (**self).smoothness()
    }
}

/// Closure-backed field.
pub struct AnalyticField<F> {
    f: F,
    smoothness: Smoothness,
}

impl<F: Fn(&UnitVector) -> f64 + Sync> AnalyticField<F> {
    pub fn new(f: F) -> Self {
        Self { f, smoothness: Smoothness::Analytic }
    }

    pub fn with_smoothness(f: F, smoothness: Smoothness) -> Self {
        Self { f, smoothness }
    }
}

impl<F: Fn(&UnitVector) -> f64 + Sync> SphereField for AnalyticField<F> {
    fn eval(&self, p: &UnitVector) -> f64 {
        (self.f)(p)
    }
    fn smoothness(&self) -> Smoothness {
        self.smoothness
    }
}

/// Even part `f⁺(ω) = (f(ω) + f(−ω))/2`.
pub struct EvenPart<F>(pub F);

impl<F: SphereField> SphereField for EvenPart<F> {
    fn eval(&self, p: &UnitVector) -> f64 {
        0.5 * (self.0.eval(p) + self.0.eval(&p.antipode()))
    }
    fn smoothness(&self) -> Smoothness {
        self.0.smoothness()
    }
}

/// Odd part `f⁻(ω) = (f(ω) − f(−ω))/2`.
pub struct OddPart<F>(pub F);

impl<F: SphereField> SphereField for OddPart<F> {
    fn eval(&self, p: &UnitVector) -> f64 {
        0.5 * (self.0.eval(p) - self.0.eval(&p.antipode()))
    }
    fn smoothness(&self) -> Smoothness {
        self.0.smoothness()
    }
}

/// Splits a field into `(f⁺, f⁻)` with `f⁺ + f⁻ = f` pointwise.
pub fn even_odd_split<F: SphereField>(field: &F) -> (EvenPart<&F>, OddPart<&F>) {
    (EvenPart(field), OddPart(field))
}

/// How a grid-backed field behaves under the antipodal map `ω → −ω`
/// (equivalently `(ν, τ) → (π − ν, τ + π)`), used to extend half-sphere
/// sample grids to the full sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodalParity {
    Even,
    Odd,
}

/// Bilinear interpolant of samples on a rectilinear `(ν, τ)` grid.
///
/// * τ interpolation wraps with period 2π;
/// * ν is clamped to the sampled range (constant extension beyond the first
///   and last rows), so grids that include rows at ν = 0 or π behave like
///   pole-consistent fields as long as those rows are constant;
/// * values are looked up relative to the grid's `pole` using the crate's
///   global azimuth convention.
pub struct GridField {
    pole: UnitVector,
    nu_nodes: Vec<f64>,
    tau_nodes: Vec<f64>,
    /// Row-major `[nu][tau]`.
    values: Vec<f64>,
}

impl GridField {
    /// `values[i * tau_nodes.len() + j]` is the sample at
    /// `(nu_nodes[i], tau_nodes[j])`. ν nodes must be strictly increasing in
    /// `[0, π]`; τ nodes strictly increasing in `[0, 2π)`.
    pub fn new(
        pole: UnitVector,
        nu_nodes: Vec<f64>,
        tau_nodes: Vec<f64>,
        values: Vec<f64>,
    ) -> crate::Result<Self> {
        use crate::error::Error;
        if nu_nodes.len() < 2 || tau_nodes.len() < 2 {
            return Err(Error::InvalidProfile { reason: "grid needs >= 2 nodes per axis".into() });
        }
        if values.len() != nu_nodes.len() * tau_nodes.len() {
            return Err(Error::InvalidProfile {
                reason: format!(
                    "{} values for {}x{} grid",
                    values.len(),
                    nu_nodes.len(),
                    tau_nodes.len()
                ),
            });
        }
        if nu_nodes.windows(2).any(|w| w[1] <= w[0]) || tau_nodes.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(Error::InvalidProfile { reason: "grid nodes not increasing".into() });
        }
        if nu_nodes[0] < -1e-12 || *nu_nodes.last().unwrap() > PI + 1e-12 {
            return Err(Error::InvalidProfile { reason: "nu nodes outside [0, pi]".into() });
        }
        if tau_nodes[0] < 0.0 || *tau_nodes.last().unwrap() >= TAU {
            return Err(Error::InvalidProfile { reason: "tau nodes outside [0, 2pi)".into() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile { reason: "non-finite grid value".into() });
        }
        Ok(Self { pole, nu_nodes, tau_nodes, values })
    }

    /// Extends half-sphere samples (ν rows in `(0, π/2]`) to the full sphere
    /// using the field's antipodal parity: `v(π − ν, τ + π) = ±v(ν, τ)`.
    ///
    /// `Ff` and `Cf` are even under `ω → −ω` (the circle and its reference
    /// direction are unchanged, the angle flips sign); `Sf` is odd.
    pub fn from_half_sphere(
        pole: UnitVector,
        nu_nodes: Vec<f64>,
        tau_nodes: Vec<f64>,
        values: Vec<f64>,
        parity: AntipodalParity,
    ) -> crate::Result<Self> {
        let nt = tau_nodes.len();
        let nn = nu_nodes.len();
        if values.len() != nn * nt {
            return Err(crate::error::Error::InvalidProfile {
                reason: format!("{} values for {}x{} half grid", values.len(), nn, nt),
            });
        }
        let sign = match parity {
            AntipodalParity::Even => 1.0,
            AntipodalParity::Odd => -1.0,
        };
        let mut full_nu = nu_nodes.clone();
        let mut full_values = values.clone();
        // Mirror rows ν → π − ν in descending source order, skipping an
        // exact equator row to keep nodes strictly increasing.
        for i in (0..nn).rev() {
            let mirrored = PI - nu_nodes[i];
            if (mirrored - nu_nodes[nn - 1]).abs() < 1e-12 || mirrored <= nu_nodes[nn - 1] {
                continue;
            }
            full_nu.push(mirrored);
            for j in 0..nt {
                // τ + π lands between τ nodes in general; resample by the
                // periodic shift of the source row.
                let shifted = shift_half_turn(&tau_nodes, &values[i * nt..(i + 1) * nt], j);
                full_values.push(sign * shifted);
            }
        }
        Self::new(pole, full_nu, tau_nodes, full_values)
    }

    pub fn pole(&self) -> UnitVector {
        self.pole
    }

    fn value_at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.tau_nodes.len() + j]
    }

    /// Bilinear interpolation at pole-relative `(nu, tau)`.
    pub fn interpolate(&self, nu: f64, tau: f64) -> f64 {
        let nn = self.nu_nodes.len();
        let nt = self.tau_nodes.len();
        // ν bracket with clamping.
        let (i0, i1, fnu) = bracket_clamped(&self.nu_nodes, nu);
        // τ bracket with periodic wrap.
        let tau = tau.rem_euclid(TAU);
        let (j0, j1, ftau) = if tau < self.tau_nodes[0] {
            // Below the first node: wrap from the last node.
            let span = self.tau_nodes[0] + TAU - self.tau_nodes[nt - 1];
            (nt - 1, 0, (tau + TAU - self.tau_nodes[nt - 1]) / span)
        } else if tau >= self.tau_nodes[nt - 1] {
            let span = self.tau_nodes[0] + TAU - self.tau_nodes[nt - 1];
            (nt - 1, 0, (tau - self.tau_nodes[nt - 1]) / span)
        } else {
            let j = self.tau_nodes.partition_point(|&t| t <= tau) - 1;
            let span = self.tau_nodes[j + 1] - self.tau_nodes[j];
            (j, j + 1, (tau - self.tau_nodes[j]) / span)
        };
        let _ = nn;
        let v00 = self.value_at(i0, j0);
        let v01 = self.value_at(i0, j1);
        let v10 = self.value_at(i1, j0);
        let v11 = self.value_at(i1, j1);
        let r0 = v00 + (v01 - v00) * ftau;
        let r1 = v10 + (v11 - v10) * ftau;
        r0 + (r1 - r0) * fnu
    }

    /// Max spread of the interpolated value across τ at a pole row; the
    /// pole-consistency invariant wants this ≤ 1e-8 when a ν = 0 row exists.
    pub fn pole_spread(&self) -> f64 {
        if self.nu_nodes[0] > 1e-12 {
            return 0.0;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for j in 0..self.tau_nodes.len() {
            let v = self.value_at(0, j);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    }
}

fn shift_half_turn(tau_nodes: &[f64], row: &[f64], j: usize) -> f64 {
    // Value of the row at tau_nodes[j] + π, by linear interpolation with wrap.
    let nt = tau_nodes.len();
    let target = (tau_nodes[j] + PI).rem_euclid(TAU);
    // Uniform grids hit a node exactly when nt is even; fall back to lerp.
    for (k, &t) in tau_nodes.iter().enumerate() {
        if (t - target).abs() < 1e-12 {
            return row[k];
        }
    }
    let (k0, k1, f) = if target < tau_nodes[0] || target >= tau_nodes[nt - 1] {
        let span = tau_nodes[0] + TAU - tau_nodes[nt - 1];
        let off = if target < tau_nodes[0] {
            target + TAU - tau_nodes[nt - 1]
        } else {
            target - tau_nodes[nt - 1]
        };
        (nt - 1, 0, off / span)
    } else {
        let k = tau_nodes.partition_point(|&t| t <= target) - 1;
        (k, k + 1, (target - tau_nodes[k]) / (tau_nodes[k + 1] - tau_nodes[k]))
    };
    row[k0] + (row[k1] - row[k0]) * f
}

fn bracket_clamped(nodes: &[f64], x: f64) -> (usize, usize, f64) {
    let n = nodes.len();
    if x <= nodes[0] {
        return (0, 0, 0.0);
    }
    if x >= nodes[n - 1] {
        return (n - 1, n - 1, 0.0);
    }
    let i = nodes.partition_point(|&t| t <= x) - 1;
    (i, i + 1, (x - nodes[i]) / (nodes[i + 1] - nodes[i]))
}

impl SphereField for GridField {
    fn eval(&self, p: &UnitVector) -> f64 {
        let c = vec_to_sph(&self.pole, p);
        self.interpolate(c.nu, c.tau)
    }
    fn smoothness(&self) -> Smoothness {
        Smoothness::Continuous
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::sph_to_vec;
    use crate::rng::SplitMix64;

    #[test]
    fn even_odd_split_reassembles() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3) + 0.5 * p.x() + 2.0);
        let (fp, fm) = even_odd_split(&f);
        let mut rng = SplitMix64::new(1);
        for _ in 0..100 {
            let z = rng.next_symmetric();
            let t = rng.next_unit() * TAU;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let p = UnitVector::new(r * t.cos(), r * t.sin(), z).unwrap();
            let total = fp.eval(&p) + fm.eval(&p);
            assert!((total - f.eval(&p)).abs() < 1e-14);
            // Evenness/oddness by construction.
            assert!((fp.eval(&p) - fp.eval(&p.antipode())).abs() < 1e-14);
            assert!((fm.eval(&p) + fm.eval(&p.antipode())).abs() < 1e-14);
        }
    }

    #[test]
    fn split_of_odd_field() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3));
        let (fp, fm) = even_odd_split(&f);
        let p = UnitVector::new(0.3, -0.4, 0.86).unwrap();
        assert!(fp.eval(&p).abs() < 1e-15);
        assert!((fm.eval(&p) - f.eval(&p)).abs() < 1e-15);
    }

    #[test]
    fn split_of_mixed_field() {
        let f = AnalyticField::new(|p: &UnitVector| 1.0 + p.z());
        let (fp, fm) = even_odd_split(&f);
        let p = UnitVector::new(0.1, 0.2, 0.97).unwrap();
        assert!((fp.eval(&p) - 1.0).abs() < 1e-15);
        assert!((fm.eval(&p) - p.z()).abs() < 1e-15);
    }

    #[test]
    fn grid_field_reproduces_smooth_function() {
        let n = UnitVector::NORTH;
        let truth = |nu: f64, tau: f64| nu.sin() * (2.0 * tau).cos() + nu.cos();
        let nn = 128;
        let nt = 128;
        let nu_nodes: Vec<f64> = (0..=nn).map(|i| PI * i as f64 / nn as f64).collect();
        let tau_nodes: Vec<f64> = (0..nt).map(|j| TAU * j as f64 / nt as f64).collect();
        let mut values = Vec::new();
        for &nu in &nu_nodes {
            for &tau in &tau_nodes {
                values.push(truth(nu, tau));
            }
        }
        let g = GridField::new(n, nu_nodes, tau_nodes, values).unwrap();
        let mut rng = SplitMix64::new(9);
        for _ in 0..200 {
            let nu = rng.next_unit() * PI;
            let tau = rng.next_unit() * TAU;
            let p = sph_to_vec(&n, nu, tau);
            let err = (g.eval(&p) - truth(nu, tau)).abs();
            assert!(err < 2e-3, "err = {err} at nu={nu} tau={tau}");
        }
    }

    #[test]
    fn grid_field_pole_consistency() {
        let n = UnitVector::NORTH;
        let nu_nodes = vec![0.0, 0.5, 1.0];
        let tau_nodes = vec![0.0, PI / 2.0, PI, 3.0 * PI / 2.0];
        // Constant pole row: spread 0.
        let values = vec![
            2.0, 2.0, 2.0, 2.0, //
            1.0, 1.5, 1.0, 0.5, //
            0.0, 0.1, 0.2, 0.3,
        ];
        let g = GridField::new(n, nu_nodes, tau_nodes, values).unwrap();
        assert!(g.pole_spread() <= 1e-8);
    }

    #[test]
    fn half_sphere_parity_extension() {
        let n = UnitVector::NORTH;
        let nn = 32;
        let nt = 64;
        let nu_nodes: Vec<f64> =
            (1..=nn).map(|i| (PI / 2.0) * i as f64 / nn as f64).collect();
        let tau_nodes: Vec<f64> = (0..nt).map(|j| TAU * j as f64 / nt as f64).collect();
        // An even function of ω: g(ν, τ) = sin ν · cos ν · cos τ has
        // g(π − ν, τ + π) = g(ν, τ)? sin(π−ν)cos(π−ν)cos(τ+π) = sin·(−cos)·(−cos) ✓.
        let even_fn = |nu: f64, tau: f64| nu.sin() * nu.cos() * tau.cos();
        let mut values = Vec::new();
        for &nu in &nu_nodes {
            for &tau in &tau_nodes {
                values.push(even_fn(nu, tau));
            }
        }
        let g = GridField::from_half_sphere(
            n,
            nu_nodes,
            tau_nodes,
            values,
            AntipodalParity::Even,
        )
        .unwrap();
        let mut rng = SplitMix64::new(77);
        for _ in 0..200 {
            let nu = 0.1 + rng.next_unit() * (PI - 0.2);
            let tau = rng.next_unit() * TAU;
            let p = sph_to_vec(&n, nu, tau);
            let err = (g.eval(&p) - even_fn(nu, tau)).abs();
            assert!(err < 5e-3, "err = {err} at nu={nu}");
        }
    }
}
