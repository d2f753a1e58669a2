//! Forward transforms on great circles.
//!
//! For a field `f` and a circle pole `ω`, the restriction `f_ω(φ)` is `f`
//! sampled along the great circle `S_ω`, with `φ` measured from the
//! reference direction (projection of the chosen pole). The transforms are
//! normalized circle integrals of the restriction:
//!
//! * `Ff(ω)   = (1/2π) ∫ f_ω(φ) dφ` — the Funk transform;
//! * `Cf(ω)   = (1/2π) ∫ cos φ · f_ω(φ) dφ`;
//! * `Sf(ω)   = (1/2π) ∫ sin φ · f_ω(φ) dφ`;
//! * `C_Ω f(ω)` — as `Cf` but with the reference at the projection of `Ω`,
//!   recoverable from `(Cf, Sf)` as `cos α · Cf + sin α · Sf`.
//!
//! All integrals use the periodic trapezoid rule, which is spectrally
//! accurate here and exact for band-limited restrictions.

use crate::error::{Error, Result};
use crate::field::{Smoothness, SphereField};
use crate::geom::{
    circle_point, great_circle_frame, sph_to_vec, GreatCircleFrame, UnitVector,
};
use crate::quad::{periodic_trapezoid, PeriodicSamples};
use rayon::prelude::*;
use std::f64::consts::{PI, TAU};

/// A field sampled along one great circle.
#[derive(Debug, Clone)]
pub struct CircleRestriction {
    pub frame: GreatCircleFrame,
    pub samples: PeriodicSamples,
}

/// Fourier coefficients of one circle restriction:
/// `f_ω(φ) = a[0] + Σ_{n≥1} a[n] cos nφ + b[n−1] sin nφ`.
///
/// `a[0]` is the circle mean (`= Ff(ω)`); for `n ≥ 1` the coefficients
/// carry the usual `1/π` normalization.
#[derive(Debug, Clone)]
pub struct FourierProfile {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl FourierProfile {
    pub fn nmax(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self, n: usize) -> f64 {
        self.a[n]
    }

    pub fn b(&self, n: usize) -> f64 {
        assert!(n >= 1, "b_0 does not exist");
        self.b[n - 1]
    }

    /// Partial Fourier sum at φ = 0: `a_0 + Σ a_n`.
    pub fn value_at_reference(&self) -> f64 {
        self.a.iter().sum()
    }

    /// `a_0² + ½ Σ (a_n² + b_n²)`, the mean of `f_ω²` for band-limited
    /// restrictions (Parseval).
    pub fn energy(&self) -> f64 {
        let head = self.a[0] * self.a[0];
        let tail: f64 = self.a[1..].iter().map(|x| x * x).sum::<f64>()
            + self.b.iter().map(|x| x * x).sum::<f64>();
        head + 0.5 * tail
    }
}

/// Samples `f` along `S_ω` at `m` equiangular nodes, `φ = 0` at the
/// projection of `pole`.
pub fn restrict<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    m: usize,
) -> Result<CircleRestriction> {
    let frame = great_circle_frame(omega, pole)?;
    let samples = PeriodicSamples::sample(m, |phi| field.eval(&circle_point(&frame, phi)))?;
    Ok(CircleRestriction { frame, samples })
}

/// Normalized circle mean `Ff(ω)`.
pub fn funk<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    m: usize,
) -> Result<f64> {
    let r = restrict(field, omega, pole, m)?;
    Ok(periodic_trapezoid(&r.samples) / TAU)
}

/// Weighted transform `Cf(ω)` with reference at the projection of `pole`.
pub fn weighted_cos<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    m: usize,
) -> Result<f64> {
    let frame = great_circle_frame(omega, pole)?;
    let samples = PeriodicSamples::sample(m, |phi| {
        phi.cos() * field.eval(&circle_point(&frame, phi))
    })?;
    Ok(periodic_trapezoid(&samples) / TAU)
}

/// Weighted transform `Sf(ω)` with reference at the projection of `pole`.
pub fn weighted_sin<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    m: usize,
) -> Result<f64> {
    let frame = great_circle_frame(omega, pole)?;
    let samples = PeriodicSamples::sample(m, |phi| {
        phi.sin() * field.eval(&circle_point(&frame, phi))
    })?;
    Ok(periodic_trapezoid(&samples) / TAU)
}

/// `C_Ω f(ω)`: the cosine-weighted transform with the reference point at
/// the projection of `omega_cap` instead of the North Pole.
pub fn weighted_cos_about<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    omega_cap: &UnitVector,
    m: usize,
) -> Result<f64> {
    weighted_cos(field, omega, omega_cap, m)
}

/// All three transforms from one set of restriction samples.
pub fn funk_triple<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    m: usize,
) -> Result<(f64, f64, f64)> {
    let r = restrict(field, omega, pole, m)?;
    let mf = m as f64;
    let mut sf = 0.0;
    let mut sc = 0.0;
    let mut ss = 0.0;
    for (j, v) in r.samples.values().iter().enumerate() {
        let phi = r.samples.node_at(j);
        sf += v;
        sc += phi.cos() * v;
        ss += phi.sin() * v;
    }
    Ok((sf / mf, sc / mf, ss / mf))
}

/// Fourier coefficients of the restriction through harmonic `nmax`.
/// Needs `m ≥ 2·nmax + 2` nodes.
pub fn fourier_coeffs<F: SphereField>(
    field: &F,
    omega: &UnitVector,
    pole: &UnitVector,
    nmax: usize,
    m: usize,
) -> Result<FourierProfile> {
    if m < 2 * nmax + 2 {
        return Err(Error::TooFewNodes { got: m, min: 2 * nmax + 2 });
    }
    let r = restrict(field, omega, pole, m)?;
    let mf = m as f64;
    let mut a = vec![0.0; nmax + 1];
    let mut b = vec![0.0; nmax];
    for (j, v) in r.samples.values().iter().enumerate() {
        let phi = r.samples.node_at(j);
        a[0] += v;
        for n in 1..=nmax {
            let (s, c) = (n as f64 * phi).sin_cos();
            a[n] += 2.0 * c * v;
            b[n - 1] += 2.0 * s * v;
        }
    }
    for x in a.iter_mut().chain(b.iter_mut()) {
        *x /= mf;
    }
    Ok(FourierProfile { a, b })
}

/// Sampled `(Ff, Cf, Sf)` for circle poles on a `(ν, τ)` grid relative to
/// `pole`: `ν_i = i·(π/2)/nu_count` for `i = 1..=nu_count` (ν = 0 excluded —
/// the reference direction degenerates there and the reconstruction
/// integral never needs it), `τ_j = 2πj/tau_count`.
#[derive(Debug, Clone)]
pub struct TransformGrid {
    pub pole: UnitVector,
    pub nu_nodes: Vec<f64>,
    pub tau_nodes: Vec<f64>,
    /// Row-major `[nu][tau]`.
    pub ff: Vec<f64>,
    pub cf: Vec<f64>,
    pub sf: Vec<f64>,
    /// Circle node count the samples were computed with.
    pub circle_nodes: usize,
}

impl TransformGrid {
    pub fn nu_count(&self) -> usize {
        self.nu_nodes.len()
    }

    pub fn tau_count(&self) -> usize {
        self.tau_nodes.len()
    }

    pub fn at(&self, i: usize, j: usize) -> (f64, f64, f64) {
        let idx = i * self.tau_nodes.len() + j;
        (self.ff[idx], self.cf[idx], self.sf[idx])
    }
}

/// Fills a transform grid. Cells are independent and filled in parallel;
/// assembly is by cell index, so the output is deterministic.
pub fn transform_grid<F: SphereField>(
    field: &F,
    pole: &UnitVector,
    nu_count: usize,
    tau_count: usize,
    m: usize,
) -> Result<TransformGrid> {
    if nu_count < 8 || tau_count < 8 {
        return Err(Error::OutOfRange {
            what: format!("grid counts {nu_count}x{tau_count}, need >= 8 each"),
        });
    }
    let nu_nodes: Vec<f64> =
        (1..=nu_count).map(|i| (PI / 2.0) * i as f64 / nu_count as f64).collect();
    let tau_nodes: Vec<f64> = (0..tau_count).map(|j| TAU * j as f64 / tau_count as f64).collect();
    let cells: Result<Vec<(f64, f64, f64)>> = nu_nodes
        .par_iter()
        .flat_map(|&nu| tau_nodes.par_iter().map(move |&tau| (nu, tau)))
        .map(|(nu, tau)| {
            let omega = sph_to_vec(pole, nu, tau);
            funk_triple(field, &omega, pole, m).map_err(|e| Error::GridCell {
                nu,
                tau,
                source: Box::new(e),
            })
        })
        .collect();
    let cells = cells?;
    let mut ff = Vec::with_capacity(cells.len());
    let mut cf = Vec::with_capacity(cells.len());
    let mut sf = Vec::with_capacity(cells.len());
    for (f, c, s) in cells {
        ff.push(f);
        cf.push(c);
        sf.push(s);
    }
    Ok(TransformGrid { pole: *pole, nu_nodes, tau_nodes, ff, cf, sf, circle_nodes: m })
}

/// Residual of the consistency recurrences, with ∂/∂ν and ∂/∂τ replaced by
/// central differences of step `h` on the Fourier coefficients of the
/// restrictions.
///
/// For `n = 1`:
/// `∂ν a₂ + 2 a₂ cot ν − 2 ∂ν a₀ − (∂τ b₂)/sin ν`;
/// for `n > 1`:
/// `∂ν a_{n+1} − ∂ν a_{n−1} + (n+1) a_{n+1} cot ν + (n−1) a_{n−1} cot ν
///  − (∂τ b_{n+1})/sin ν − (∂τ b_{n−1})/sin ν`.
///
/// Both vanish identically for smooth fields; the numerical residual decays
/// as O(h²) down to the quadrature floor.
pub fn recurrence_residual<F: SphereField>(
    field: &F,
    pole: &UnitVector,
    n: usize,
    nu: f64,
    tau: f64,
    h: f64,
    m: usize,
) -> Result<f64> {
    if field.smoothness() == Smoothness::Continuous {
        return Err(Error::NotSmoothEnough { found: field.smoothness() });
    }
    if n < 1 {
        return Err(Error::OutOfRange { what: "recurrence index n must be >= 1".into() });
    }
    if !(nu > h && nu < PI / 2.0 - h) {
        return Err(Error::OutOfDomain { nu, lo: h, hi: PI / 2.0 - h, h });
    }
    let nmax = n + 1;
    let coeffs = |nu: f64, tau: f64| -> Result<FourierProfile> {
        let omega = sph_to_vec(pole, nu, tau);
        fourier_coeffs(field, &omega, pole, nmax, m)
    };
    let center = coeffs(nu, tau)?;
    let nu_plus = coeffs(nu + h, tau)?;
    let nu_minus = coeffs(nu - h, tau)?;
    let tau_plus = coeffs(nu, tau + h)?;
    let tau_minus = coeffs(nu, tau - h)?;
    let dnu_a = |k: usize| (nu_plus.a(k) - nu_minus.a(k)) / (2.0 * h);
    let dtau_b = |k: usize| (tau_plus.b(k) - tau_minus.b(k)) / (2.0 * h);
    let cot = nu.cos() / nu.sin();
    let inv_sin = 1.0 / nu.sin();
    if n == 1 {
        Ok(dnu_a(2) + 2.0 * center.a(2) * cot - 2.0 * dnu_a(0) - dtau_b(2) * inv_sin)
    } else {
        Ok(dnu_a(n + 1) - dnu_a(n - 1)
            + ((n + 1) as f64) * center.a(n + 1) * cot
            + ((n - 1) as f64) * center.a(n - 1) * cot
            - dtau_b(n + 1) * inv_sin
            - dtau_b(n - 1) * inv_sin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{even_odd_split, AnalyticField};
    use crate::geom::alpha_angle;
    use crate::rng::SplitMix64;

    fn north() -> UnitVector {
        UnitVector::NORTH
    }

    fn random_unit(rng: &mut SplitMix64) -> UnitVector {
        let z = rng.next_symmetric();
        let t = rng.next_unit() * TAU;
        let r = (1.0 - z * z).max(0.0).sqrt();
        UnitVector::new(r * t.cos(), r * t.sin(), z).unwrap()
    }

    fn cos3() -> AnalyticField<impl Fn(&UnitVector) -> f64 + Sync> {
        AnalyticField::new(|p: &UnitVector| p.z().powi(3))
    }

    #[test]
    fn restrict_constant() {
        let f = AnalyticField::new(|_: &UnitVector| 2.5);
        let omega = sph_to_vec(&north(), 0.8, 1.0);
        let r = restrict(&f, &omega, &north(), 64).unwrap();
        assert!(r.samples.values().iter().all(|v| (*v - 2.5).abs() < 1e-15));
    }

    #[test]
    fn restrict_cos3_right_triangle_rule() {
        // f = cos³ν restricted to S_(ν,τ) is sin³ν · cos³φ.
        let f = cos3();
        let mut rng = SplitMix64::new(2);
        for _ in 0..50 {
            let nu = 0.05 + rng.next_unit() * (PI - 0.1);
            let tau = rng.next_unit() * TAU;
            let omega = sph_to_vec(&north(), nu, tau);
            let r = restrict(&f, &omega, &north(), 32).unwrap();
            for (j, v) in r.samples.values().iter().enumerate() {
                let phi = r.samples.node_at(j);
                let want = nu.sin().powi(3) * phi.cos().powi(3);
                assert!((v - want).abs() < 1e-12, "nu={nu} phi={phi}");
            }
        }
    }

    #[test]
    fn restrict_cos_right_triangle_rule() {
        let f = AnalyticField::new(|p: &UnitVector| p.z());
        let omega = sph_to_vec(&north(), 1.1, 2.7);
        let r = restrict(&f, &omega, &north(), 32).unwrap();
        for (j, v) in r.samples.values().iter().enumerate() {
            let phi = r.samples.node_at(j);
            assert!((v - 1.1f64.sin() * phi.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn funk_of_constant_is_one() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let mut rng = SplitMix64::new(4);
        for _ in 0..20 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 {
                continue;
            }
            assert!((funk(&f, &omega, &north(), 64).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn funk_annihilates_odd() {
        let f = cos3();
        let mut rng = SplitMix64::new(6);
        for _ in 0..50 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 {
                continue;
            }
            assert!(funk(&f, &omega, &north(), 256).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn funk_eigenvalue_degree_two() {
        // Funk multiplier for a degree-2 harmonic, computed by quadrature at
        // a reference point and then checked pointwise.
        let f = AnalyticField::new(|p: &UnitVector| p.z() * p.x());
        let probe = sph_to_vec(&north(), 1.0, 0.3);
        let lambda = funk(&f, &probe, &north(), 2048).unwrap() / f.eval(&probe);
        assert!((lambda + 0.5).abs() < 1e-10, "lambda = {lambda}");
        let mut rng = SplitMix64::new(8);
        for _ in 0..50 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 || f.eval(&omega).abs() < 1e-3 {
                continue;
            }
            let got = funk(&f, &omega, &north(), 256).unwrap();
            assert!((got - lambda * f.eval(&omega)).abs() < 1e-10);
        }
    }

    #[test]
    fn weighted_cos_cos3_closed_form() {
        let f = cos3();
        let mut rng = SplitMix64::new(10);
        for _ in 0..50 {
            let nu = 0.05 + rng.next_unit() * (PI / 2.0 - 0.05);
            let tau = rng.next_unit() * TAU;
            let omega = sph_to_vec(&north(), nu, tau);
            let got = weighted_cos(&f, &omega, &north(), 256).unwrap();
            let want = 0.375 * nu.sin().powi(3);
            assert!((got - want).abs() < 1e-12, "nu={nu}");
        }
    }

    #[test]
    fn weighted_cos_cos_nu_closed_form() {
        let f = AnalyticField::new(|p: &UnitVector| p.z());
        let omega = sph_to_vec(&north(), 0.7, 4.0);
        let got = weighted_cos(&f, &omega, &north(), 256).unwrap();
        assert!((got - 0.7f64.sin() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn weighted_transforms_of_constant_vanish() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let omega = sph_to_vec(&north(), 1.2, 0.5);
        assert!(weighted_cos(&f, &omega, &north(), 64).unwrap().abs() < 1e-14);
        assert!(weighted_sin(&f, &omega, &north(), 64).unwrap().abs() < 1e-14);
    }

    #[test]
    fn weighted_cos_about_pole_and_antipode() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3) + 0.4 * p.x() * p.y());
        let omega = sph_to_vec(&north(), 1.0, 2.0);
        let direct = weighted_cos(&f, &omega, &north(), 256).unwrap();
        let about_n = weighted_cos_about(&f, &omega, &north(), 256).unwrap();
        assert_eq!(direct, about_n);
        let about_s = weighted_cos_about(&f, &omega, &north().antipode(), 256).unwrap();
        assert!((about_s + direct).abs() < 1e-12);
    }

    #[test]
    fn theorem3_rotation_identity() {
        // C_Ω f = cos α Cf + sin α Sf over random (Ω, ω).
        let f = AnalyticField::new(|p: &UnitVector| {
            p.z().powi(3) + 0.5 * p.x() + 0.2 * p.y() * p.z() + 0.1
        });
        let mut rng = SplitMix64::new(12);
        let mut tested = 0;
        while tested < 100 {
            let omega = random_unit(&mut rng);
            let cap = random_unit(&mut rng);
            if omega.z().abs() > 0.999 || omega.dot(&cap).abs() > 0.999 {
                continue;
            }
            let alpha = alpha_angle(&omega, &cap, &north()).unwrap();
            let cf = weighted_cos(&f, &omega, &north(), 256).unwrap();
            let sf = weighted_sin(&f, &omega, &north(), 256).unwrap();
            let lhs = weighted_cos_about(&f, &omega, &cap, 256).unwrap();
            let rhs = alpha.cos() * cf + alpha.sin() * sf;
            assert!((lhs - rhs).abs() < 1e-10, "lhs={lhs} rhs={rhs}");
            tested += 1;
        }
    }

    #[test]
    fn fourier_cos3_harmonics() {
        let f = cos3();
        let nu = 1.3;
        let omega = sph_to_vec(&north(), nu, 0.9);
        let p = fourier_coeffs(&f, &omega, &north(), 5, 256).unwrap();
        let s3 = nu.sin().powi(3);
        assert!((p.a(1) - 0.75 * s3).abs() < 1e-12);
        assert!((p.a(3) - 0.25 * s3).abs() < 1e-12);
        for n in [0, 2, 4, 5] {
            assert!(p.a(n).abs() < 1e-12, "a_{n}");
        }
        for n in 1..=5 {
            assert!(p.b(n).abs() < 1e-12, "b_{n}");
        }
    }

    #[test]
    fn fourier_matches_weighted_transforms() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3) + p.x() * 0.3 + 0.2);
        let omega = sph_to_vec(&north(), 0.9, 5.1);
        let p = fourier_coeffs(&f, &omega, &north(), 3, 256).unwrap();
        let cf = weighted_cos(&f, &omega, &north(), 256).unwrap();
        let sf = weighted_sin(&f, &omega, &north(), 256).unwrap();
        let ff = funk(&f, &omega, &north(), 256).unwrap();
        assert!((p.a(1) - 2.0 * cf).abs() < 1e-12);
        assert!((p.b(1) - 2.0 * sf).abs() < 1e-12);
        assert!((p.a(0) - ff).abs() < 1e-13);
    }

    #[test]
    fn fourier_constant() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let omega = sph_to_vec(&north(), 1.0, 0.0);
        let p = fourier_coeffs(&f, &omega, &north(), 4, 64).unwrap();
        assert!((p.a(0) - 1.0).abs() < 1e-14);
        for n in 1..=4 {
            assert!(p.a(n).abs() < 1e-14 && p.b(n).abs() < 1e-14);
        }
    }

    #[test]
    fn fourier_too_few_nodes() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let omega = sph_to_vec(&north(), 1.0, 0.0);
        assert!(matches!(
            fourier_coeffs(&f, &omega, &north(), 40, 64),
            Err(Error::TooFewNodes { .. })
        ));
    }

    #[test]
    fn fourier_reconstructs_reference_value() {
        // Band-limited field: partial sum at φ = 0 equals f at the
        // reference point once nmax reaches the band limit.
        let f = AnalyticField::new(|p: &UnitVector| {
            0.3 + p.z() + p.z() * p.x() - 0.7 * p.y()
        });
        let mut rng = SplitMix64::new(14);
        for _ in 0..30 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.99 {
                continue;
            }
            let p = fourier_coeffs(&f, &omega, &north(), 2, 256).unwrap();
            let frame = great_circle_frame(&omega, &north()).unwrap();
            let want = f.eval(&circle_point(&frame, 0.0));
            assert!((p.value_at_reference() - want).abs() < 1e-10);
        }
    }

    #[test]
    fn funk_even_in_omega() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3) + 0.3 * p.x() + 1.0);
        let mut rng = SplitMix64::new(16);
        for _ in 0..100 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 {
                continue;
            }
            let a = funk(&f, &omega, &north(), 128).unwrap();
            let b = funk(&f, &omega.antipode(), &north(), 128).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn funk_sees_only_even_part() {
        let f = AnalyticField::new(|p: &UnitVector| {
            1.0 + p.z().powi(3) + 0.5 * p.x() * p.z() - 0.2 * p.y()
        });
        let (fp, fm) = even_odd_split(&f);
        let mut rng = SplitMix64::new(18);
        for _ in 0..50 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 {
                continue;
            }
            let whole = funk(&f, &omega, &north(), 256).unwrap();
            let even = funk(&fp, &omega, &north(), 256).unwrap();
            let odd = funk(&fm, &omega, &north(), 256).unwrap();
            assert!(odd.abs() < 1e-11);
            assert!((whole - even).abs() < 1e-11);
        }
    }

    #[test]
    fn weighted_cos_about_ignores_constant_even_part() {
        // When f⁺ is constant its a₁ vanishes, so C_Ω f = C_Ω f⁻.
        let f = AnalyticField::new(|p: &UnitVector| 3.0 + p.z().powi(3) + 0.4 * p.x());
        let (_, fm) = even_odd_split(&f);
        let cap = UnitVector::new(0.2, 0.5, 0.9).unwrap();
        let mut rng = SplitMix64::new(20);
        for _ in 0..30 {
            let omega = random_unit(&mut rng);
            if omega.dot(&cap).abs() > 0.999 {
                continue;
            }
            let whole = weighted_cos_about(&f, &omega, &cap, 256).unwrap();
            let odd = weighted_cos_about(&fm, &omega, &cap, 256).unwrap();
            assert!((whole - odd).abs() < 1e-11);
        }
    }

    #[test]
    fn grid_constant_field() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let g = transform_grid(&f, &north(), 8, 8, 64).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let (ff, cf, sf) = g.at(i, j);
                assert!((ff - 1.0).abs() < 1e-14);
                assert!(cf.abs() < 1e-14);
                assert!(sf.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn grid_cos3_matches_closed_form() {
        let f = cos3();
        let g = transform_grid(&f, &north(), 16, 16, 256).unwrap();
        for (i, &nu) in g.nu_nodes.iter().enumerate() {
            for j in 0..g.tau_count() {
                let (_, cf, _) = g.at(i, j);
                assert!((cf - 0.375 * nu.sin().powi(3)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn grid_zonal_field_tau_invariant() {
        let f = AnalyticField::new(|p: &UnitVector| p.z() * p.z());
        let g = transform_grid(&f, &north(), 8, 16, 128).unwrap();
        for i in 0..8 {
            let (f0, c0, s0) = g.at(i, 0);
            for j in 1..16 {
                let (ff, cf, sf) = g.at(i, j);
                assert!((ff - f0).abs() < 1e-13);
                assert!((cf - c0).abs() < 1e-13);
                assert!((sf - s0).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn grid_rejects_small_counts() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        assert!(transform_grid(&f, &north(), 4, 16, 64).is_err());
    }

    #[test]
    fn recurrence_residual_constant_field() {
        let f = AnalyticField::new(|_: &UnitVector| 1.0);
        let r = recurrence_residual(&f, &north(), 1, 0.8, 1.0, 1e-3, 256).unwrap();
        assert!(r.abs() < 1e-10, "residual {r}");
    }

    #[test]
    fn recurrence_residual_cos3_second_order() {
        let f = cos3();
        let r1 = recurrence_residual(&f, &north(), 2, 0.7, 2.0, 4e-3, 256).unwrap();
        let r2 = recurrence_residual(&f, &north(), 2, 0.7, 2.0, 2e-3, 256).unwrap();
        // Closed forms satisfy the recurrence identically; the residual is
        // pure finite-difference truncation and shrinks ~4x per halving.
        assert!(r1.abs() < 1e-4);
        let ratio = r1.abs() / r2.abs().max(1e-300);
        assert!((3.0..5.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn recurrence_residual_generic_ratio() {
        let f = AnalyticField::new(|p: &UnitVector| {
            1.0 + p.z() + p.z() * p.x() + 0.3 * p.y()
        });
        for n in [1usize, 2, 3] {
            let r1 = recurrence_residual(&f, &north(), n, 0.8, 1.3, 4e-3, 256).unwrap();
            let r2 = recurrence_residual(&f, &north(), n, 0.8, 1.3, 2e-3, 256).unwrap();
            let ratio = r1.abs() / r2.abs().max(1e-300);
            assert!((3.5..4.5).contains(&ratio), "n={n} ratio={ratio}");
        }
    }

    #[test]
    fn recurrence_residual_domain_checks() {
        let f = cos3();
        assert!(matches!(
            recurrence_residual(&f, &north(), 1, 1.57, 0.0, 1e-2, 256),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            recurrence_residual(&f, &north(), 0, 0.5, 0.0, 1e-3, 256),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn parseval_bound() {
        let f = AnalyticField::new(|p: &UnitVector| p.z().powi(3) + 0.2 * p.x());
        let mut rng = SplitMix64::new(22);
        let max_f = 1.2f64; // |f| ≤ 1 + 0.2
        for _ in 0..50 {
            let omega = random_unit(&mut rng);
            if omega.z().abs() > 0.999 {
                continue;
            }
            let p = fourier_coeffs(&f, &omega, &north(), 8, 256).unwrap();
            assert!(p.energy() <= max_f * max_f + 1e-8);
        }
    }
}
