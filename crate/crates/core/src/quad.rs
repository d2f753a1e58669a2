//! Quadrature rules: periodic trapezoid on circles, Gauss–Legendre on
//! intervals, and cumulative weighted integrals over `[0, π/2]` profiles.
//!
//! Every transform in this crate reduces to one of these three rules, with
//! fixed defaults (`M = 256` circle nodes, 128-point Gauss–Legendre,
//! 512-node cumulative grids) chosen so the rule error sits well below the
//! tolerances of the methods built on top.

use crate::error::{Error, Result};
use std::f64::consts::{PI, TAU};

/// Real samples at the equiangular circle nodes `φ_j = −π + 2πj/M`,
/// `j = 0..M−1`. `M` must be even and at least 4 so that `φ = 0` is a node.
#[derive(Debug, Clone)]
pub struct PeriodicSamples {
    values: Vec<f64>,
}

impl PeriodicSamples {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let m = values.len();
        if m < 4 || m % 2 != 0 {
            return Err(Error::TooFewNodes { got: m, min: 4 });
        }
        Ok(Self { values })
    }

    /// Samples `f(φ_j)` at the `m` equiangular nodes.
    pub fn sample(m: usize, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        if m < 4 || m % 2 != 0 {
            return Err(Error::TooFewNodes { got: m, min: 4 });
        }
        let values = (0..m).map(|j| f(node(m, j))).collect();
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The node angle `φ_j = −π + 2πj/M`.
    pub fn node_at(&self, j: usize) -> f64 {
        node(self.values.len(), j)
    }
}

fn node(m: usize, j: usize) -> f64 {
    -PI + TAU * j as f64 / m as f64
}

/// `∫_{−π}^{π} f dφ ≈ (2π/M) Σ f(φ_j)`. For smooth periodic integrands the
/// error decays faster than any power of `1/M`; for trigonometric
/// polynomials of degree `< M/2` it is exact up to rounding.
pub fn periodic_trapezoid(samples: &PeriodicSamples) -> f64 {
    let m = samples.values.len();
    (TAU / m as f64) * samples.values.iter().sum::<f64>()
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, computed by Newton
/// iteration on the Legendre recurrence.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder { order });
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th root of P_n.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            // Exact midpoint for odd orders.
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_and_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `∫_a^b f(x) dx` by affine transplantation of the rule.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        half * acc
    }

    /// Transplanted nodes and weights on `[a, b]`.
    pub fn nodes_weights(&self, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let nodes = self.nodes.iter().map(|x| mid + half * x).collect();
        let weights = self.weights.iter().map(|w| w * half).collect();
        (nodes, weights)
    }
}

/// Returns `(P_n(x), P_n'(x))` via the three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = if (x.abs() - 1.0).abs() < 1e-300 {
        0.5 * n as f64 * (n as f64 + 1.0) * x.powi(n as i32 + 1)
    } else {
        n as f64 * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, d)
}

/// `∫_a^b f` with an `order`-point Gauss–Legendre rule (default 128).
pub fn integrate_profile(
    f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    order: usize,
) -> Result<f64> {
    if !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    let rule = GaussLegendre::new(order)?;
    Ok(rule.integrate(a, b, f))
}

/// Sampled values of a function on strictly increasing nodes in `[0, π/2]`.
///
/// Integrals against a weight treat the profile as piecewise linear between
/// nodes; on the leading gap `[0, nodes[0]]` (when `nodes[0] > 0`) the
/// profile is extended by linear extrapolation from the first two nodes.
/// The weight itself is integrated by a 4-point Gauss–Legendre rule per
/// interval, so only the profile's linearization contributes O(h²) error.
#[derive(Debug, Clone)]
pub struct ProfileGrid {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl ProfileGrid {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::InvalidProfile {
                reason: format!("{} nodes vs {} values", nodes.len(), values.len()),
            });
        }
        if nodes.len() < 2 {
            return Err(Error::InvalidProfile { reason: "need at least 2 nodes".into() });
        }
        if nodes[0] < 0.0 || *nodes.last().unwrap() > PI / 2.0 + 1e-12 {
            return Err(Error::InvalidProfile {
                reason: format!(
                    "nodes [{}, {}] outside [0, pi/2]",
                    nodes[0],
                    nodes.last().unwrap()
                ),
            });
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidProfile { reason: "nodes not strictly increasing".into() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile { reason: "non-finite value".into() });
        }
        Ok(Self { nodes, values })
    }

    /// Uniform nodes `ν_i = i·(π/2)/count`, `i = 1..=count`, sampled from `f`.
    pub fn sample_uniform(count: usize, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidProfile { reason: "need at least 2 nodes".into() });
        }
        let h = (PI / 2.0) / count as f64;
        let nodes: Vec<f64> = (1..=count).map(|i| i as f64 * h).collect();
        let values = nodes.iter().map(|&u| f(u)).collect();
        Self::new(nodes, values)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Piecewise-linear value at `u`, extrapolated on `[0, nodes[0]]`.
    pub fn interpolate(&self, u: f64) -> f64 {
        let n = self.nodes.len();
        let i = match self.nodes.binary_search_by(|x| x.partial_cmp(&u).unwrap()) {
            Ok(i) => return self.values[i],
            Err(0) => 0, // leading gap: extrapolate from the first interval
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        y0 + (y1 - y0) * (u - x0) / (x1 - x0)
    }

    /// `∫_0^{π/2} w(u) · profile(u) du` with the piecewise-linear profile.
    pub fn integrate_weighted(&self, w: impl Fn(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        let gl = gl4();
        let mut segment = |a: f64, b: f64, acc: &mut f64| {
            if b <= a {
                return;
            }
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for (x, wt) in gl {
                let u = mid + half * x;
                *acc += wt * half * w(u) * self.interpolate(u);
            }
        };
        segment(0.0, self.nodes[0], &mut acc);
        for i in 0..self.nodes.len() - 1 {
            segment(self.nodes[i], self.nodes[i + 1], &mut acc);
        }
        acc
    }

    /// Cumulative integral `G(ν_i) = ∫_0^{ν_i} sin^m u · cos u · profile(u) du`
    /// at every node, as a new profile on the same nodes.
    pub fn cumulative_weighted(&self, m: i64) -> Result<ProfileGrid> {
        if m < 0 {
            return Err(Error::InvalidExponent { m });
        }
        let gl = gl4();
        let weight = |u: f64| u.sin().powi(m as i32) * u.cos();
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut acc = 0.0;
        let mut segment = |a: f64, b: f64| -> f64 {
            if b <= a {
                return 0.0;
            }
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            let mut s = 0.0;
            for (x, wt) in gl {
                let u = mid + half * x;
                s += wt * half * weight(u) * self.interpolate(u);
            }
            s
        };
        acc += segment(0.0, self.nodes[0]);
        out.push(acc);
        for i in 0..self.nodes.len() - 1 {
            acc += segment(self.nodes[i], self.nodes[i + 1]);
            out.push(acc);
        }
        ProfileGrid::new(self.nodes.clone(), out)
    }
}

/// Free-function form of [`ProfileGrid::cumulative_weighted`].
pub fn cumulative_weighted_integral(profile: &ProfileGrid, m: i64) -> Result<ProfileGrid> {
    profile.cumulative_weighted(m)
}

/// 4-point Gauss–Legendre rule on [-1, 1], hard-coded.
fn gl4() -> [(f64, f64); 4] {
    const A: f64 = 0.339981043584856264802665759103;
    const B: f64 = 0.861136311594052575223946488893;
    const WA: f64 = 0.652145154862546142626936050778;
    const WB: f64 = 0.347854845137453857373063949222;
    [(-B, WB), (-A, WA), (A, WA), (B, WB)]
}
