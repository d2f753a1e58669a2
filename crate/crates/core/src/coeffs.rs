//! Recursive coefficient tables and the trigonometric polynomials built
//! from them.
//!
//! The reconstruction series expresses each averaged Fourier coefficient
//! through fixed rational constants `c_m(2k)` (even indices, weighting the
//! `Ff` average) and `c_m(2k−1)` (odd indices, weighting the `Cf` average).
//! The tables are built once in exact big-integer rationals from the
//! recursions
//!
//! ```text
//! even: c_1(2) = −4
//!       c_m(2k+2)     = c_m(2k) · (1 − (4k+2)/(2k−2m+2)),  m ≤ k
//!       c_{k+1}(2k+2) = −2(4k+2) + (4k+2) Σ_{m≤k} c_m(2k)/(2k−2m+2)
//! odd:  c_1(3) = −4
//!       c_m(2k+1)     = c_m(2k−1) · (1 − 4k/(2k−2m)),      m ≤ k−1
//!       c_k(2k+1)     = −4k + 4k Σ_{m≤k−1} c_m(2k−1)/(2k−2m)
//! ```
//!
//! and satisfy the closure identities
//! `Σ_m c_m(2k)/(2m) = −2` and `Σ_m c_m(2k−1)/(2m+2) = −1` exactly —
//! these encode that constants and `cos ν` reconstruct from their first
//! series term alone, and they gate the build in tests together with an
//! independent ODE-iteration oracle.
//!
//! Coefficients grow roughly factorially and alternate in sign, so floats
//! enter only at polynomial evaluation, where per-power aggregates are
//! rounded once.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Which polynomial family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `P_n^0(u) = Σ_{k=1}^n Σ_{m=1}^{k} c_m(2k) sin^{2m−1}u` — weights the
    /// even-index (Funk-average) data.
    P0,
    /// `P_n^1(u) = Σ_{k=1}^n Σ_{m=1}^{k−1} c_m(2k−1) sin^{2m}u` — weights
    /// the odd-index (cosine-average) data.
    P1,
}

/// Exact rational coefficient tables through depth `kmax`.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    /// `even[k-1][m-1] = c_m(2k)` for `1 ≤ m ≤ k`, `1 ≤ k ≤ kmax`.
    even: Vec<Vec<BigRational>>,
    /// `odd[k-1][m-1] = c_m(2k−1)` for `1 ≤ m ≤ k−1`; the `k = 1` row is
    /// empty (the inner sum of `P^1` starts at `k = 2`).
    odd: Vec<Vec<BigRational>>,
    kmax: usize,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds both tables through `kmax` (`kmax ≥ 1`).
pub fn build_coeff_table(kmax: usize) -> Result<CoeffTable> {
    if kmax < 1 {
        return Err(Error::OutOfRange { what: "kmax must be >= 1".into() });
    }
    let mut even: Vec<Vec<BigRational>> = vec![vec![ratio(-4, 1)]];
    for k in 1..kmax {
        let prev = &even[k - 1];
        let lead = ratio(4 * k as i64 + 2, 1);
        let mut row = Vec::with_capacity(k + 1);
        let mut tail_sum = BigRational::zero();
        for (m_idx, c) in prev.iter().enumerate() {
            let m = m_idx as i64 + 1;
            let den = ratio(2 * k as i64 - 2 * m + 2, 1);
            row.push(c * (BigRational::one() - &lead / &den));
            tail_sum += c / den;
        }
        row.push(-ratio(2, 1) * &lead + lead * tail_sum);
        even.push(row);
    }
    let mut odd: Vec<Vec<BigRational>> = vec![vec![]];
    if kmax >= 2 {
        odd.push(vec![ratio(-4, 1)]);
        for k in 2..kmax {
            let prev = &odd[k - 1];
            let lead = ratio(4 * k as i64, 1);
            let mut row = Vec::with_capacity(k);
            let mut tail_sum = BigRational::zero();
            for (m_idx, c) in prev.iter().enumerate() {
                let m = m_idx as i64 + 1;
                let den = ratio(2 * k as i64 - 2 * m, 1);
                row.push(c * (BigRational::one() - &lead / &den));
                tail_sum += c / den;
            }
            row.push(-&lead + lead * tail_sum);
            odd.push(row);
        }
    }
    Ok(CoeffTable { even, odd, kmax })
}

impl CoeffTable {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `c_m(2k)`, exact.
    pub fn even(&self, k: usize, m: usize) -> &BigRational {
        &self.even[k - 1][m - 1]
    }

    /// `c_m(2k−1)`, exact. Defined for `k ≥ 2`, `m ≤ k−1`.
    pub fn odd(&self, k: usize, m: usize) -> &BigRational {
        &self.odd[k - 1][m - 1]
    }

    pub fn even_row(&self, k: usize) -> &[BigRational] {
        &self.even[k - 1]
    }

    pub fn odd_row(&self, k: usize) -> &[BigRational] {
        &self.odd[k - 1]
    }

    /// `Σ_m c_m(2k)/(2m)`, exact; equals −2 for a correct table.
    pub fn even_identity_sum(&self, k: usize) -> BigRational {
        self.even[k - 1]
            .iter()
            .enumerate()
            .map(|(m_idx, c)| c / ratio(2 * (m_idx as i64 + 1), 1))
            .sum()
    }

    /// `Σ_m c_m(2k−1)/(2m+2)`, exact; equals −1 for a correct table
    /// (`k ≥ 2`).
    pub fn odd_identity_sum(&self, k: usize) -> BigRational {
        self.odd[k - 1]
            .iter()
            .enumerate()
            .map(|(m_idx, c)| c / ratio(2 * (m_idx as i64 + 1) + 2, 1))
            .sum()
    }

    /// Checks both closure identities exactly for every tabulated k.
    pub fn identities_hold(&self) -> bool {
        let minus_two = ratio(-2, 1);
        let minus_one = ratio(-1, 1);
        (1..=self.kmax).all(|k| self.even_identity_sum(k) == minus_two)
            && (2..=self.kmax).all(|k| self.odd_identity_sum(k) == minus_one)
    }

    /// Per-power float coefficients of `Σ_{k=1}^{n} Σ_m c_m(·) s^{power}`:
    /// entry `m−1` of the result is `Σ_{k≥max(m,2? )}^{n} c_m(·)` rounded to
    /// f64 after exact rational aggregation.
    fn aggregated_f64(&self, n: usize, kind: PolyKind) -> Result<Vec<f64>> {
        if n < 1 || n > self.kmax {
            return Err(Error::OutOfRange {
                what: format!("series depth n = {n} outside 1..={}", self.kmax),
            });
        }
        let rows: &[Vec<BigRational>] = match kind {
            PolyKind::P0 => &self.even,
            PolyKind::P1 => &self.odd,
        };
        let width = rows[..n].iter().map(Vec::len).max().unwrap_or(0);
        let mut agg = vec![BigRational::zero(); width];
        for row in &rows[..n] {
            for (m_idx, c) in row.iter().enumerate() {
                agg[m_idx] += c;
            }
        }
        agg.iter()
            .enumerate()
            .map(|(m_idx, c)| {
                c.to_f64().filter(|v| v.is_finite()).ok_or(Error::Overflow { k: m_idx + 1 })
            })
            .collect()
    }

    /// f64 row `[c_1(2k), …]` (even) for table consumers.
    pub fn even_row_f64(&self, k: usize) -> Result<Vec<f64>> {
        self.even[k - 1]
            .iter()
            .map(|c| c.to_f64().filter(|v| v.is_finite()).ok_or(Error::Overflow { k }))
            .collect()
    }

    /// f64 row `[c_1(2k−1), …]` (odd).
    pub fn odd_row_f64(&self, k: usize) -> Result<Vec<f64>> {
        self.odd[k - 1]
            .iter()
            .map(|c| c.to_f64().filter(|v| v.is_finite()).ok_or(Error::Overflow { k }))
            .collect()
    }

    /// Largest coefficient magnitude in either table, as f64.
    pub fn max_abs_f64(&self) -> f64 {
        self.even
            .iter()
            .chain(self.odd.iter())
            .flatten()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }
}

/// Evaluates `P_n^0(u)` or `P_n^1(u)` for `u ∈ [0, π/2]`, `1 ≤ n ≤ kmax`.
pub fn eval_p(table: &CoeffTable, n: usize, u: f64, kind: PolyKind) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI / 2.0 + 1e-12).contains(&u) {
        return Err(Error::OutOfRange { what: format!("u = {u} outside [0, pi/2]") });
    }
    let agg = table.aggregated_f64(n, kind)?;
    let s = u.sin();
    let s2 = s * s;
    // Horner in s², then the odd-power factor for P⁰.
    let mut acc = 0.0;
    for c in agg.iter().rev() {
        acc = acc * s2 + c;
    }
    Ok(match kind {
        PolyKind::P0 => acc * s,
        PolyKind::P1 => acc * s2,
    })
}

/// Float view of one polynomial: coefficient of `s^{2m−1}` (P⁰) or `s^{2m}`
/// (P¹) for `m = 1..`.
pub fn poly_power_coeffs(table: &CoeffTable, n: usize, kind: PolyKind) -> Result<Vec<f64>> {
    table.aggregated_f64(n, kind)
}
