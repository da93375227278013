//! Reproducing kernel on the unit sphere and its d-fold tensor product.
//!
//! The single-sphere kernel is `K(x,y) = 1 + gamma * A_r(x . y)` with
//! `A_r(z) = sum_{l>=1} (2l+1) / (l(l+1))^r P_l(z)`, convergent for
//! `r > 3/2`. The tensor-product kernel is the product of per-coordinate
//! kernels with per-coordinate weights.

use crate::error::{Error, Result};

/// Default absolute tolerance for the truncated kernel series tail.
pub const DEFAULT_TRUNCATION_TOL: f64 = 1e-14;

/// Slack accepted on |z| before a dot product is rejected outright.
const DOT_SLACK: f64 = 1e-14;

/// Smoothness, coordinate weight and series truncation for one sphere.
///
/// The truncation level is fixed at construction so that every evaluation
/// with the same parameters sums the same number of terms.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelParams {
    r: f64,
    gamma: f64,
    truncation_tol: f64,
    level: usize,
}

impl KernelParams {
    /// Creates parameters with the default truncation tolerance.
    ///
    /// Requires `r > 3/2` (the series diverges otherwise) and
    /// `0 < gamma <= 1`.
    pub fn new(r: f64, gamma: f64) -> Result<Self> {
        Self::with_tolerance(r, gamma, DEFAULT_TRUNCATION_TOL)
    }

    /// Creates parameters with an explicit tail tolerance.
    pub fn with_tolerance(r: f64, gamma: f64, truncation_tol: f64) -> Result<Self> {
        if !(r > 1.5) {
            return Err(Error::Domain(format!(
                "smoothness r must exceed 3/2, got {r}"
            )));
        }
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::Domain(format!(
                "weight gamma must lie in (0, 1], got {gamma}"
            )));
        }
        if !(truncation_tol > 0.0) {
            return Err(Error::Domain(format!(
                "truncation tolerance must be positive, got {truncation_tol}"
            )));
        }
        Ok(Self {
            r,
            gamma,
            truncation_tol,
            level: series_level(r, truncation_tol),
        })
    }

    /// Test-only constructor that admits `gamma = 0` (the constant kernel).
    #[cfg(test)]
    pub(crate) fn new_internal(r: f64, gamma: f64) -> Self {
        Self {
            r,
            gamma,
            truncation_tol: DEFAULT_TRUNCATION_TOL,
            level: series_level(r, DEFAULT_TRUNCATION_TOL),
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn truncation_tol(&self) -> f64 {
        self.truncation_tol
    }

    /// Series truncation level selected for the tolerance.
    pub fn series_level(&self) -> usize {
        self.level
    }
}

/// Smallest level L with tail bound `sum_{l>L} (2l+1)/(l(l+1))^r <= tol`.
///
/// Uses `(2l+1)/(l(l+1))^r <= 3 l^{1-2r}` and the integral comparison
/// `sum_{l>L} l^{1-2r} <= L^{2-2r}/(2r-2)`.
fn series_level(r: f64, tol: f64) -> usize {
    let exponent = 2.0 * r - 2.0;
    let level = (3.0 / (exponent * tol)).powf(1.0 / exponent).ceil();
    (level.max(1.0)) as usize
}

/// A point on the unit sphere in Cartesian coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    x: f64,
    y: f64,
    z: f64,
}

/// The shared "north pole" (0, 0, 1).
pub const NORTH_POLE: SpherePoint = SpherePoint {
    x: 0.0,
    y: 0.0,
    z: 1.0,
};

impl SpherePoint {
    /// Validates that `x^2 + y^2 + z^2 = 1` within 1e-12.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm2 = x * x + y * y + z * z;
        if (norm2 - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "point ({x}, {y}, {z}) not on unit sphere: |x|^2 = {norm2}"
            )));
        }
        Ok(Self { x, y, z })
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

    /// Dot product, clamped to [-1, 1] so that coincident points stay in
    /// the domain of the kernel series.
    pub fn dot(&self, other: &SpherePoint) -> f64 {
        let d = self.x * other.x + self.y * other.y + self.z * other.z;
        d.clamp(-1.0, 1.0)
    }

    /// Angle to another point, in radians.
    pub fn angle_to(&self, other: &SpherePoint) -> f64 {
        self.dot(other).acos()
    }

    pub fn is_north_pole(&self) -> bool {
        self.x == 0.0 && self.y == 0.0 && self.z == 1.0
    }
}

/// Parameters of the weighted tensor-product space on `(S^2)^d`.
#[derive(Debug, Clone)]
pub struct SpaceParams {
    r: f64,
    truncation_tol: f64,
    per_dim: Vec<KernelParams>,
}

impl SpaceParams {
    /// A space with explicit per-coordinate weights `gamma_k`.
    pub fn new(r: f64, gammas: &[f64]) -> Result<Self> {
        Self::with_tolerance(r, gammas, DEFAULT_TRUNCATION_TOL)
    }

    pub fn with_tolerance(r: f64, gammas: &[f64], truncation_tol: f64) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::Contract("dimension d must be at least 1".into()));
        }
        let per_dim = gammas
            .iter()
            .map(|&g| KernelParams::with_tolerance(r, g, truncation_tol))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            r,
            truncation_tol,
            per_dim,
        })
    }

    /// Weights `gamma_k = g^k`, k = 1..d, as used in the numerical studies.
    pub fn geometric(r: f64, g: f64, d: usize) -> Result<Self> {
        let gammas: Vec<f64> = (1..=d as i32).map(|k| g.powi(k)).collect();
        Self::new(r, &gammas)
    }

    pub fn d(&self) -> usize {
        self.per_dim.len()
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn truncation_tol(&self) -> f64 {
        self.truncation_tol
    }

    /// Kernel parameters of coordinate `k` (0-based).
    pub fn dim_params(&self, k: usize) -> &KernelParams {
        &self.per_dim[k]
    }

    pub fn gammas(&self) -> Vec<f64> {
        self.per_dim.iter().map(|p| p.gamma()).collect()
    }
}

/// First `l_max + 1` Legendre polynomial values `P_0(z) .. P_{l_max}(z)`
/// by the three-term recurrence.
pub fn legendre_sequence(z: f64, l_max: usize) -> Result<Vec<f64>> {
    if z.abs() > 1.0 + DOT_SLACK {
        return Err(Error::Domain(format!(
            "legendre argument {z} outside [-1, 1]"
        )));
    }
    let z = z.clamp(-1.0, 1.0);
    let mut values = Vec::with_capacity(l_max + 1);
    values.push(1.0);
    if l_max == 0 {
        return Ok(values);
    }
    values.push(z);
    for l in 1..l_max {
        let lf = l as f64;
        let next = ((2.0 * lf + 1.0) * z * values[l] - lf * values[l - 1]) / (lf + 1.0);
        values.push(next);
    }
    Ok(values)
}

/// Kernel series `A_r(z)` truncated at the level fixed by `params`.
pub fn a_r(z: f64, params: &KernelParams) -> Result<f64> {
    if z.abs() > 1.0 + DOT_SLACK {
        return Err(Error::Domain(format!(
            "kernel series argument {z} outside [-1, 1]"
        )));
    }
    Ok(a_r_truncated(z.clamp(-1.0, 1.0), params.r, params.level))
}

/// Truncated series evaluation at an explicit level (no domain check).
///
/// Exposed so that truncation consistency can be audited against a longer
/// summation of the same series.
pub fn a_r_truncated(z: f64, r: f64, level: usize) -> f64 {
    // Fused recurrence: track P_{l-1}, P_l and accumulate coefficient * P_l.
    let mut sum = 0.0;
    let mut p_prev = 1.0; // P_0
    let mut p = z; // P_1
    for l in 1..=level {
        let lf = l as f64;
        sum += (2.0 * lf + 1.0) / (lf * (lf + 1.0)).powf(r) * p;
        let p_next = ((2.0 * lf + 1.0) * z * p - lf * p_prev) / (lf + 1.0);
        p_prev = p;
        p = p_next;
    }
    sum
}

/// The series with its coefficient table precomputed, for Gram-assembly
/// hot paths. Evaluation order matches [`a_r_truncated`] exactly.
#[derive(Debug, Clone)]
pub(crate) struct ArSeries {
    level: usize,
    coeffs: Vec<f64>,
}

impl ArSeries {
    pub(crate) fn new(r: f64, level: usize) -> Self {
        let coeffs = (1..=level)
            .map(|l| {
                let lf = l as f64;
                (2.0 * lf + 1.0) / (lf * (lf + 1.0)).powf(r)
            })
            .collect();
        Self { level, coeffs }
    }

    pub(crate) fn for_params(params: &KernelParams) -> Self {
        Self::new(params.r(), params.series_level())
    }

    pub(crate) fn eval(&self, z: f64) -> f64 {
        let mut sum = 0.0;
        let mut p_prev = 1.0;
        let mut p = z;
        for l in 1..=self.level {
            let lf = l as f64;
            sum += self.coeffs[l - 1] * p;
            let p_next = ((2.0 * lf + 1.0) * z * p - lf * p_prev) / (lf + 1.0);
            p_prev = p;
            p = p_next;
        }
        sum
    }
}

/// Single-sphere reproducing kernel `1 + gamma * A_r(x . y)`.
pub fn kernel_1(x: &SpherePoint, y: &SpherePoint, params: &KernelParams) -> f64 {
    1.0 + params.gamma * a_r_truncated(x.dot(y), params.r, params.level)
}

/// Tensor-product kernel on `(S^2)^d`: the product of per-coordinate
/// kernels with weights `gamma_k`.
pub fn kernel_d(x: &[SpherePoint], y: &[SpherePoint], space: &SpaceParams) -> Result<f64> {
    if x.len() != y.len() || x.len() != space.d() {
        return Err(Error::Contract(format!(
            "kernel_d expects two {}-tuples, got {} and {}",
            space.d(),
            x.len(),
            y.len()
        )));
    }
    Ok(x.iter()
        .zip(y)
        .zip(&space.per_dim)
        .map(|((xk, yk), params)| kernel_1(xk, yk, params))
        .product())
}
