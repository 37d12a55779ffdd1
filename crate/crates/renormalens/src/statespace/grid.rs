//! Classical states on a uniform one-dimensional grid.
//!
//! Densities are stored as values at uniformly spaced points; every integral
//! is the uniform-grid quadrature sum `sum_i f_i dx`. States constructed
//! through [`build_gibbs_1d`] are normalized against exactly that sum, so the
//! normalization invariant holds to machine precision.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RVector;

/// Tolerance for the normalization invariant of a grid density.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Boundary density must stay below this fraction of the peak for Gibbs
/// construction.
pub const BOUNDARY_DECAY: f64 = 1e-12;

/// Geometry of a uniform grid on `[grid_min, grid_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub grid_min: f64,
    pub grid_max: f64,
    pub n_points: usize,
}

impl GridSpec {
    pub fn new(grid_min: f64, grid_max: f64, n_points: usize) -> Result<Self> {
        if n_points < 3 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 3 points, got {n_points}"
            )));
        }
        if !(grid_max > grid_min) || !grid_min.is_finite() || !grid_max.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "invalid grid range [{grid_min}, {grid_max}]"
            )));
        }
        Ok(Self { grid_min, grid_max, n_points })
    }

    /// Grid spacing.
    pub fn dx(&self) -> f64 {
        (self.grid_max - self.grid_min) / (self.n_points - 1) as f64
    }

    /// Coordinate of the i-th point.
    pub fn point(&self, i: usize) -> f64 {
        self.grid_min + self.dx() * i as f64
    }

    /// All grid coordinates.
    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }
}

/// A strictly positive probability density sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridDistribution {
    spec: GridSpec,
    values: RVector,
}

impl GridDistribution {
    /// Validate and wrap a density. Values must be strictly positive and
    /// integrate to one within [`NORMALIZATION_TOL`].
    pub fn new(spec: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != spec.n_points {
            return Err(Error::DimensionMismatch {
                expected: spec.n_points,
                found: values.len(),
            });
        }
        if values.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidState(
                "grid density values must be strictly positive and finite".into(),
            ));
        }
        let mass: f64 = values.iter().sum::<f64>() * spec.dx();
        if (mass - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidState(format!(
                "grid density integrates to {mass}, not 1"
            )));
        }
        Ok(Self { spec, values: RVector::from_vec(values) })
    }

    /// Normalize raw positive values into a distribution.
    pub fn from_unnormalized(spec: GridSpec, raw: Vec<f64>) -> Result<Self> {
        if raw.len() != spec.n_points {
            return Err(Error::DimensionMismatch { expected: spec.n_points, found: raw.len() });
        }
        if raw.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidState(
                "grid density values must be strictly positive and finite".into(),
            ));
        }
        let mass: f64 = raw.iter().sum::<f64>() * spec.dx();
        // Clamp at the smallest normal float: far tails may underflow, and
        // strict positivity must survive the division below.
        let values: Vec<f64> = raw.iter().map(|v| (v / mass).max(f64::MIN_POSITIVE)).collect();
        Self::new(spec, values)
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn dx(&self) -> f64 {
        self.spec.dx()
    }

    pub fn n_points(&self) -> usize {
        self.spec.n_points
    }

    pub fn values(&self) -> &RVector {
        &self.values
    }

    /// k-th raw moment `sum_i x_i^k rho_i dx`.
    pub fn moment(&self, k: u32) -> f64 {
        let dx = self.dx();
        (0..self.n_points())
            .map(|i| self.spec.point(i).powi(k as i32) * self.values[i])
            .sum::<f64>()
            * dx
    }
}

/// Polynomial Hamiltonian `H(x) = c2 x^2 + c4 x^4 + c6 x^6` defining a Gibbs
/// density `rho(x) ~ e^{-H(x)}`.
///
/// Coefficients may individually be negative (perturbative references use
/// `c4 < 0`); normalizability is checked where a density is actually built.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectiveHamiltonian1D {
    pub c2: f64,
    pub c4: f64,
    pub c6: f64,
}

impl EffectiveHamiltonian1D {
    pub fn new(c2: f64, c4: f64, c6: f64) -> Self {
        Self { c2, c4, c6 }
    }

    /// Pure Gaussian `x^2 / (2 tau^2)`.
    pub fn gaussian(tau: f64) -> Self {
        Self { c2: 1.0 / (2.0 * tau * tau), c4: 0.0, c6: 0.0 }
    }

    /// `x^2/(2 tau^2) + lambda x^4`.
    pub fn quartic(tau: f64, lambda: f64) -> Self {
        Self { c2: 1.0 / (2.0 * tau * tau), c4: lambda, c6: 0.0 }
    }

    /// `x^2/(2 tau^2) + lambda x^4 + x^6/regulator`.
    pub fn regulated(tau: f64, lambda: f64, regulator: f64) -> Self {
        Self { c2: 1.0 / (2.0 * tau * tau), c4: lambda, c6: 1.0 / regulator }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        (self.c2 + (self.c4 + self.c6 * x2) * x2) * x2
    }

    /// Highest-degree nonzero coefficient; `e^{-H}` is integrable on the real
    /// line iff it is positive.
    pub fn leading_coefficient(&self) -> f64 {
        if self.c6 != 0.0 {
            self.c6
        } else if self.c4 != 0.0 {
            self.c4
        } else {
            self.c2
        }
    }

    pub fn is_normalizable(&self) -> bool {
        self.leading_coefficient() > 0.0
    }
}

/// Thermal state `rho(x) ~ e^{-H(x)}` sampled on a grid.
///
/// Fails with `NonNormalizable` if the leading coefficient of `H` is not
/// positive and with `GridTooNarrow` if the boundary density exceeds
/// `1e-12` of the peak.
pub fn build_gibbs_1d(
    h: &EffectiveHamiltonian1D,
    grid_min: f64,
    grid_max: f64,
    n_points: usize,
) -> Result<GridDistribution> {
    if !h.is_normalizable() {
        return Err(Error::NonNormalizable);
    }
    let spec = GridSpec::new(grid_min, grid_max, n_points)?;
    // Shift by the minimum of H over the grid so exp never overflows, and
    // check the boundary decay in log space before any underflow clamping.
    let hvals: Vec<f64> = spec.points().iter().map(|&x| h.eval(x)).collect();
    let hmin = hvals.iter().cloned().fold(f64::INFINITY, f64::min);
    let h_boundary = hvals[0].min(hvals[n_points - 1]);
    let boundary_ratio = (-(h_boundary - hmin)).exp();
    if boundary_ratio > BOUNDARY_DECAY {
        return Err(Error::GridTooNarrow { boundary_ratio });
    }
    let raw: Vec<f64> = hvals
        .iter()
        .map(|&v| (-(v - hmin)).exp().max(f64::MIN_POSITIVE))
        .collect();
    GridDistribution::from_unnormalized(spec, raw)
}

/// k-th moment of a grid density (uniform-grid quadrature).
pub fn moment(p: &GridDistribution, k: u32) -> f64 {
    p.moment(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_normal_peak_value() {
        let h = EffectiveHamiltonian1D::gaussian(1.0);
        let rho = build_gibbs_1d(&h, -8.0, 8.0, 401).unwrap();
        // value at x = 0 is 1/sqrt(2 pi)
        let mid = rho.values()[200];
        assert!((mid - 1.0 / (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-6);
    }

    #[test]
    fn standard_normal_moments() {
        let h = EffectiveHamiltonian1D::gaussian(1.0);
        let rho = build_gibbs_1d(&h, -8.0, 8.0, 401).unwrap();
        assert!((moment(&rho, 2) - 1.0).abs() < 1e-6);
        assert!((moment(&rho, 4) - 3.0).abs() < 1e-5);
    }

    #[test]
    fn quartic_moments_match_quadrature_oracle() {
        // Oracle values computed by adaptive quadrature of
        // x^k e^{-(x^2/2 + 0.05 x^4)} over the real line, independent of the
        // grid implementation.
        let h = EffectiveHamiltonian1D::new(0.5, 0.05, 0.0);
        let rho = build_gibbs_1d(&h, -8.0, 8.0, 801).unwrap();
        assert!((moment(&rho, 2) - 0.724_059_020_240_825).abs() < 1e-9);
        assert!((moment(&rho, 4) - 1.379_704_898_795_875).abs() < 1e-8);
        assert!(moment(&rho, 2) < 1.0);
    }

    #[test]
    fn negative_quartic_rejected() {
        let h = EffectiveHamiltonian1D::new(0.5, -0.1, 0.0);
        assert!(matches!(
            build_gibbs_1d(&h, -8.0, 8.0, 401),
            Err(Error::NonNormalizable)
        ));
    }

    #[test]
    fn narrow_grid_rejected() {
        let h = EffectiveHamiltonian1D::gaussian(1.0);
        assert!(matches!(
            build_gibbs_1d(&h, -3.0, 3.0, 101),
            Err(Error::GridTooNarrow { .. })
        ));
    }

    #[test]
    fn gibbs_is_normalized_exactly() {
        let h = EffectiveHamiltonian1D::new(0.5, 0.05, 0.01);
        let rho = build_gibbs_1d(&h, -9.0, 9.0, 501).unwrap();
        let mass: f64 = rho.values().iter().sum::<f64>() * rho.dx();
        assert!((mass - 1.0).abs() < 1e-14);
    }
}
