//! Tangent objects at a state: features (traceless perturbation directions)
//! and observables (their metric duals).
//!
//! Both come in a grid form (real function on a grid) and a matrix form
//! (Hermitian matrix); `Tangent` is the untyped union the metric kernels act
//! on, while `Feature` and `Observable` carry the validated invariants.

use crate::error::{Error, Result};
use crate::linalg::{hermiticity_defect, CMatrix, RVector};
use crate::statespace::grid::GridSpec;

/// Tolerance for tracelessness / Hermiticity of tangent objects.
pub const TANGENT_TOL: f64 = 1e-10;

/// A real function sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub spec: GridSpec,
    pub values: RVector,
}

impl GridFunction {
    pub fn new(spec: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != spec.n_points {
            return Err(Error::DimensionMismatch { expected: spec.n_points, found: values.len() });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidState("grid function has nonfinite values".into()));
        }
        Ok(Self { spec, values: RVector::from_vec(values) })
    }

    /// Quadrature integral `sum_i f_i dx`.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.spec.dx()
    }

    /// Sample a closure on the grid.
    pub fn sample(spec: GridSpec, f: impl Fn(f64) -> f64) -> Self {
        let values = spec.points().iter().map(|&x| f(x)).collect();
        Self { spec, values: RVector::from_vec(values) }
    }
}

/// Untyped tangent value: the representation union shared by features and
/// observables.
#[derive(Debug, Clone, PartialEq)]
pub enum Tangent {
    Grid(GridFunction),
    Matrix(CMatrix),
}

impl Tangent {
    pub fn dim(&self) -> usize {
        match self {
            Tangent::Grid(g) => g.values.len(),
            Tangent::Matrix(m) => m.nrows(),
        }
    }

    pub fn as_grid(&self) -> Result<&GridFunction> {
        match self {
            Tangent::Grid(g) => Ok(g),
            Tangent::Matrix(_) => Err(Error::RepresentationMismatch),
        }
    }

    pub fn as_matrix(&self) -> Result<&CMatrix> {
        match self {
            Tangent::Matrix(m) => Ok(m),
            Tangent::Grid(_) => Err(Error::RepresentationMismatch),
        }
    }
}

/// A feature: a traceless tangent direction at a state.
///
/// Grid form integrates to zero; matrix form is Hermitian and traceless.
#[derive(Debug, Clone, PartialEq)]
pub struct Feature(Tangent);

impl Feature {
    pub fn grid(f: GridFunction) -> Result<Self> {
        let scale = f.values.amax().max(1.0);
        if f.integral().abs() > TANGENT_TOL * scale {
            return Err(Error::InvalidState(format!(
                "grid feature integrates to {:e}, not 0",
                f.integral()
            )));
        }
        Ok(Self(Tangent::Grid(f)))
    }

    pub fn matrix(m: CMatrix) -> Result<Self> {
        let scale = m.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
        let herm = hermiticity_defect(&m);
        if herm > TANGENT_TOL * scale {
            return Err(Error::InvalidState(format!("matrix feature not Hermitian ({herm:e})")));
        }
        let tr = crate::linalg::trace_re(&m);
        let tr_im: f64 = m.diagonal().iter().map(|z| z.im).sum();
        if tr.abs() > TANGENT_TOL * scale || tr_im.abs() > TANGENT_TOL * scale {
            return Err(Error::InvalidState(format!("matrix feature has trace {tr:e}")));
        }
        Ok(Self(Tangent::Matrix(m)))
    }

    pub fn tangent(&self) -> &Tangent {
        &self.0
    }

    pub fn into_tangent(self) -> Tangent {
        self.0
    }
}

/// An observable: Hermitian (matrix form) or any real grid function; no
/// traceless constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable(Tangent);

impl Observable {
    pub fn grid(f: GridFunction) -> Self {
        Self(Tangent::Grid(f))
    }

    pub fn matrix(m: CMatrix) -> Result<Self> {
        let scale = m.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
        let herm = hermiticity_defect(&m);
        if herm > TANGENT_TOL * scale {
            return Err(Error::InvalidState(format!(
                "matrix observable not Hermitian ({herm:e})"
            )));
        }
        Ok(Self(Tangent::Matrix(m)))
    }

    pub fn tangent(&self) -> &Tangent {
        &self.0
    }

    pub fn into_tangent(self) -> Tangent {
        self.0
    }
}

impl From<Feature> for Tangent {
    fn from(f: Feature) -> Tangent {
        f.0
    }
}

impl From<Observable> for Tangent {
    fn from(o: Observable) -> Tangent {
        o.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_feature_must_be_traceless() {
        let spec = GridSpec::new(-1.0, 1.0, 5).unwrap();
        let f = GridFunction::new(spec, vec![1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(Feature::grid(f).is_err());
        let g = GridFunction::new(spec, vec![1.0, 0.0, 0.0, 0.0, -1.0]).unwrap();
        assert!(Feature::grid(g).is_ok());
    }
}
