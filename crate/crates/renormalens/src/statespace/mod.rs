//! State representations and the information geometry on them.
//!
//! Four state families are supported: classical densities on a uniform grid,
//! finite-dimensional density matrices, and classical/quantum Gaussian states
//! given by covariance data. The geometric operations (relative entropy, the
//! BKM kernel and its inverse, metric inner products) act on the first two;
//! Gaussian states feed the closed-form machinery in `gaussian_exact`.

mod density;
mod gaussian;
pub mod geometry;
mod grid;
mod tangent;

pub use density::{DensityMatrix, DENSITY_TOL, RANK_TOL_FACTOR};
pub use gaussian::{
    min_eig_a_plus_half_i_delta, standard_symplectic, ClassicalGaussianState,
    QuantumGaussianState, UNCERTAINTY_TOL,
};
pub use geometry::{
    expectation, log_mean, metric_inner, metric_inner_tangent, observable_inner, omega,
    omega_inv, relative_entropy, tangent_pairing, BkmKernel, MetricKernel, DEGENERACY_TOL,
};
pub use grid::{
    build_gibbs_1d, moment, EffectiveHamiltonian1D, GridDistribution, GridSpec, BOUNDARY_DECAY,
    NORMALIZATION_TOL,
};
pub use tangent::{Feature, GridFunction, Observable, Tangent, TANGENT_TOL};

/// Any supported state representation.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Grid(GridDistribution),
    Density(DensityMatrix),
    ClassicalGaussian(ClassicalGaussianState),
    QuantumGaussian(QuantumGaussianState),
}

impl State {
    pub fn kind(&self) -> &'static str {
        match self {
            State::Grid(_) => "grid",
            State::Density(_) => "density",
            State::ClassicalGaussian(_) => "cgauss",
            State::QuantumGaussian(_) => "qgauss",
        }
    }

    pub fn as_grid(&self) -> crate::error::Result<&GridDistribution> {
        match self {
            State::Grid(g) => Ok(g),
            _ => Err(crate::error::Error::RepresentationMismatch),
        }
    }

    pub fn as_density(&self) -> crate::error::Result<&DensityMatrix> {
        match self {
            State::Density(d) => Ok(d),
            _ => Err(crate::error::Error::RepresentationMismatch),
        }
    }
}

impl From<GridDistribution> for State {
    fn from(g: GridDistribution) -> Self {
        State::Grid(g)
    }
}

impl From<DensityMatrix> for State {
    fn from(d: DensityMatrix) -> Self {
        State::Density(d)
    }
}
