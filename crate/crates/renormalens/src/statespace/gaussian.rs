//! Gaussian state descriptions: classical covariance matrices and quantum
//! covariance/symplectic pairs.
//!
//! A classical Gaussian state is fixed by its moment-generating function
//! `<e^{phi(f)}> = e^{(f, A f)/2}`; a quantum Gaussian state by its
//! characteristic function `<e^{i Phi(f)}> = e^{-(f, A f)/2}` with the
//! canonical commutator `[Phi(f), Phi(g)] = i (f, Delta g)`.
//!
//! Mode ordering for quantum states is interleaved: `(phi_1, pi_1, phi_2,
//! pi_2, ...)`, with the standard symplectic block `[[0, 1], [-1, 0]]`.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, symmetry_defect, CMatrix, RMatrix, C64};

/// Symmetry tolerance for covariance matrices.
pub const COVARIANCE_TOL: f64 = 1e-12;

/// PSD tolerance on the minimum eigenvalue of `A + (i/2) Delta`.
pub const UNCERTAINTY_TOL: f64 = 1e-10;

/// Centered classical Gaussian state over `n_modes` real variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalGaussianState {
    covariance: RMatrix,
}

impl ClassicalGaussianState {
    pub fn new(covariance: RMatrix) -> Result<Self> {
        if covariance.nrows() != covariance.ncols() || covariance.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: covariance.nrows(),
                found: covariance.ncols(),
            });
        }
        let defect = symmetry_defect(&covariance);
        if defect > COVARIANCE_TOL * covariance.amax().max(1.0) {
            return Err(Error::InvalidState(format!(
                "covariance is not symmetric (defect {defect:e})"
            )));
        }
        let (vals, _) = crate::linalg::symmetric_eig(&covariance);
        if vals.min() <= 0.0 {
            return Err(Error::InvalidState(format!(
                "covariance is not positive definite (min eigenvalue {:e})",
                vals.min()
            )));
        }
        Ok(Self { covariance })
    }

    pub fn n_modes(&self) -> usize {
        self.covariance.nrows()
    }

    pub fn covariance(&self) -> &RMatrix {
        &self.covariance
    }
}

/// Quantum Gaussian state: real symmetric covariance `A` and antisymmetric
/// nondegenerate symplectic form `Delta` with `A + (i/2) Delta >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumGaussianState {
    covariance: RMatrix,
    symplectic: RMatrix,
}

impl QuantumGaussianState {
    pub fn new(covariance: RMatrix, symplectic: RMatrix) -> Result<Self> {
        let n = covariance.nrows();
        if covariance.ncols() != n || symplectic.nrows() != n || symplectic.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: symplectic.nrows() });
        }
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidState(format!(
                "quantum Gaussian state needs an even dimension, got {n}"
            )));
        }
        let sd = symmetry_defect(&covariance);
        if sd > COVARIANCE_TOL * covariance.amax().max(1.0) {
            return Err(Error::InvalidState(format!("covariance not symmetric ({sd:e})")));
        }
        // antisymmetry of Delta
        let mut anti = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                anti = anti.max((symplectic[(i, j)] + symplectic[(j, i)]).abs());
            }
        }
        if anti > COVARIANCE_TOL * symplectic.amax().max(1.0) {
            return Err(Error::InvalidState(format!("Delta not antisymmetric ({anti:e})")));
        }
        // nondegeneracy
        if crate::linalg::invert(&symplectic).is_err() {
            return Err(Error::InvalidState("Delta is degenerate".into()));
        }
        // uncertainty: A + (i/2) Delta >= 0 as a complex Hermitian matrix
        let min = min_eig_a_plus_half_i_delta(&covariance, &symplectic);
        if min < -UNCERTAINTY_TOL * covariance.amax().max(1.0) {
            return Err(Error::InvalidState(format!(
                "A + (i/2) Delta has negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { covariance, symplectic })
    }

    /// Single-mode standard-form state with quadrature covariance
    /// `diag(v_phi, v_pi)` and `[phi, pi] = i`.
    pub fn single_mode(v_phi: f64, v_pi: f64) -> Result<Self> {
        let cov = RMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![v_phi, v_pi]));
        Self::new(cov, standard_symplectic(1))
    }

    pub fn n_modes(&self) -> usize {
        self.covariance.nrows() / 2
    }

    pub fn covariance(&self) -> &RMatrix {
        &self.covariance
    }

    pub fn symplectic(&self) -> &RMatrix {
        &self.symplectic
    }
}

/// Standard symplectic form over `n_modes` interleaved mode pairs.
pub fn standard_symplectic(n_modes: usize) -> RMatrix {
    let n = 2 * n_modes;
    let mut d = RMatrix::zeros(n, n);
    for m in 0..n_modes {
        d[(2 * m, 2 * m + 1)] = 1.0;
        d[(2 * m + 1, 2 * m)] = -1.0;
    }
    d
}

/// Minimum eigenvalue of the complex Hermitian matrix `M + (i/2) K` built from
/// a real symmetric `M` and a real antisymmetric `K`.
pub fn min_eig_a_plus_half_i_delta(m: &RMatrix, k: &RMatrix) -> f64 {
    let n = m.nrows();
    let mut h = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = C64::new(m[(i, j)], 0.5 * k[(i, j)]);
        }
    }
    let (vals, _) = hermitian_eig(&h);
    vals.min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_is_a_valid_state() {
        // vacuum covariance diag(1/2, 1/2) saturates A + (i/2) Delta >= 0
        let s = QuantumGaussianState::single_mode(0.5, 0.5).unwrap();
        assert_eq!(s.n_modes(), 1);
    }

    #[test]
    fn sub_heisenberg_rejected() {
        assert!(QuantumGaussianState::single_mode(0.3, 0.3).is_err());
    }

    #[test]
    fn classical_covariance_must_be_spd() {
        let m = RMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(ClassicalGaussianState::new(m).is_err());
    }
}
