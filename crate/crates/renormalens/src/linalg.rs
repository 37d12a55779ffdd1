//! Dense linear-algebra helpers shared by the state-space and spectral modules.
//!
//! Everything here works on `nalgebra` dynamic matrices with `f64` scalars
//! (real symmetric) or `Complex<f64>` (Hermitian). Eigen-decompositions are
//! the workhorse: matrix functions of states (log, powers, square roots) and
//! the divided-difference kernels of the BKM metric are all evaluated in the
//! eigenbasis.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

/// Condition-number guard for symmetric positive-definite inversions.
pub const SPD_CONDITION_CAP: f64 = 1e12;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eig(m: &CMatrix) -> (RVector, CMatrix) {
    let se = m.clone().symmetric_eigen();
    sort_eig_ascending(se.eigenvalues, se.eigenvectors)
}

/// Eigen-decomposition of a real symmetric matrix, eigenvalues ascending.
pub fn symmetric_eig(m: &RMatrix) -> (RVector, RMatrix) {
    let se = m.clone().symmetric_eigen();
    sort_eig_ascending(se.eigenvalues, se.eigenvectors)
}

fn sort_eig_ascending<T: nalgebra::Scalar + Copy + num_traits::Zero>(
    vals: RVector,
    vecs: DMatrix<T>,
) -> (RVector, DMatrix<T>) {
    let n = vals.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    let sorted_vals = RVector::from_iterator(n, idx.iter().map(|&i| vals[i]));
    let mut sorted_vecs = DMatrix::<T>::zeros(vecs.nrows(), vecs.ncols());
    for (new, &old) in idx.iter().enumerate() {
        sorted_vecs.set_column(new, &vecs.column(old));
    }
    (sorted_vals, sorted_vecs)
}

/// Apply a scalar function to a real symmetric matrix through its eigenbasis.
pub fn symmetric_matrix_fn(m: &RMatrix, f: impl Fn(f64) -> f64) -> RMatrix {
    let (vals, vecs) = symmetric_eig(m);
    let d = RMatrix::from_diagonal(&vals.map(f));
    &vecs * d * vecs.transpose()
}

/// Square root of a symmetric positive-definite matrix.
///
/// Fails with `SingularMatrix` when the condition number exceeds the cap.
pub fn spd_sqrt(m: &RMatrix) -> Result<RMatrix> {
    spd_power(m, 0.5)
}

/// Inverse square root of a symmetric positive-definite matrix.
pub fn spd_inv_sqrt(m: &RMatrix) -> Result<RMatrix> {
    spd_power(m, -0.5)
}

/// Real power of a symmetric positive-definite matrix with a condition guard.
pub fn spd_power(m: &RMatrix, p: f64) -> Result<RMatrix> {
    let (vals, vecs) = symmetric_eig(m);
    let max = vals.max();
    let min = vals.min();
    if min <= 0.0 || max / min > SPD_CONDITION_CAP {
        return Err(Error::SingularMatrix {
            condition: if min > 0.0 { max / min } else { f64::INFINITY },
        });
    }
    let d = RMatrix::from_diagonal(&vals.map(|v| v.powf(p)));
    Ok(&vecs * d * vecs.transpose())
}

/// Inverse through LU with a crude condition estimate, used where inputs are
/// general (not necessarily SPD) square matrices.
pub fn invert(m: &RMatrix) -> Result<RMatrix> {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if smin <= 0.0 || smax / smin > SPD_CONDITION_CAP {
        return Err(Error::SingularMatrix {
            condition: if smin > 0.0 { smax / smin } else { f64::INFINITY },
        });
    }
    m.clone()
        .try_inverse()
        .ok_or(Error::SingularMatrix { condition: f64::INFINITY })
}

/// Max absolute deviation from Hermiticity.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Max absolute deviation from real symmetry.
pub fn symmetry_defect(m: &RMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let d = (m[(i, j)] - m[(j, i)]).abs();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Force exact Hermiticity by averaging with the adjoint.
pub fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

/// Real part of the trace.
pub fn trace_re(m: &CMatrix) -> f64 {
    m.diagonal().iter().map(|z| z.re).sum()
}

/// Hilbert-Schmidt inner product restricted to Hermitian arguments, Re tr(A B).
pub fn hs_inner(a: &CMatrix, b: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc.re
}

/// Orthonormal basis of the real vector space of d x d Hermitian matrices
/// under the Hilbert-Schmidt inner product: diagonal units, then symmetric
/// and antisymmetric off-diagonal pairs.
pub fn hermitian_basis(d: usize) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        let mut b = CMatrix::zeros(d, d);
        b[(i, i)] = C64::new(1.0, 0.0);
        out.push(b);
    }
    let s = 1.0 / 2.0f64.sqrt();
    for i in 0..d {
        for j in i + 1..d {
            let mut b = CMatrix::zeros(d, d);
            b[(i, j)] = C64::new(s, 0.0);
            b[(j, i)] = C64::new(s, 0.0);
            out.push(b);
            let mut b = CMatrix::zeros(d, d);
            b[(i, j)] = C64::new(0.0, s);
            b[(j, i)] = C64::new(0.0, -s);
            out.push(b);
        }
    }
    out
}

/// Gauss-Legendre nodes and weights on [0, 1] via the Golub-Welsch tridiagonal.
pub fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut jac = RMatrix::zeros(n, n);
    for i in 1..n {
        let b = i as f64 / (4.0 * (i as f64) * (i as f64) - 1.0).sqrt();
        jac[(i - 1, i)] = b;
        jac[(i, i - 1)] = b;
    }
    let (vals, vecs) = symmetric_eig(&jac);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in 0..n {
        nodes.push(0.5 * (vals[k] + 1.0));
        weights.push(vecs[(0, k)] * vecs[(0, k)]); // x2 for [-1,1], /2 for map to [0,1]
    }
    (nodes, weights)
}

/// Gauss-Hermite nodes and weights for weight e^{-t^2}, weights normalized to
/// sum to one (probabilist form divided by sqrt(pi)).
pub fn gauss_hermite_normalized(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut jac = RMatrix::zeros(n, n);
    for i in 1..n {
        let b = (i as f64 / 2.0).sqrt();
        jac[(i - 1, i)] = b;
        jac[(i, i - 1)] = b;
    }
    let (vals, vecs) = symmetric_eig(&jac);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in 0..n {
        nodes.push(vals[k]);
        weights.push(vecs[(0, k)] * vecs[(0, k)]);
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre_01(8);
        // integral of t^5 over [0,1] = 1/6
        let val: f64 = x.iter().zip(&w).map(|(t, w)| t.powi(5) * w).sum();
        assert!((val - 1.0 / 6.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gauss_hermite_moments() {
        let (t, w) = gauss_hermite_normalized(16);
        // z = sqrt(2) t is standard normal: second moment 1, fourth moment 3
        let m2: f64 = t.iter().zip(&w).map(|(t, w)| 2.0 * t * t * w).sum();
        let m4: f64 = t.iter().zip(&w).map(|(t, w)| 4.0 * t.powi(4) * w).sum();
        assert!((m2 - 1.0).abs() < 1e-12);
        assert!((m4 - 3.0).abs() < 1e-12);
    }

    #[test]
    fn spd_sqrt_squares_back() {
        let m = RMatrix::from_row_slice(2, 2, &[2.0, 0.3, 0.3, 1.0]);
        let r = spd_sqrt(&m).unwrap();
        assert!((&r * &r - &m).abs().max() < 1e-12);
    }

    #[test]
    fn hermitian_basis_is_orthonormal() {
        let basis = hermitian_basis(3);
        assert_eq!(basis.len(), 9);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let v = hs_inner(a, b);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).abs() < 1e-14);
            }
        }
    }
}
