//! Information geometry at a faithful state: relative entropy, the BKM
//! kernel `Omega_rho` and its inverse, and the induced inner products.
//!
//! Conventions (fixed throughout the crate):
//!
//! * Relative entropy uses the literal form
//!   `S(rho' || rho) = Tr(rho (log rho - log rho'))` - the *second* argument
//!   sits under the trace. Downstream metric identities depend on this
//!   ordering, so it is enforced here once.
//! * `Omega_rho^{-1}(Y) = d/dt log(rho + t Y)|_{t=0}`; in the eigenbasis of
//!   `rho` this multiplies matrix entries by the divided difference
//!   `(log p_i - log p_j)/(p_i - p_j)`.
//! * `Omega_rho(B) = int_0^1 rho^s B rho^{1-s} ds` is its inverse, with the
//!   logarithmic-mean kernel `(p_i - p_j)/(log p_i - log p_j)`. This is the
//!   BKM (Kubo-Mori) metric; no other member of the monotone-metric family
//!   ships here (see [`MetricKernel`] for the extension point).
//! * Degenerate eigenvalue pairs (within `1e-12 * max p`) use the analytic
//!   limits `1/p` and `p`, evaluated at the midpoint to keep the kernel
//!   symmetric and continuous.
//!
//! The quadratic expansion of relative entropy around `rho` reads
//! `S(rho + eps X || rho) = (eps^2 / 2) <X, X>_rho + O(eps^3)` with
//! `<X, Y>_rho = tr(X Omega^{-1}(Y))`; note the exact Taylor coefficient
//! carries the factor 1/2.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};
use crate::statespace::tangent::{GridFunction, Tangent};
use crate::statespace::State;

/// Relative tolerance deciding when two eigenvalues count as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Extension point for Petz-Sudar monotone metrics. Only the BKM kernel is
/// implemented; the trait fixes the shape a future theta-metric would take.
pub trait MetricKernel {
    /// Kernel value k(p, q) multiplying matrix entries of `Omega_rho(B)` in
    /// the eigenbasis of rho.
    fn omega_kernel(&self, p: f64, q: f64) -> f64;

    fn omega_inv_kernel(&self, p: f64, q: f64) -> f64 {
        1.0 / self.omega_kernel(p, q)
    }
}

/// The BKM / Kubo-Mori kernel: logarithmic mean of the eigenvalue pair.
pub struct BkmKernel;

impl MetricKernel for BkmKernel {
    fn omega_kernel(&self, p: f64, q: f64) -> f64 {
        log_mean(p, q)
    }
}

/// Logarithmic mean with the analytic midpoint limit on near-degenerate
/// pairs.
pub fn log_mean(p: f64, q: f64) -> f64 {
    if (p - q).abs() < DEGENERACY_TOL * p.max(q) {
        0.5 * (p + q)
    } else {
        (p - q) / (p.ln() - q.ln())
    }
}

/// Relative entropy `S(rho' || rho) = Tr(rho (log rho - log rho'))`.
pub fn relative_entropy(rho_prime: &State, rho: &State) -> Result<f64> {
    match (rho_prime, rho) {
        (State::Grid(gp), State::Grid(g)) => {
            if gp.spec() != g.spec() {
                return Err(Error::DimensionMismatch {
                    expected: g.n_points(),
                    found: gp.n_points(),
                });
            }
            let dx = g.dx();
            let mut acc = 0.0;
            for i in 0..g.n_points() {
                let r = g.values()[i];
                let rp = gp.values()[i];
                acc += r * (r.ln() - rp.ln());
            }
            Ok(acc * dx)
        }
        (State::Density(dp), State::Density(d)) => {
            if dp.dim() != d.dim() {
                return Err(Error::DimensionMismatch { expected: d.dim(), found: dp.dim() });
            }
            let (p, _) = d.positive_eig()?;
            let (pp, up) = dp.positive_eig()?;
            // Tr(rho log rho) in its own eigenbasis
            let s_self: f64 = p.iter().map(|&v| v * v.ln()).sum();
            // Tr(rho log rho') via log rho' assembled in rho' eigenbasis
            let n = d.dim();
            let mut log_rp = CMatrix::zeros(n, n);
            for k in 0..n {
                log_rp[(k, k)] = C64::new(pp[k].ln(), 0.0);
            }
            let log_rp = &up * log_rp * up.adjoint();
            let cross = crate::linalg::hs_inner(d.entries(), &log_rp);
            Ok(s_self - cross)
        }
        _ => Err(Error::RepresentationMismatch),
    }
}

fn kernel_apply_matrix(
    rho: &crate::statespace::DensityMatrix,
    y: &CMatrix,
    inverse: bool,
) -> Result<CMatrix> {
    if y.nrows() != rho.dim() || y.ncols() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: y.nrows() });
    }
    let (p, u) = rho.positive_eig()?;
    let yt = u.adjoint() * y * &u;
    let n = rho.dim();
    let mut out = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let k = log_mean(p[i], p[j]);
            let k = if inverse { 1.0 / k } else { k };
            out[(i, j)] = yt[(i, j)] * C64::new(k, 0.0);
        }
    }
    Ok(&u * out * u.adjoint())
}

/// `Omega_rho^{-1}`: Schroedinger-to-Heisenberg map sending a tangent value
/// to the observable with the same metric pairing. Classical form is the
/// pointwise division `Y_i / rho_i`.
pub fn omega_inv(rho: &State, y: &Tangent) -> Result<Tangent> {
    match (rho, y) {
        (State::Grid(g), Tangent::Grid(f)) => {
            if f.spec != g.spec() {
                return Err(Error::DimensionMismatch {
                    expected: g.n_points(),
                    found: f.values.len(),
                });
            }
            let vals: Vec<f64> =
                (0..g.n_points()).map(|i| f.values[i] / g.values()[i]).collect();
            Ok(Tangent::Grid(GridFunction::new(g.spec(), vals)?))
        }
        (State::Density(d), Tangent::Matrix(m)) => {
            Ok(Tangent::Matrix(kernel_apply_matrix(d, m, true)?))
        }
        _ => Err(Error::RepresentationMismatch),
    }
}

/// `Omega_rho`: Heisenberg-to-Schroedinger map, `int_0^1 rho^s B rho^{1-s} ds`
/// in the quantum case and pointwise multiplication classically.
pub fn omega(rho: &State, b: &Tangent) -> Result<Tangent> {
    match (rho, b) {
        (State::Grid(g), Tangent::Grid(f)) => {
            if f.spec != g.spec() {
                return Err(Error::DimensionMismatch {
                    expected: g.n_points(),
                    found: f.values.len(),
                });
            }
            let vals: Vec<f64> =
                (0..g.n_points()).map(|i| f.values[i] * g.values()[i]).collect();
            Ok(Tangent::Grid(GridFunction::new(g.spec(), vals)?))
        }
        (State::Density(d), Tangent::Matrix(m)) => {
            Ok(Tangent::Matrix(kernel_apply_matrix(d, m, false)?))
        }
        _ => Err(Error::RepresentationMismatch),
    }
}

/// Trace pairing `tr(X Y)` between two tangent values of the same
/// representation; grid form carries the quadrature weight.
pub fn tangent_pairing(a: &Tangent, b: &Tangent) -> Result<f64> {
    match (a, b) {
        (Tangent::Grid(f), Tangent::Grid(g)) => {
            if f.spec != g.spec {
                return Err(Error::DimensionMismatch {
                    expected: f.values.len(),
                    found: g.values.len(),
                });
            }
            Ok(f.values.dot(&g.values) * f.spec.dx())
        }
        (Tangent::Matrix(m), Tangent::Matrix(n)) => {
            if m.nrows() != n.nrows() {
                return Err(Error::DimensionMismatch { expected: m.nrows(), found: n.nrows() });
            }
            Ok(crate::linalg::hs_inner(m, n))
        }
        _ => Err(Error::RepresentationMismatch),
    }
}

/// Metric inner product on tangent values,
/// `<X, Y>_rho = tr(X Omega_rho^{-1}(Y))`; classically
/// `sum_i X_i Y_i / rho_i dx`.
pub fn metric_inner_tangent(rho: &State, x: &Tangent, y: &Tangent) -> Result<f64> {
    let dual = omega_inv(rho, y)?;
    tangent_pairing(x, &dual)
}

/// Metric inner product of two features.
pub fn metric_inner(
    rho: &State,
    x: &crate::statespace::Feature,
    y: &crate::statespace::Feature,
) -> Result<f64> {
    metric_inner_tangent(rho, x.tangent(), y.tangent())
}

/// Dual (correlation) inner product of observables,
/// `<A, B>*_rho = tr(A Omega_rho(B))`; classically `E_rho[A B]`.
pub fn observable_inner(
    rho: &State,
    a: &crate::statespace::Observable,
    b: &crate::statespace::Observable,
) -> Result<f64> {
    let img = omega(rho, b.tangent())?;
    tangent_pairing(a.tangent(), &img)
}

/// Expectation value of an observable in a state.
pub fn expectation(rho: &State, a: &crate::statespace::Observable) -> Result<f64> {
    match (rho, a.tangent()) {
        (State::Grid(g), Tangent::Grid(f)) => {
            if f.spec != g.spec() {
                return Err(Error::DimensionMismatch {
                    expected: g.n_points(),
                    found: f.values.len(),
                });
            }
            Ok(f.values.dot(g.values()) * g.dx())
        }
        (State::Density(d), Tangent::Matrix(m)) => d.expectation(m),
        _ => Err(Error::RepresentationMismatch),
    }
}
