//! Relevance spectra of coarse-graining channels on classical and quantum
//! states.
//!
//! An experimenter who only sees a system through a noisy channel `E` cannot
//! distinguish all perturbations of a state `rho`. This crate quantifies
//! that loss: it equips state space with the classical Fisher / quantum BKM
//! metric, forms the metric adjoint (transpose channel) `R_rho`, and solves
//! the eigenproblem `R_rho E(X_j) = eta_j X_j` whose eigenvalues - the
//! *relevances* - measure how distinguishable each perturbation direction
//! remains after coarse-graining.
//!
//! Modules:
//!
//! * [`statespace`] - grid densities, density matrices, Gaussian states, and
//!   the information geometry on them.
//! * [`channels`] - stochastic kernels, Kraus channels, Gaussian channel
//!   specifications, Heisenberg adjoints, and transpose channels.
//! * [`spectra`] - the dense relevance eigenproblem, equivalence tests, and
//!   distinguishability.
//! * [`gaussian_exact`] - closed-form solutions: single-mode Hermite spectra,
//!   multimode classical Gaussian H-matrices, quantum quadratic sectors, and
//!   Klein-Gordon relevance formulas.
//! * [`perturbation`] - Fock-space perturbation theory for quartic
//!   interactions around Gaussian states.
//! * [`rgflow`] - moment-matching renormalization trajectories and regulator
//!   flows.
//! * [`oscillator`] - truncated bosonic-oscillator helpers used by dense
//!   cross-checks.
//! * [`suite`] - the acceptance/invariant suite run by tests and the CLI.

pub mod channels;
pub mod error;
pub mod gaussian_exact;
pub mod jsonio;
pub mod linalg;
pub mod oscillator;
pub mod perturbation;
pub mod rgflow;
pub mod spectra;
pub mod statespace;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::{CMatrix, RMatrix, RVector, C64};
pub use statespace::State;
