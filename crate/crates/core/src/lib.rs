//! Krylov state complexity for finite-dimensional closed quantum systems.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] dense complex states, Hermitian operators and exact propagation.
//! * [`krylov`] the Lanczos recursion, spread/Krylov complexity, Shannon entropy and IPR.
//! * [`models`] single qubits, two-level atoms, qubit pairs and Rydberg pairs, with
//!   their closed-form complexities.
//! * [`bloch`] the single-qubit parameter-space geometry.
//! * [`subspace`] partitioned Hamiltonians and the effective-basis spread comparison.
//! * [`analysis`] amplitude and frequency estimates for oscillating traces.

pub mod analysis;
pub mod bloch;
pub mod error;
pub mod krylov;
pub mod linalg;
pub mod models;
pub mod subspace;

pub use error::{Error, Result};
pub use krylov::{ComplexityTrace, KrylovBasis, OrderedBasis};
pub use linalg::{HermitianOperator, SpectralDecomposition, StateVector};
pub use num_complex::Complex64;
