//! Hamiltonians, seed states and closed-form complexities for one and two
//! qubits.
//!
//! Two-qubit states are always ordered `(|gg>, |ge>, |eg>, |ee>)` (or
//! `(|++>, |+->, |-+>, |-->)` in an energy eigenbasis), first label = first
//! qubit.

mod pair;
mod qubit;
mod rydberg;

pub use pair::{
    build_pair, global_drive_pair_complexity_closed, noninteracting_pair_complexity,
    PairComplexity, PairSpec, PAIR_LABELS,
};
pub use qubit::{
    build_single_qubit, build_two_level_atom, single_qubit_complexity_closed,
    single_qubit_complexity_lanczos_form, two_level_atom_complexity, two_level_seed,
    SingleQubitSpec, TwoLevelAtomSpec, ATOM_LABELS, QUBIT_LABELS,
};
pub use rydberg::{
    biased_freezing_reference, blockade_reference_lanczos, build_rydberg_pair,
    effective_blockade_hamiltonian, rydberg_labels, rydberg_seed, rydberg_seed_vector,
    BiasedFreezingReference, PairSeed, ReferenceLanczos, RydbergPairSpec, RYDBERG_LABELS,
};

use crate::linalg::CVector;
use num_complex::Complex64;

pub(crate) fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn real_vector(xs: &[f64]) -> CVector {
    CVector::from_iterator(xs.len(), xs.iter().map(|&x| Complex64::new(x, 0.0)))
}
