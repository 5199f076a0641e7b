#![allow(dead_code)]

use krylov_core::linalg::{CMatrix, CVector};
use krylov_core::{Complex64, HermitianOperator, StateVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize, scale: f64) -> HermitianOperator {
    let g = CMatrix::from_fn(n, n, |_, _| random_complex(rng));
    let h = (&g + g.adjoint()) * c(scale / 2.0, 0.0);
    HermitianOperator::new(h).unwrap()
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let v = CVector::from_fn(n, |_, _| random_complex(rng));
    StateVector::normalized(v, krylov_core::linalg::default_labels(n)).unwrap()
}

/// Phase-insensitive distance between unit vectors.
pub fn phase_distance(u: &CVector, v: &CVector) -> f64 {
    let overlap = v.dotc(u);
    let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
    (u - v * phase).norm()
}

pub fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}
