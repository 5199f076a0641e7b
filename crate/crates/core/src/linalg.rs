//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Everything here works on `nalgebra` dense vectors and matrices of
//! [`Complex64`]. Dimensions in this crate are tiny (at most a few dozen), so
//! time evolution is done exactly through the spectral decomposition rather
//! than with series expansions or ODE steppers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CVector = DVector<Complex64>;
pub type CMatrix = DMatrix<Complex64>;

/// Tolerance on the Euclidean norm of a [`StateVector`].
pub const NORM_TOL: f64 = 1e-12;
/// Elementwise tolerance on `H - H^dagger`, relative to `max(1, |H|_max)`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// A normalized pure state over a labeled computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: CVector,
    labels: Vec<String>,
}

impl StateVector {
    /// Builds a state, requiring the amplitudes to already be normalized.
    pub fn new(amplitudes: CVector, labels: Vec<String>) -> Result<Self> {
        check_shape(&amplitudes, &labels)?;
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::UnnormalizedState { norm });
        }
        Ok(Self { amplitudes, labels })
    }

    /// Builds a state after rescaling the amplitudes to unit norm.
    pub fn normalized(amplitudes: CVector, labels: Vec<String>) -> Result<Self> {
        check_shape(&amplitudes, &labels)?;
        let norm = amplitudes.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::UnnormalizedState { norm });
        }
        Ok(Self {
            amplitudes: amplitudes.unscale(norm),
            labels,
        })
    }

    /// The computational-basis state `labels[index]`.
    pub fn basis_state(labels: Vec<String>, index: usize) -> Result<Self> {
        if index >= labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                actual: index + 1,
            });
        }
        let mut amplitudes = CVector::zeros(labels.len());
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self::new(amplitudes, labels)
    }

    /// Generic labels `"0"`, `"1"`, ... for anonymous vectors.
    pub fn anonymous(amplitudes: CVector) -> Result<Self> {
        let labels = default_labels(amplitudes.len());
        Self::normalized(amplitudes, labels)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn into_amplitudes(self) -> CVector {
        self.amplitudes
    }

    pub(crate) fn with_amplitudes(&self, amplitudes: CVector) -> Self {
        Self {
            amplitudes,
            labels: self.labels.clone(),
        }
    }
}

fn check_shape(amplitudes: &CVector, labels: &[String]) -> Result<()> {
    if amplitudes.is_empty() || amplitudes.len() != labels.len() {
        return Err(Error::InvalidStateShape);
    }
    if amplitudes.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::InvalidStateShape);
    }
    Ok(())
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| i.to_string()).collect()
}

/// A dense Hermitian matrix (energy units, hbar = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: CMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        if matrix.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonHermitianInput {
                residual: f64::NAN,
            });
        }
        let residual = hermiticity_residual(&matrix);
        let scale = max_abs(&matrix).max(1.0);
        if residual > HERMITIAN_TOL * scale {
            return Err(Error::NonHermitianInput { residual });
        }
        Ok(Self { matrix })
    }

    /// Builds an operator from a real symmetric matrix given row by row.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let mut m = CMatrix::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x, 0.0);
            }
        }
        Self::new(m)
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            matrix: CMatrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// `max_ij |H_ij|`.
    pub fn max_abs(&self) -> f64 {
        max_abs(&self.matrix)
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        &self.matrix * v
    }

    /// `<u|H|v>`.
    pub fn matrix_element(&self, u: &CVector, v: &CVector) -> Complex64 {
        u.dotc(&(&self.matrix * v))
    }

    pub fn expectation(&self, v: &CVector) -> f64 {
        self.matrix_element(v, v).re
    }

    pub(crate) fn from_matrix_unchecked(matrix: CMatrix) -> Self {
        Self { matrix }
    }
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

fn hermiticity_residual(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    /// `max |H - V diag(lambda) V^dagger|`.
    pub fn reconstruction_residual(&self, h: &HermitianOperator) -> f64 {
        max_abs(&(h.matrix() - self.reconstruct()))
    }

    /// `max |V^dagger V - I|`.
    pub fn gram_residual(&self) -> f64 {
        let v = &self.eigenvectors;
        let gram = v.adjoint() * v;
        max_abs(&(gram - CMatrix::identity(v.ncols(), v.ncols())))
    }

    pub fn reconstruct(&self) -> CMatrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &lambda) in self.eigenvalues.iter().enumerate() {
            scaled.column_mut(j).scale_mut(lambda);
        }
        scaled * v.adjoint()
    }

    /// `e^{-iHt} v`.
    pub fn propagate(&self, v: &CVector, t: f64) -> CVector {
        let v_eig = self.eigenvectors.adjoint() * v;
        let phased = CVector::from_iterator(
            v_eig.len(),
            v_eig
                .iter()
                .zip(&self.eigenvalues)
                .map(|(c, &e)| c * Complex64::from_polar(1.0, -e * t)),
        );
        &self.eigenvectors * phased
    }
}

/// Diagonalizes a Hermitian operator.
pub fn eigendecompose(h: &HermitianOperator) -> Result<SpectralDecomposition> {
    let residual = hermiticity_residual(h.matrix());
    if residual > HERMITIAN_TOL * h.max_abs().max(1.0) {
        return Err(Error::NonHermitianInput { residual });
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    let m = h.matrix();
    let sym = (m + m.adjoint()).unscale(2.0);
    let eig = nalgebra::SymmetricEigen::try_new(sym, f64::EPSILON, 0)
        .ok_or_else(|| Error::Eigen("QR iteration did not converge".into()))?;

    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let n = order.len();
    let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    let decomposition = SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    };

    let recon = decomposition.reconstruction_residual(h);
    let gram = decomposition.gram_residual();
    if recon > 1e-10 * h.max_abs() || gram >= 1e-10 {
        return Err(Error::Eigen(format!(
            "inaccurate decomposition (reconstruction {recon:e}, gram {gram:e})"
        )));
    }
    Ok(decomposition)
}

/// Exact propagator `e^{-iHt}` cached through the spectral decomposition.
#[derive(Debug, Clone)]
pub struct Propagator {
    decomposition: SpectralDecomposition,
}

impl Propagator {
    pub fn new(h: &HermitianOperator) -> Result<Self> {
        Ok(Self {
            decomposition: eigendecompose(h)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.decomposition.eigenvalues.len()
    }

    pub fn decomposition(&self) -> &SpectralDecomposition {
        &self.decomposition
    }

    pub fn evolve(&self, psi: &StateVector, t: f64) -> Result<StateVector> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: psi.dim(),
            });
        }
        if t == 0.0 {
            return Ok(psi.clone());
        }
        Ok(psi.with_amplitudes(self.decomposition.propagate(psi.amplitudes(), t)))
    }
}

/// `e^{-iHt}|psi>`.
pub fn evolve(h: &HermitianOperator, psi: &StateVector, t: f64) -> Result<StateVector> {
    if h.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            actual: psi.dim(),
        });
    }
    Propagator::new(h)?.evolve(psi, t)
}

/// `<u|v>`, antilinear in the first argument.
pub fn inner(u: &StateVector, v: &StateVector) -> Result<Complex64> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            actual: v.dim(),
        });
    }
    Ok(u.amplitudes().dotc(v.amplitudes()))
}

/// Result of Gram-Schmidt: the surviving orthonormal vectors plus the input
/// indices that were dropped as linearly dependent.
#[derive(Debug, Clone)]
pub struct Orthonormalized {
    pub vectors: Vec<CVector>,
    pub dropped: Vec<usize>,
}

/// Default drop tolerance: `1e-8` times the largest input norm.
pub fn default_drop_tol(vectors: &[CVector]) -> f64 {
    1e-8 * vectors.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// Modified Gram-Schmidt with a second projection pass. A vector whose
/// post-projection norm falls below `tol` is dropped and reported.
pub fn orthonormalize(vectors: &[CVector], tol: f64) -> Orthonormalized {
    let mut out: Vec<CVector> = Vec::with_capacity(vectors.len());
    let mut dropped = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for _ in 0..2 {
            project_out(&mut w, &out);
        }
        let norm = w.norm();
        if norm < tol || norm == 0.0 {
            dropped.push(idx);
        } else {
            out.push(w.unscale(norm));
        }
    }
    Orthonormalized {
        vectors: out,
        dropped,
    }
}

/// Removes the components of `w` along each (orthonormal) vector of `basis`.
pub(crate) fn project_out(w: &mut CVector, basis: &[CVector]) {
    for q in basis {
        let c = q.dotc(w);
        w.axpy(-c, q, Complex64::new(1.0, 0.0));
    }
}

/// `max |G - I|` for the Gram matrix of `vectors`.
pub fn gram_residual(vectors: &[CVector]) -> f64 {
    let mut worst = 0.0_f64;
    for (i, u) in vectors.iter().enumerate() {
        for (j, v) in vectors.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((u.dotc(v) - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

/// `|<u|v>|^2 / (|u|^2 |v|^2)`, insensitive to global phase.
pub fn fidelity(u: &CVector, v: &CVector) -> f64 {
    u.dotc(v).norm_sqr() / (u.norm_squared() * v.norm_squared())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn qubit_labels() -> Vec<String> {
        vec!["g".into(), "e".into()]
    }

    fn sigma_x(scale: f64) -> HermitianOperator {
        HermitianOperator::from_real_rows(&[&[0.0, scale], &[scale, 0.0]]).unwrap()
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(Error::NonHermitianInput { .. })
        ));
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(HermitianOperator::new(m).is_err());
    }

    #[test]
    fn diagonal_spectrum() {
        let h = HermitianOperator::from_real_rows(&[&[-0.5, 0.0], &[0.0, 0.5]]).unwrap();
        let d = eigendecompose(&h).unwrap();
        assert_eq!(d.eigenvalues.len(), 2);
        assert!((d.eigenvalues[0] + 0.5).abs() < 1e-15);
        assert!((d.eigenvalues[1] - 0.5).abs() < 1e-15);
        assert!(fidelity(&d.eigenvectors.column(0).into_owned(), &CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)])) > 1.0 - 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let d = eigendecompose(&sigma_x(0.5)).unwrap();
        assert!((d.eigenvalues[0] + 0.5).abs() < 1e-14);
        assert!((d.eigenvalues[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn stationary_state_only_gains_phase() {
        let h = HermitianOperator::from_real_rows(&[&[0.35, 0.0], &[0.0, -0.35]]).unwrap();
        let psi = StateVector::basis_state(qubit_labels(), 0).unwrap();
        for t in [0.3, 2.0, 17.5] {
            let out = evolve(&h, &psi, t).unwrap();
            let phase = out.amplitudes()[0];
            assert!((phase - Complex64::from_polar(1.0, -0.35 * t)).norm() < 1e-13);
            assert!(out.amplitudes()[1].norm() < 1e-15);
        }
    }

    #[test]
    fn half_rabi_period_flips() {
        let omega = 1.3;
        let h = sigma_x(omega / 2.0);
        let g = StateVector::basis_state(qubit_labels(), 0).unwrap();
        let e = StateVector::basis_state(qubit_labels(), 1).unwrap();
        let out = evolve(&h, &g, std::f64::consts::PI / omega).unwrap();
        assert!(inner(&e, &out).unwrap().norm() > 1.0 - 1e-12);
    }

    #[test]
    fn zero_time_is_identity() {
        let h = sigma_x(0.7);
        let psi = StateVector::normalized(
            CVector::from_vec(vec![c(0.3, 0.1), c(-0.2, 0.9)]),
            qubit_labels(),
        )
        .unwrap();
        assert_eq!(evolve(&h, &psi, 0.0).unwrap(), psi);
    }

    #[test]
    fn evolve_dimension_mismatch() {
        let h = HermitianOperator::zeros(3);
        let psi = StateVector::basis_state(qubit_labels(), 0).unwrap();
        assert!(matches!(
            evolve(&h, &psi, 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inner_products() {
        let labels: Vec<String> = ["gg", "ge", "eg", "ee"].iter().map(|s| s.to_string()).collect();
        let gg = StateVector::basis_state(labels.clone(), 0).unwrap();
        let bell = StateVector::normalized(
            CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
            labels,
        )
        .unwrap();
        assert!((inner(&gg, &bell).unwrap() - c(0.5_f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((inner(&bell, &bell).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        let g = StateVector::basis_state(qubit_labels(), 0).unwrap();
        let e = StateVector::basis_state(qubit_labels(), 1).unwrap();
        assert_eq!(inner(&g, &e).unwrap(), c(0.0, 0.0));
        assert!(inner(&g, &gg).is_err());
    }

    #[test]
    fn state_constructor_checks() {
        assert!(matches!(
            StateVector::new(CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]), qubit_labels()),
            Err(Error::UnnormalizedState { .. })
        ));
        assert!(matches!(
            StateVector::new(CVector::from_vec(vec![c(1.0, 0.0)]), qubit_labels()),
            Err(Error::InvalidStateShape)
        ));
        assert!(StateVector::normalized(CVector::zeros(2), qubit_labels()).is_err());
    }

    #[test]
    fn gram_schmidt_cases() {
        let e0 = CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        let e1 = CVector::from_vec(vec![c(0.0, 0.0), c(1.0, 0.0)]);
        let out = orthonormalize(&[e0.clone(), e1.clone()], 1e-8);
        assert!(out.dropped.is_empty());
        assert!((&out.vectors[0] - &e0).norm() < 1e-15);
        assert!((&out.vectors[1] - &e1).norm() < 1e-15);

        let diag = CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]).unscale(2.0_f64.sqrt());
        let out = orthonormalize(&[e0.clone(), diag], 1e-8);
        assert_eq!(out.vectors.len(), 2);
        assert!(fidelity(&out.vectors[1], &e1) > 1.0 - 1e-15);

        let vs = [e0.clone(), e0.clone()];
        let out = orthonormalize(&vs, default_drop_tol(&vs));
        assert_eq!(out.vectors.len(), 1);
        assert_eq!(out.dropped, vec![1]);
    }
}
