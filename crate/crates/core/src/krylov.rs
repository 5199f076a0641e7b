//! Krylov bases and spread complexity.
//!
//! [`lanczos`] builds the Krylov basis of a seed state with full
//! reorthogonalization. [`spread_complexity`] scores a sequence of evolved
//! states against any ordered basis with weights `c_n`; the Krylov complexity
//! is the special case of the Krylov basis with `c_n = n`.

use log::warn;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    gram_residual, max_abs, project_out, CMatrix, CVector, HermitianOperator, Propagator,
    StateVector,
};

/// Largest `|1 - sum_n P(n)|` accepted before a basis is said to leak.
pub const SUPPORT_TOL: f64 = 1e-6;
/// Tolerance on `sum_n P_n = 1` for entropy and IPR inputs.
pub const DISTRIBUTION_TOL: f64 = 1e-8;
/// Orthonormality tolerance for ordered bases.
pub const ORTHONORMAL_TOL: f64 = 1e-10;

/// Default termination threshold for the Lanczos recursion.
pub fn default_tol(h: &HermitianOperator) -> f64 {
    1e-8 * h.max_abs()
}

/// Krylov basis of a seed state together with its Lanczos coefficients.
///
/// `b[0]` is always zero; `b[n]` for `n >= 1` couples `K_{n-1}` and `K_n`.
#[derive(Debug, Clone)]
pub struct KrylovBasis {
    vectors: Vec<CVector>,
    labels: Vec<String>,
    a: Vec<f64>,
    b: Vec<f64>,
    terminated: bool,
    final_residual: f64,
}

impl KrylovBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[CVector] {
        &self.vectors
    }

    pub fn vector(&self, n: usize) -> Option<StateVector> {
        self.vectors
            .get(n)
            .map(|v| StateVector::normalized(v.clone(), self.labels.clone()).expect("unit vector"))
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// `b_n`, with zero beyond the end of the basis.
    pub fn b_at(&self, n: usize) -> f64 {
        self.b.get(n).copied().unwrap_or(0.0)
    }

    /// True when the recursion stopped because the candidate `b_{n+1}` fell
    /// below the tolerance.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// Norm of the discarded candidate vector that ended the recursion.
    pub fn final_residual(&self) -> f64 {
        self.final_residual
    }

    /// `max |<K_m|K_n> - delta_mn|`.
    pub fn gram_residual(&self) -> f64 {
        gram_residual(&self.vectors)
    }

    /// `H` projected onto the basis.
    pub fn projected(&self, h: &HermitianOperator) -> CMatrix {
        let n = self.len();
        CMatrix::from_fn(n, n, |i, j| h.matrix_element(&self.vectors[i], &self.vectors[j]))
    }

    /// Largest deviation of the projected Hamiltonian from the tridiagonal
    /// matrix with diagonal `a` and off-diagonal `b`.
    pub fn tridiagonal_residual(&self, h: &HermitianOperator) -> f64 {
        let t = self.projected(h);
        let n = self.len();
        let mut expected = CMatrix::zeros(n, n);
        for i in 0..n {
            expected[(i, i)] = Complex64::new(self.a[i], 0.0);
            if i + 1 < n {
                expected[(i, i + 1)] = Complex64::new(self.b[i + 1], 0.0);
                expected[(i + 1, i)] = Complex64::new(self.b[i + 1], 0.0);
            }
        }
        max_abs(&(t - expected))
    }

    /// Largest `|<K_m|H|K_n>|` over `|m - n| >= 2`.
    pub fn off_band_max(&self, h: &HermitianOperator) -> f64 {
        let t = self.projected(h);
        let n = self.len();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) >= 2 {
                    worst = worst.max(t[(i, j)].norm());
                }
            }
        }
        worst
    }

    /// The basis as an ordered basis with `c_n = n`.
    pub fn to_ordered(&self) -> OrderedBasis {
        OrderedBasis {
            vectors: self.vectors.clone(),
            weights: linear_weights(self.len()),
        }
    }
}

/// Builds the Krylov basis of `seed` under `h`.
///
/// Every candidate `A_{n+1}` is projected against all previous Krylov vectors
/// twice. The recursion ends when the candidate norm is at most `tol`, or when
/// the basis already spans the Hilbert space.
pub fn lanczos(h: &HermitianOperator, seed: &StateVector, tol: f64) -> Result<KrylovBasis> {
    let dim = h.dim();
    if seed.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: seed.dim(),
        });
    }
    let norm = seed.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::UnnormalizedSeed { norm });
    }

    let mut vectors: Vec<CVector> = vec![seed.amplitudes().clone()];
    let mut a = Vec::new();
    let mut b = vec![0.0];
    let (terminated, final_residual) = loop {
        let n = vectors.len() - 1;
        let current = &vectors[n];
        let mut candidate = h.apply(current);
        let a_n = current.dotc(&candidate).re;
        a.push(a_n);
        candidate.axpy(Complex64::new(-a_n, 0.0), current, Complex64::new(1.0, 0.0));
        if n > 0 {
            candidate.axpy(
                Complex64::new(-b[n], 0.0),
                &vectors[n - 1],
                Complex64::new(1.0, 0.0),
            );
        }
        project_out(&mut candidate, &vectors);
        project_out(&mut candidate, &vectors);

        let b_next = candidate.norm();
        if b_next <= tol || !b_next.is_finite() {
            break (true, b_next);
        }
        if vectors.len() == dim {
            break (false, b_next);
        }
        b.push(b_next);
        vectors.push(candidate.unscale(b_next));
    };

    Ok(KrylovBasis {
        vectors,
        labels: seed.labels().to_vec(),
        a,
        b,
        terminated,
        final_residual,
    })
}

pub fn linear_weights(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64).collect()
}

/// An ordered orthonormal set `{B_n}` with nonnegative nondecreasing weights
/// `c_n`.
#[derive(Debug, Clone)]
pub struct OrderedBasis {
    vectors: Vec<CVector>,
    weights: Vec<f64>,
}

impl OrderedBasis {
    pub fn new(vectors: Vec<CVector>, weights: Vec<f64>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidBasis("empty basis".into()));
        }
        if vectors.len() != weights.len() {
            return Err(Error::InvalidBasis(format!(
                "{} vectors but {} weights",
                vectors.len(),
                weights.len()
            )));
        }
        let dim = vectors[0].len();
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: v.len(),
            });
        }
        if vectors.len() > dim {
            return Err(Error::InvalidBasis(format!(
                "{} vectors in a {dim}-dimensional space",
                vectors.len()
            )));
        }
        let residual = gram_residual(&vectors);
        if !(residual < ORTHONORMAL_TOL) {
            return Err(Error::InvalidBasis(format!(
                "not orthonormal (Gram residual {residual:e})"
            )));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvalidBasis("weights must be finite and nonnegative".into()));
        }
        if weights.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidBasis("weights must be nondecreasing".into()));
        }
        Ok(Self { vectors, weights })
    }

    /// An ordered basis with the default weights `c_n = n`.
    pub fn with_linear_weights(vectors: Vec<CVector>) -> Result<Self> {
        let weights = linear_weights(vectors.len());
        Self::new(vectors, weights)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[CVector] {
        &self.vectors
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `P(n) = |<psi|B_n>|^2` for every basis member.
    pub fn populations(&self, psi: &CVector) -> Vec<f64> {
        self.vectors.iter().map(|b| b.dotc(psi).norm_sqr()).collect()
    }
}

/// What to do when a state is not fully supported on the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeakPolicy {
    /// Fail with [`Error::SupportLeak`] above [`SUPPORT_TOL`].
    Strict,
    /// Record the leaked probability (zero weight in the cost) and log a warning.
    Report,
}

/// Spread complexity and derived diagnostics along a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityTrace {
    pub times: Vec<f64>,
    /// `populations[k][n] = P(n, times[k])`.
    pub populations: Vec<Vec<f64>>,
    pub complexity: Vec<f64>,
    pub shannon: Vec<f64>,
    pub ipr: Vec<f64>,
    /// `1 - sum_n P(n, t)`, the probability outside the basis span.
    pub leak: Vec<f64>,
}

impl ComplexityTrace {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn max_complexity(&self) -> f64 {
        self.complexity.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_leak(&self) -> f64 {
        self.leak.iter().copied().fold(0.0, f64::max)
    }

    /// Populations of basis member `n` over time.
    pub fn population_of(&self, n: usize) -> Vec<f64> {
        self.populations.iter().map(|row| row.get(n).copied().unwrap_or(0.0)).collect()
    }
}

/// `C_B(t) = sum_n c_n P_B(n, t)` for precomputed states `states[k] = psi(times[k])`.
pub fn spread_complexity(
    times: &[f64],
    states: &[StateVector],
    basis: &OrderedBasis,
    policy: LeakPolicy,
) -> Result<ComplexityTrace> {
    if times.len() != states.len() {
        return Err(Error::DimensionMismatch {
            expected: times.len(),
            actual: states.len(),
        });
    }
    let n_t = times.len();
    let mut trace = ComplexityTrace {
        times: times.to_vec(),
        populations: Vec::with_capacity(n_t),
        complexity: Vec::with_capacity(n_t),
        shannon: Vec::with_capacity(n_t),
        ipr: Vec::with_capacity(n_t),
        leak: Vec::with_capacity(n_t),
    };
    let mut worst_leak: Option<(f64, f64)> = None;
    for (&t, psi) in times.iter().zip(states) {
        if psi.dim() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                actual: psi.dim(),
            });
        }
        let p = basis.populations(psi.amplitudes());
        let total: f64 = p.iter().sum();
        let leak = 1.0 - total;
        if leak.abs() > SUPPORT_TOL {
            match policy {
                LeakPolicy::Strict => return Err(Error::SupportLeak { amount: leak, time: t }),
                LeakPolicy::Report => {
                    if worst_leak.is_none_or(|(w, _)| leak.abs() > w) {
                        worst_leak = Some((leak.abs(), t));
                    }
                }
            }
        }
        let c: f64 = p.iter().zip(basis.weights()).map(|(p, w)| p * w).sum();
        trace.complexity.push(c);
        trace.shannon.push(shannon_unchecked(&p));
        trace.ipr.push(ipr_unchecked(&p));
        trace.leak.push(leak);
        trace.populations.push(p);
    }
    if let Some((amount, time)) = worst_leak {
        warn!("ordered basis does not span the dynamics: leak up to {amount:e} (t = {time})");
    }
    Ok(trace)
}

/// `psi(t) = e^{-iHt} psi0` on every grid point.
pub fn evolve_states(
    h: &HermitianOperator,
    psi0: &StateVector,
    times: &[f64],
) -> Result<Vec<StateVector>> {
    let propagator = Propagator::new(h)?;
    times.iter().map(|&t| propagator.evolve(psi0, t)).collect()
}

/// Krylov complexity: the spread complexity of the evolution of `seed` in its
/// own Krylov basis with `c_n = n`.
pub fn krylov_complexity(
    h: &HermitianOperator,
    seed: &StateVector,
    times: &[f64],
) -> Result<ComplexityTrace> {
    Ok(krylov_run(h, seed, times)?.1)
}

/// Like [`krylov_complexity`] but also returns the Krylov basis.
pub fn krylov_run(
    h: &HermitianOperator,
    seed: &StateVector,
    times: &[f64],
) -> Result<(KrylovBasis, ComplexityTrace)> {
    let basis = lanczos(h, seed, default_tol(h))?;
    let states = evolve_states(h, seed, times)?;
    let trace = spread_complexity(times, &states, &basis.to_ordered(), LeakPolicy::Strict)?;
    Ok((basis, trace))
}

fn validate_distribution(p: &[f64]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidDistribution("empty distribution".into()));
    }
    if let Some(x) = p.iter().find(|x| !x.is_finite() || **x < -1e-12) {
        return Err(Error::InvalidDistribution(format!("entry {x} out of range")));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > DISTRIBUTION_TOL {
        return Err(Error::InvalidDistribution(format!("entries sum to {total}")));
    }
    Ok(())
}

fn shannon_unchecked(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.log2())
        .sum::<f64>()
}

fn ipr_unchecked(p: &[f64]) -> f64 {
    let s: f64 = p.iter().map(|x| x * x).sum();
    1.0 / s - 1.0
}

/// `S = -sum_n P_n log2 P_n` with `0 log 0 = 0`.
pub fn shannon_of(p: &[f64]) -> Result<f64> {
    validate_distribution(p)?;
    Ok(shannon_unchecked(p))
}

/// `Pi = 1 / sum_n P_n^2 - 1`.
pub fn ipr_of(p: &[f64]) -> Result<f64> {
    validate_distribution(p)?;
    Ok(ipr_unchecked(p).max(0.0))
}

/// Shannon entropy of each per-time distribution.
pub fn shannon_entropy(populations: &[Vec<f64>]) -> Result<Vec<f64>> {
    populations.iter().map(|p| shannon_of(p)).collect()
}

/// Inverse participation ratio of each per-time distribution.
pub fn ipr(populations: &[Vec<f64>]) -> Result<Vec<f64>> {
    populations.iter().map(|p| ipr_of(p)).collect()
}

/// Comparison of the Lanczos coefficients of a seed and of the same seed
/// evolved for `t_shift`.
#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub t_shift: f64,
    pub a_seed: Vec<f64>,
    pub b_seed: Vec<f64>,
    pub a_shifted: Vec<f64>,
    pub b_shifted: Vec<f64>,
    pub max_delta_a: f64,
    pub max_delta_b: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn lanczos_evolution_invariance_check(
    h: &HermitianOperator,
    seed: &StateVector,
    t_shift: f64,
) -> Result<InvarianceReport> {
    let tol = default_tol(h);
    let original = lanczos(h, seed, tol)?;
    let shifted_seed = Propagator::new(h)?.evolve(seed, t_shift)?;
    let shifted = lanczos(h, &shifted_seed, tol)?;

    let max_delta = |x: &[f64], y: &[f64]| {
        if x.len() != y.len() {
            return f64::INFINITY;
        }
        x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
    };
    let max_delta_a = max_delta(original.a(), shifted.a());
    let max_delta_b = max_delta(original.b(), shifted.b());
    let tolerance = 1e-8 * h.max_abs();
    Ok(InvarianceReport {
        t_shift,
        passed: max_delta_a <= tolerance && max_delta_b <= tolerance,
        a_seed: original.a().to_vec(),
        b_seed: original.b().to_vec(),
        a_shifted: shifted.a().to_vec(),
        b_shifted: shifted.b().to_vec(),
        max_delta_a,
        max_delta_b,
        tolerance,
    })
}
