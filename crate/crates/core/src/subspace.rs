//! Partitioned Hamiltonians `H = H_A + H_B + H_AB` and the comparison between
//! the Krylov basis of the full Hamiltonian and that of an effective
//! Hamiltonian living on the low-energy block `A`.
//!
//! The assembled matrix always lists the `A` labels first, then the `B` labels.

use std::collections::HashSet;
use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::krylov::{
    default_tol, evolve_states, lanczos, spread_complexity, ComplexityTrace, KrylovBasis, LeakPolicy,
};
use crate::linalg::{eigendecompose, max_abs, CMatrix, CVector, HermitianOperator, StateVector};
use crate::models::{build_rydberg_pair, rydberg_labels, RydbergPairSpec};

/// Ratios at or below this count as weakly coupled.
pub const WEAK_COUPLING_THRESHOLD: f64 = 0.1;
/// Allowed excess of the effective-basis spread over the full Krylov complexity.
pub const MINIMIZATION_TOL: f64 = 1e-6;
/// Phase-aligned distance under which two Krylov vectors count as equal.
pub const PREFIX_TOL: f64 = 1e-6;
/// Largest `B` population a seed may carry.
pub const SEED_SUPPORT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionedHamiltonian {
    labels_a: Vec<String>,
    labels_b: Vec<String>,
    c_a: CMatrix,
    c_b: CMatrix,
    d: CMatrix,
}

impl PartitionedHamiltonian {
    pub fn new(
        labels_a: Vec<String>,
        labels_b: Vec<String>,
        c_a: CMatrix,
        c_b: CMatrix,
        d: CMatrix,
    ) -> Result<Self> {
        let (n_a, n_b) = (labels_a.len(), labels_b.len());
        if n_a == 0 || n_b == 0 {
            return Err(Error::BlockShapeMismatch("both subspaces need at least one label".into()));
        }
        if c_a.shape() != (n_a, n_a) {
            return Err(Error::BlockShapeMismatch(format!(
                "c_A is {:?}, expected {n_a}x{n_a}",
                c_a.shape()
            )));
        }
        if c_b.shape() != (n_b, n_b) {
            return Err(Error::BlockShapeMismatch(format!(
                "c_B is {:?}, expected {n_b}x{n_b}",
                c_b.shape()
            )));
        }
        if d.shape() != (n_a, n_b) {
            return Err(Error::BlockShapeMismatch(format!(
                "d is {:?}, expected {n_a}x{n_b}",
                d.shape()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels_a.iter().chain(&labels_b).find(|l| !seen.insert(l.as_str())) {
            return Err(Error::InvalidBasis(format!("label {dup:?} appears twice")));
        }
        if d.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameters("coupling block has non-finite entries".into()));
        }
        HermitianOperator::new(c_a.clone())?;
        HermitianOperator::new(c_b.clone())?;
        Ok(Self { labels_a, labels_b, c_a, c_b, d })
    }

    pub fn n_a(&self) -> usize {
        self.labels_a.len()
    }

    pub fn n_b(&self) -> usize {
        self.labels_b.len()
    }

    pub fn dim(&self) -> usize {
        self.n_a() + self.n_b()
    }

    pub fn labels_a(&self) -> &[String] {
        &self.labels_a
    }

    pub fn labels_b(&self) -> &[String] {
        &self.labels_b
    }

    pub fn labels(&self) -> Vec<String> {
        self.labels_a.iter().chain(&self.labels_b).cloned().collect()
    }

    pub fn c_a(&self) -> &CMatrix {
        &self.c_a
    }

    pub fn c_b(&self) -> &CMatrix {
        &self.c_b
    }

    pub fn d(&self) -> &CMatrix {
        &self.d
    }

    fn embed(&self, a: bool, b: bool, ab: bool) -> HermitianOperator {
        let (n_a, n) = (self.n_a(), self.dim());
        let mut m = CMatrix::zeros(n, n);
        if a {
            m.view_mut((0, 0), (n_a, n_a)).copy_from(&self.c_a);
        }
        if b {
            m.view_mut((n_a, n_a), (self.n_b(), self.n_b())).copy_from(&self.c_b);
        }
        if ab {
            m.view_mut((0, n_a), (n_a, self.n_b())).copy_from(&self.d);
            m.view_mut((n_a, 0), (self.n_b(), n_a)).copy_from(&self.d.adjoint());
        }
        HermitianOperator::from_matrix_unchecked(m)
    }

    pub fn assemble(&self) -> HermitianOperator {
        self.embed(true, true, true)
    }

    /// `H_A` on the full space; the zeroth-order effective Hamiltonian.
    pub fn h_a(&self) -> HermitianOperator {
        self.embed(true, false, false)
    }

    pub fn h_b(&self) -> HermitianOperator {
        self.embed(false, true, false)
    }

    pub fn h_ab(&self) -> HermitianOperator {
        self.embed(false, false, true)
    }

    /// Probability carried by the `B` labels.
    pub fn b_weight(&self, v: &CVector) -> f64 {
        v.iter().skip(self.n_a()).map(|z| z.norm_sqr()).sum()
    }

    /// Largest entry of `h` outside the `A` block.
    pub fn outside_a(&self, h: &HermitianOperator) -> f64 {
        let n_a = self.n_a();
        let m = h.matrix();
        let mut worst = 0.0_f64;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if i >= n_a || j >= n_a {
                    worst = worst.max(m[(i, j)].norm());
                }
            }
        }
        worst
    }
}

/// The blockade partition of a Rydberg pair: `A = {gg, ge, eg}`, `B = {ee}`.
pub fn rydberg_blockade_partition(spec: &RydbergPairSpec) -> PartitionedHamiltonian {
    let h = build_rydberg_pair(spec);
    let m = h.matrix();
    let labels = rydberg_labels();
    PartitionedHamiltonian::new(
        labels[..3].to_vec(),
        labels[3..].to_vec(),
        m.view((0, 0), (3, 3)).into_owned(),
        m.view((3, 3), (1, 1)).into_owned(),
        m.view((0, 3), (3, 1)).into_owned(),
    )
    .expect("Rydberg blocks are consistent")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingDiagnostics {
    pub max_abs_d: f64,
    /// `min spec(c_B) - max spec(c_A)`.
    pub gap: f64,
    /// `max_abs_d / gap`, absent when the gap is not positive.
    pub ratio: Option<f64>,
    pub non_positive_gap: bool,
    pub weakly_coupled: bool,
}

pub fn block_spectrum(block: &CMatrix) -> Result<Vec<f64>> {
    Ok(eigendecompose(&HermitianOperator::new(block.clone())?)?.eigenvalues)
}

pub fn coupling_diagnostics(p: &PartitionedHamiltonian) -> Result<CouplingDiagnostics> {
    let e_a = block_spectrum(&p.c_a)?;
    let e_b = block_spectrum(&p.c_b)?;
    let gap = e_b[0] - e_a[e_a.len() - 1];
    let max_abs_d = max_abs(&p.d);
    let ratio = (gap > 0.0).then(|| max_abs_d / gap);
    Ok(CouplingDiagnostics {
        max_abs_d,
        gap,
        ratio,
        non_positive_gap: gap <= 0.0,
        weakly_coupled: ratio.is_some_and(|r| r <= WEAK_COUPLING_THRESHOLD),
    })
}

/// `min_phi || u - e^{i phi} v ||` for unit vectors.
fn phase_distance(u: &CVector, v: &CVector) -> f64 {
    let overlap = v.dotc(u);
    let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
    (u - v * phase).norm()
}

/// Number of leading vectors two Krylov bases share up to a phase.
pub fn shared_prefix_len(full: &KrylovBasis, reduced: &KrylovBasis) -> usize {
    full.vectors()
        .iter()
        .zip(reduced.vectors())
        .take_while(|(u, v)| phase_distance(u, v) < PREFIX_TOL)
        .count()
}

#[derive(Debug, Clone, PartialEq)]
pub struct KmReport {
    pub m: usize,
    pub b_m: f64,
    pub b_a_m: f64,
    /// `|| b_M K_M - b_{A,M} K_{A,M} - H_AB K_{A,M-1} ||`.
    pub residual: f64,
    pub tolerance: f64,
    pub holds: bool,
    /// `<K_{A,M}|K_M>`, absent when either vector does not exist.
    pub alpha: Option<Complex64>,
    /// `-arg(1 - alpha)`, zero when `alpha = 1`.
    pub lambda: f64,
    /// Norm of `K_M - alpha K_{A,M}`.
    pub remainder_norm: f64,
    /// Fraction of the remainder that lies in `B`.
    pub remainder_b_weight: f64,
}

pub fn km_decomposition_check(
    p: &PartitionedHamiltonian,
    seed: &StateVector,
    m: usize,
) -> Result<KmReport> {
    if m == 0 {
        return Err(Error::InvalidParameters("M must be at least 1".into()));
    }
    check_seed(p, seed)?;
    let h = p.assemble();
    let h_a = p.h_a();
    let full = lanczos(&h, seed, default_tol(&h))?;
    let reduced = lanczos(&h_a, seed, default_tol(&h_a))?;
    let shared = shared_prefix_len(&full, &reduced);
    if shared < m {
        return Err(Error::PrefixMismatch { actual: shared });
    }
    let zero = CVector::zeros(p.dim());
    let k_m = full.vectors().get(m).unwrap_or(&zero);
    let k_a_m = reduced.vectors().get(m).unwrap_or(&zero);
    let k_a_prev = &reduced.vectors()[m - 1];
    let (b_m, b_a_m) = (full.b_at(m), reduced.b_at(m));

    let lhs = k_m * Complex64::new(b_m, 0.0);
    let rhs = k_a_m * Complex64::new(b_a_m, 0.0) + p.h_ab().apply(k_a_prev);
    let residual = (lhs - rhs).norm();
    let tolerance = 1e-8 * h.max_abs().max(f64::MIN_POSITIVE);

    let both = m < full.len() && m < reduced.len();
    let alpha = both.then(|| k_a_m.dotc(k_m));
    let a = alpha.unwrap_or(Complex64::new(0.0, 0.0));
    let remainder = k_m - k_a_m * a;
    let remainder_norm = remainder.norm();
    let remainder_b_weight = if remainder_norm > 1e-12 {
        p.b_weight(&remainder) / (remainder_norm * remainder_norm)
    } else {
        0.0
    };
    let one_minus = Complex64::new(1.0, 0.0) - a;
    let lambda = if one_minus.norm() > 1e-12 { -one_minus.arg() } else { 0.0 };

    Ok(KmReport {
        m,
        b_m,
        b_a_m,
        residual,
        tolerance,
        holds: residual < tolerance,
        alpha,
        lambda,
        remainder_norm,
        remainder_b_weight,
    })
}

fn check_seed(p: &PartitionedHamiltonian, seed: &StateVector) -> Result<()> {
    if seed.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: seed.dim(),
        });
    }
    let weight = p.b_weight(seed.amplitudes());
    if weight > SEED_SUPPORT_TOL {
        return Err(Error::SeedNotInA { weight });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct MinimizationReport {
    pub times: Vec<f64>,
    /// Krylov complexity in the basis of the full Hamiltonian.
    pub full: ComplexityTrace,
    /// Spread of the exact state in the Krylov basis of the effective Hamiltonian.
    pub effective: ComplexityTrace,
    pub full_basis: KrylovBasis,
    pub effective_basis: KrylovBasis,
    /// `B` population of the exact state per time point.
    pub b_population: Vec<f64>,
    pub first_violation_time: Option<f64>,
    /// Leading Krylov vectors shared by both bases.
    pub m: usize,
}

impl MinimizationReport {
    pub fn c_full(&self) -> &[f64] {
        &self.full.complexity
    }

    pub fn c_eff(&self) -> &[f64] {
        &self.effective.complexity
    }

    /// Population outside `span(K_A)` per time point.
    pub fn leak(&self) -> &[f64] {
        &self.effective.leak
    }

    pub fn max_excess(&self) -> f64 {
        self.c_eff()
            .iter()
            .zip(self.c_full())
            .map(|(e, f)| e - f)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_b_population(&self) -> f64 {
        self.b_population.iter().copied().fold(0.0, f64::max)
    }
}

pub fn compare_spread(
    p: &PartitionedHamiltonian,
    seed: &StateVector,
    effective_h: &HermitianOperator,
    times: &[f64],
) -> Result<MinimizationReport> {
    check_seed(p, seed)?;
    if effective_h.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            actual: effective_h.dim(),
        });
    }
    let outside = p.outside_a(effective_h);
    if outside > 1e-12 * effective_h.max_abs().max(1.0) {
        return Err(Error::EffectiveNotOnA { max_abs: outside });
    }
    let h = p.assemble();
    let full_basis = lanczos(&h, seed, default_tol(&h))?;
    let effective_basis = lanczos(effective_h, seed, default_tol(effective_h))?;
    let states = evolve_states(&h, seed, times)?;
    let full = spread_complexity(times, &states, &full_basis.to_ordered(), LeakPolicy::Strict)?;
    let effective = spread_complexity(times, &states, &effective_basis.to_ordered(), LeakPolicy::Report)?;
    let b_population = states.iter().map(|s| p.b_weight(s.amplitudes())).collect();
    let first_violation_time = times
        .iter()
        .zip(effective.complexity.iter().zip(&full.complexity))
        .find(|(_, (e, f))| **e > **f + MINIMIZATION_TOL)
        .map(|(t, _)| *t);
    let m = shared_prefix_len(&full_basis, &effective_basis);
    Ok(MinimizationReport {
        times: times.to_vec(),
        full,
        effective,
        full_basis,
        effective_basis,
        b_population,
        first_violation_time,
        m,
    })
}

/// Two periods of the slowest frequency of `c_A`, i.e. `4 pi / min gap`
/// over distinct eigenvalues. `None` when the block spectrum is degenerate.
pub fn two_period_window(p: &PartitionedHamiltonian) -> Result<Option<f64>> {
    let e = block_spectrum(&p.c_a)?;
    let scale = (e[e.len() - 1] - e[0]).abs().max(max_abs(&p.c_a));
    let min_gap = e
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|g| *g > 1e-9 * scale)
        .fold(f64::INFINITY, f64::min);
    Ok(min_gap.is_finite().then(|| 4.0 * PI / min_gap))
}

/// A random weakly coupled instance and a seed supported on `A`.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub partition: PartitionedHamiltonian,
    pub seed: StateVector,
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random Hermitian block with unit spectral spread.
fn unit_spread_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    loop {
        let g = DMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
        let h = (&g + g.adjoint()) * Complex64::new(0.5, 0.0);
        let e = block_spectrum(&h).expect("symmetrized block is Hermitian");
        let spread = e[n - 1] - e[0];
        if spread > 1e-3 {
            return h * Complex64::new(1.0 / spread, 0.0);
        }
    }
}

fn shift(block: CMatrix, by: f64) -> CMatrix {
    let n = block.nrows();
    block + CMatrix::identity(n, n) * Complex64::new(by, 0.0)
}

/// Draws block sizes in `[2, 6]`, unit-spread Hermitian blocks with
/// `max spec(c_A) = 0` and `min spec(c_B) = gap`, a coupling block with
/// `max |d| = ratio * gap`, and a seed uniform on the unit sphere of `A`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, gap: f64, ratio: f64) -> Result<RandomInstance> {
    if !(gap > 0.0) || !(ratio >= 0.0) || !gap.is_finite() || !ratio.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "need gap > 0 and ratio >= 0, got gap = {gap}, ratio = {ratio}"
        )));
    }
    let n_a = rng.random_range(2..=6);
    let n_b = rng.random_range(2..=6);
    let c_a = unit_spread_hermitian(rng, n_a);
    let top_a = *block_spectrum(&c_a)?.last().expect("nonempty");
    let c_a = shift(c_a, -top_a);
    let c_b = unit_spread_hermitian(rng, n_b);
    let bottom_b = block_spectrum(&c_b)?[0];
    let c_b = shift(c_b, gap - bottom_b);
    let raw_d = DMatrix::from_fn(n_a, n_b, |_, _| complex_gaussian(rng));
    let d = raw_d.clone() * Complex64::new(ratio * gap / max_abs(&raw_d), 0.0);

    let labels_a = (0..n_a).map(|i| format!("a{i}")).collect();
    let labels_b = (0..n_b).map(|i| format!("b{i}")).collect();
    let partition = PartitionedHamiltonian::new(labels_a, labels_b, c_a, c_b, d)?;
    let amps = CVector::from_fn(n_a + n_b, |i, _| {
        if i < n_a {
            complex_gaussian(rng)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let seed = StateVector::normalized(amps, partition.labels())?;
    Ok(RandomInstance { partition, seed })
}

/// [`random_instance`] driven by a ChaCha8 stream seeded with `seed`.
pub fn random_instance_seeded(seed: u64, gap: f64, ratio: f64) -> Result<RandomInstance> {
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), gap, ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::linspace;
    use crate::models::{effective_blockade_hamiltonian, rydberg_seed, PairSeed};

    fn blockade() -> PartitionedHamiltonian {
        rydberg_blockade_partition(&RydbergPairSpec::global(1.0, 0.0, 100.0).unwrap())
    }

    #[test]
    fn blockade_assembles_to_pair_hamiltonian() {
        let spec = RydbergPairSpec::new(1.0, 1.3, 0.2, -0.4, 50.0).unwrap();
        let p = rydberg_blockade_partition(&spec);
        assert_eq!(p.assemble().matrix(), build_rydberg_pair(&spec).matrix());
        let sum = p.h_a().matrix() + p.h_b().matrix() + p.h_ab().matrix();
        assert_eq!(&sum, p.assemble().matrix());
    }

    #[test]
    fn shape_and_label_errors() {
        let one = CMatrix::identity(1, 1);
        let two = CMatrix::identity(2, 2);
        let l = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let bad = PartitionedHamiltonian::new(l(&["a"]), l(&["b"]), two.clone(), one.clone(), one.clone());
        assert!(matches!(bad, Err(Error::BlockShapeMismatch(_))));
        let bad_d = PartitionedHamiltonian::new(l(&["a", "c"]), l(&["b"]), two.clone(), one.clone(), one.clone());
        assert!(matches!(bad_d, Err(Error::BlockShapeMismatch(_))));
        let dup = PartitionedHamiltonian::new(l(&["a"]), l(&["a"]), one.clone(), one.clone(), one.clone());
        assert!(matches!(dup, Err(Error::InvalidBasis(_))));
        let mut skew = two.clone();
        skew[(0, 1)] = Complex64::new(1.0, 0.0);
        let nh = PartitionedHamiltonian::new(l(&["a", "c"]), l(&["b"]), skew, one.clone(), CMatrix::zeros(2, 1));
        assert!(matches!(nh, Err(Error::NonHermitianInput { .. })));
    }

    #[test]
    fn blockade_diagnostics() {
        let diag = coupling_diagnostics(&blockade()).unwrap();
        assert_eq!(diag.max_abs_d, 0.5);
        let gap = 100.0 - 0.5_f64.sqrt();
        assert!((diag.gap - gap).abs() < 1e-12);
        assert!((diag.ratio.unwrap() - 0.5 / gap).abs() < 1e-14);
        assert!(diag.weakly_coupled);

        let strong = rydberg_blockade_partition(&RydbergPairSpec::global(1.0, 0.0, 1.0).unwrap());
        let diag = coupling_diagnostics(&strong).unwrap();
        assert!(diag.ratio.unwrap() > 1.0);
        assert!(!diag.weakly_coupled);

        let inverted = rydberg_blockade_partition(&RydbergPairSpec::global(1.0, 0.0, 0.1).unwrap());
        let diag = coupling_diagnostics(&inverted).unwrap();
        assert!(diag.non_positive_gap);
        assert_eq!(diag.ratio, None);
    }

    #[test]
    fn km_identity_for_blockade_seeds() {
        let p = blockade();
        let gg = km_decomposition_check(&p, &rydberg_seed(PairSeed::GG), 2).unwrap();
        assert!(gg.holds, "{gg:?}");
        assert!((gg.b_m - 0.5_f64.sqrt()).abs() < 1e-12);
        assert_eq!(gg.b_a_m, 0.0);
        assert_eq!(gg.alpha, None);

        let ge = km_decomposition_check(&p, &rydberg_seed(PairSeed::GE), 1).unwrap();
        assert!(ge.holds, "{ge:?}");
        let err = km_decomposition_check(&p, &rydberg_seed(PairSeed::GE), 2).unwrap_err();
        assert_eq!(err, Error::PrefixMismatch { actual: 1 });
    }

    #[test]
    fn decoupled_blocks_share_everything() {
        let inst = random_instance_seeded(7, 10.0, 0.0).unwrap();
        let p = &inst.partition;
        let r = km_decomposition_check(p, &inst.seed, 1).unwrap();
        assert!(r.holds);
        let alpha = r.alpha.unwrap();
        assert!((alpha - Complex64::new(1.0, 0.0)).norm() < 1e-10);

        let times = linspace(0.0, 10.0, 200);
        let rep = compare_spread(p, &inst.seed, &p.h_a(), &times).unwrap();
        for (e, f) in rep.c_eff().iter().zip(rep.c_full()) {
            assert!((e - f).abs() < 1e-10);
        }
        assert!(rep.max_b_population() < 1e-12);
        assert_eq!(rep.first_violation_time, None);
    }

    #[test]
    fn seed_and_effective_support_checks() {
        let p = blockade();
        let times = [0.0, 1.0];
        let err = compare_spread(&p, &rydberg_seed(PairSeed::EE), &p.h_a(), &times).unwrap_err();
        assert!(matches!(err, Error::SeedNotInA { .. }));
        let err = compare_spread(&p, &rydberg_seed(PairSeed::GG), &p.assemble(), &times).unwrap_err();
        assert!(matches!(err, Error::EffectiveNotOnA { .. }));
        assert!(km_decomposition_check(&p, &rydberg_seed(PairSeed::GG), 0).is_err());
    }

    #[test]
    fn blockade_effective_basis_is_cheaper() {
        let p = blockade();
        let times = linspace(0.0, 8.0 * PI, 1601);
        let eff = effective_blockade_hamiltonian(1.0);
        let ge = compare_spread(&p, &rydberg_seed(PairSeed::GE), &eff, &times).unwrap();
        assert_eq!(ge.first_violation_time, None);
        assert!((ge.full.max_complexity() - 3.0).abs() < 0.1);
        assert!((ge.effective.max_complexity() - 2.0).abs() < 0.05);
        assert_eq!(ge.m, 1);

        let plus = compare_spread(&p, &rydberg_seed(PairSeed::Plus), &eff, &times).unwrap();
        assert!(plus.full.max_complexity() > 1.0);
        assert!((plus.effective.max_complexity() - 1.0).abs() < 0.05);
    }

    #[test]
    fn random_instances_respect_the_recipe() {
        for s in 0..20 {
            let inst = random_instance_seeded(s, 20.0, 0.02).unwrap();
            let p = &inst.partition;
            assert!((2..=6).contains(&p.n_a()) && (2..=6).contains(&p.n_b()));
            let diag = coupling_diagnostics(p).unwrap();
            assert!((diag.gap - 20.0).abs() < 1e-9);
            assert!((diag.ratio.unwrap() - 0.02).abs() < 1e-12);
            assert!(p.b_weight(inst.seed.amplitudes()) == 0.0);
        }
        let a = random_instance_seeded(3, 5.0, 0.01).unwrap();
        let b = random_instance_seeded(3, 5.0, 0.01).unwrap();
        assert_eq!(a.partition, b.partition);
        assert!(random_instance_seeded(0, -1.0, 0.01).is_err());
    }

    #[test]
    fn window_from_slowest_frequency() {
        let w = two_period_window(&blockade()).unwrap().unwrap();
        assert!((w - 4.0 * PI * 2.0_f64.sqrt()).abs() < 1e-9);
    }
}
