use std::f64::consts::PI;

use num_complex::Complex64;

use super::labels;
use super::rydberg::PairSeed;
use crate::error::{Error, Result};
use crate::linalg::{CVector, HermitianOperator, StateVector};

/// Product energy eigenbasis of two qubits.
pub const PAIR_LABELS: [&str; 4] = ["++", "+-", "-+", "--"];

/// Two uncoupled qubits `H = (omega1/2) sigma_z^1 + (omega2/2) sigma_z^2`
/// started in a product of Bloch-parameterized states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSpec {
    pub omega1: f64,
    pub omega2: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl PairSpec {
    pub fn new(omega1: f64, omega2: f64, theta1: f64, theta2: f64, phi1: f64, phi2: f64) -> Result<Self> {
        let in_theta = |x: f64| (0.0..=PI).contains(&x);
        let in_phi = |x: f64| (0.0..2.0 * PI).contains(&x);
        if !(omega1.is_finite() && omega2.is_finite() && omega1 >= 0.0 && omega2 >= 0.0) {
            return Err(Error::InvalidParameters("qubit gaps must be finite and nonnegative".into()));
        }
        if !(in_theta(theta1) && in_theta(theta2)) {
            return Err(Error::InvalidParameters("theta must lie in [0, pi]".into()));
        }
        if !(in_phi(phi1) && in_phi(phi2)) {
            return Err(Error::InvalidParameters("phi must lie in [0, 2 pi)".into()));
        }
        Ok(Self { omega1, omega2, theta1, theta2, phi1, phi2 })
    }
}

fn bloch_factor(theta: f64, phi: f64) -> [Complex64; 2] {
    [
        Complex64::new((theta / 2.0).cos(), 0.0),
        Complex64::from_polar((theta / 2.0).sin(), phi),
    ]
}

pub fn build_pair(spec: &PairSpec) -> (HermitianOperator, StateVector) {
    let (w1, w2) = (spec.omega1 / 2.0, spec.omega2 / 2.0);
    let diag = [w1 + w2, w1 - w2, -w1 + w2, -w1 - w2];
    let mut m = crate::linalg::CMatrix::zeros(4, 4);
    for (i, d) in diag.iter().enumerate() {
        m[(i, i)] = Complex64::new(*d, 0.0);
    }
    let h = HermitianOperator::new(m).expect("diagonal matrix is Hermitian");
    let f1 = bloch_factor(spec.theta1, spec.phi1);
    let f2 = bloch_factor(spec.theta2, spec.phi2);
    let amps = CVector::from_vec(vec![f1[0] * f2[0], f1[0] * f2[1], f1[1] * f2[0], f1[1] * f2[1]]);
    let seed = StateVector::normalized(amps, labels(&PAIR_LABELS)).expect("product of unit vectors");
    (h, seed)
}

/// Decomposition `C = C1 + C2 + F` of the Krylov complexity of two uncoupled
/// qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairComplexity {
    pub c1: f64,
    pub c2: f64,
    pub f: f64,
    pub total: f64,
    /// Both factors are energy eigenstates; everything is zero.
    pub degenerate: bool,
}

pub fn noninteracting_pair_complexity(spec: &PairSpec, t: f64) -> PairComplexity {
    let (w1, w2) = (spec.omega1, spec.omega2);
    let (s1, c1) = snapped_sin_cos(spec.theta1);
    let (s2, c2) = snapped_sin_cos(spec.theta2);
    let weight = w1 * w1 * s1 * s1 + w2 * w2 * s2 * s2;
    if weight == 0.0 {
        return PairComplexity { c1: 0.0, c2: 0.0, f: 0.0, total: 0.0, degenerate: true };
    }
    let ck1 = s1 * s1 * (w1 * t / 2.0).sin().powi(2);
    let ck2 = s2 * s2 * (w2 * t / 2.0).sin().powi(2);
    let mismatch = (w1 * c1 - w2 * c2).powi(2);
    let (w_plus, w_minus) = (w1 + w2, w1 - w2);
    let beat = w_minus / 2.0 * (w_plus * t / 2.0).sin() - w_plus / 2.0 * (w_minus * t / 2.0).sin();
    let cross_den = (w1 * w1 + w2 * w2 - 2.0 * w1 * w2 * c1 * c2) * weight;
    let cross = if cross_den > 0.0 {
        s1 * s1 * s2 * s2 * (mismatch + 2.0 * weight) / cross_den * beat * beat
    } else {
        0.0
    };
    let f = mismatch / weight * ck1 * ck2 + cross;
    PairComplexity { c1: ck1, c2: ck2, f, total: ck1 + ck2 + f, degenerate: false }
}

/// `sin` of an angle in `[0, pi]`, with the roundoff at the poles removed.
fn snapped_sin_cos(theta: f64) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    if s.abs() < 1e-12 {
        (0.0, c.signum())
    } else {
        (s, c)
    }
}

/// Closed forms for two uncoupled atoms under a common drive `(Omega, Delta)`.
pub fn global_drive_pair_complexity_closed(omega: f64, delta: f64, seed: PairSeed, t: f64) -> Result<f64> {
    let w2 = delta * delta + omega * omega;
    if seed == PairSeed::Minus {
        return Err(Error::UnknownSeedLabel(seed.label().to_string()));
    }
    if w2 == 0.0 {
        return Ok(0.0);
    }
    let w = w2.sqrt();
    let half = (w * t / 2.0).sin().powi(2);
    let od = omega * omega * delta * delta / (w2 * w2);
    Ok(match seed {
        PairSeed::GG | PairSeed::EE => 2.0 * omega * omega / w2 * half,
        PairSeed::GE | PairSeed::EG => 2.0 * omega * omega / w2 * half + 2.0 * od * half * half,
        PairSeed::Plus => omega * omega / w2 * (w * t).sin().powi(2) + 8.0 * od * half * half,
        PairSeed::Minus => unreachable!(),
    })
}
