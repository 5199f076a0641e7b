use num_complex::Complex64;

use super::labels;
use crate::error::{Error, Result};
use crate::linalg::{CVector, HermitianOperator, StateVector};

/// Energy eigenbasis labels of a single qubit, `+` being the upper level.
pub const QUBIT_LABELS: [&str; 2] = ["+", "-"];
/// Bare-state labels of a two-level atom.
pub const ATOM_LABELS: [&str; 2] = ["g", "e"];

/// Qubit `H = (omega/2) sigma_z` with seed `alpha|+> + beta|->`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitSpec {
    pub omega: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl SingleQubitSpec {
    pub fn new(omega: f64, alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if !omega.is_finite() {
            return Err(Error::InvalidParameters("omega must be finite".into()));
        }
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::UnnormalizedState { norm: norm.sqrt() });
        }
        Ok(Self { omega, alpha, beta })
    }

    /// Seed `cos(theta/2)|+> + sin(theta/2) e^{i phi}|->`.
    pub fn from_bloch(omega: f64, theta: f64, phi: f64) -> Result<Self> {
        Self::new(
            omega,
            Complex64::new((theta / 2.0).cos(), 0.0),
            Complex64::from_polar((theta / 2.0).sin(), phi),
        )
    }

    /// `(|alpha|^2 - |beta|^2) omega / 2`.
    pub fn a0(&self) -> f64 {
        (self.alpha.norm_sqr() - self.beta.norm_sqr()) * self.omega / 2.0
    }

    /// `|alpha| |beta| omega`.
    pub fn b1(&self) -> f64 {
        self.alpha.norm() * self.beta.norm() * self.omega
    }
}

pub fn build_single_qubit(spec: &SingleQubitSpec) -> (HermitianOperator, StateVector) {
    let half = spec.omega / 2.0;
    let h = HermitianOperator::from_real_rows(&[&[half, 0.0], &[0.0, -half]])
        .expect("diagonal matrix is Hermitian");
    let seed = StateVector::normalized(
        CVector::from_vec(vec![spec.alpha, spec.beta]),
        labels(&QUBIT_LABELS),
    )
    .expect("spec amplitudes are normalized");
    (h, seed)
}

/// `4 |alpha|^2 |beta|^2 sin^2(omega t / 2)`.
pub fn single_qubit_complexity_closed(spec: &SingleQubitSpec, t: f64) -> f64 {
    4.0 * spec.alpha.norm_sqr() * spec.beta.norm_sqr() * (spec.omega * t / 2.0).sin().powi(2)
}

/// Complexity of any two-dimensional Krylov space in terms of its Lanczos
/// coefficients.
pub fn single_qubit_complexity_lanczos_form(a0: f64, a1: f64, b1: f64, t: f64) -> f64 {
    let gap_sq = 4.0 * b1 * b1 + (a0 - a1).powi(2);
    if gap_sq == 0.0 {
        return 0.0;
    }
    4.0 * b1 * b1 / gap_sq * (t * gap_sq.sqrt() / 2.0).sin().powi(2)
}

/// Two-level atom `H = -Delta |e><e| + (Omega/2) sigma_x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelAtomSpec {
    pub omega: f64,
    pub delta: f64,
}

impl TwoLevelAtomSpec {
    pub fn new(omega: f64, delta: f64) -> Result<Self> {
        if !(omega.is_finite() && omega >= 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameters(
                "Rabi frequency must be finite and nonnegative, detuning finite".into(),
            ));
        }
        Ok(Self { omega, delta })
    }

    /// Generalized Rabi frequency `sqrt(Delta^2 + Omega^2)`.
    pub fn rabi(&self) -> f64 {
        self.delta.hypot(self.omega)
    }
}

pub fn build_two_level_atom(spec: &TwoLevelAtomSpec) -> HermitianOperator {
    let half = spec.omega / 2.0;
    HermitianOperator::from_real_rows(&[&[0.0, half], &[half, -spec.delta]])
        .expect("real symmetric matrix is Hermitian")
}

/// `|g>` or `|e>`.
pub fn two_level_seed(label: &str) -> Result<StateVector> {
    let index = ATOM_LABELS
        .iter()
        .position(|l| *l == label)
        .ok_or_else(|| Error::UnknownSeedLabel(label.to_string()))?;
    StateVector::basis_state(labels(&ATOM_LABELS), index)
}

/// `Omega^2 / (Delta^2 + Omega^2) sin^2(sqrt(Delta^2 + Omega^2) t / 2)`, the
/// same for seeds `|g>` and `|e>`.
pub fn two_level_atom_complexity(spec: &TwoLevelAtomSpec, t: f64) -> f64 {
    let w = spec.rabi();
    if w == 0.0 {
        return 0.0;
    }
    (spec.omega / w).powi(2) * (w * t / 2.0).sin().powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn builds_diagonal_qubit() {
        let spec = SingleQubitSpec::new(1.0, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        let (h, seed) = build_single_qubit(&spec);
        assert_eq!(h.matrix()[(0, 0)].re, 0.5);
        assert_eq!(h.matrix()[(1, 1)].re, -0.5);
        assert_eq!(seed.amplitudes()[0].re, 1.0);

        let s = 0.5_f64.sqrt();
        let spec = SingleQubitSpec::new(2.0, Complex64::new(s, 0.0), Complex64::new(s, 0.0)).unwrap();
        let (_, seed) = build_single_qubit(&spec);
        assert!((seed.amplitudes()[1].re - s).abs() < 1e-16);
    }

    #[test]
    fn rejects_unnormalized_spec() {
        assert!(SingleQubitSpec::new(1.0, Complex64::new(1.0, 0.0), Complex64::new(0.1, 0.0)).is_err());
        assert!(TwoLevelAtomSpec::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn closed_form_values() {
        let s = 0.5_f64.sqrt();
        let eq = SingleQubitSpec::new(1.0, Complex64::new(s, 0.0), Complex64::new(0.0, s)).unwrap();
        assert!((single_qubit_complexity_closed(&eq, PI) - 1.0).abs() < 1e-15);

        let frozen = SingleQubitSpec::new(1.0, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        for t in [0.1, 1.0, 7.0] {
            assert_eq!(single_qubit_complexity_closed(&frozen, t), 0.0);
        }

        let omega = 2.5;
        let spec = SingleQubitSpec::new(
            omega,
            Complex64::new(0.75_f64.sqrt(), 0.0),
            Complex64::new(0.25_f64.sqrt(), 0.0),
        )
        .unwrap();
        assert!((single_qubit_complexity_closed(&spec, PI / omega) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn lanczos_form_reductions() {
        let omega = 1.4;
        for t in [0.2, 1.1, 5.0] {
            let resonant = single_qubit_complexity_lanczos_form(0.3, 0.3, omega / 2.0, t);
            assert!((resonant - (omega * t / 2.0).sin().powi(2)).abs() < 1e-15);
            let x = single_qubit_complexity_lanczos_form(0.9, -0.2, 0.4, t);
            let y = single_qubit_complexity_lanczos_form(-0.2, 0.9, 0.4, t);
            assert_eq!(x, y);
        }
        assert_eq!(single_qubit_complexity_lanczos_form(0.0, 0.0, 0.0, 1.0), 0.0);
    }

    #[test]
    fn two_level_reductions() {
        let resonant = TwoLevelAtomSpec::new(1.3, 0.0).unwrap();
        let detuned = TwoLevelAtomSpec::new(1.0, 1.0).unwrap();
        for t in [0.4, 2.0, 9.0] {
            assert!((two_level_atom_complexity(&resonant, t) - (1.3 * t / 2.0).sin().powi(2)).abs() < 1e-15);
        }
        let peak = PI / detuned.rabi();
        assert!((two_level_atom_complexity(&detuned, peak) - 0.5).abs() < 1e-15);
        assert!(two_level_seed("x").is_err());
    }
}
