use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{labels, real_vector};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector, HermitianOperator, StateVector};

pub const RYDBERG_LABELS: [&str; 4] = ["gg", "ge", "eg", "ee"];

pub fn rydberg_labels() -> Vec<String> {
    labels(&RYDBERG_LABELS)
}

/// Named two-atom seeds. `Plus`/`Minus` are `(|ge> +- |eg>)/sqrt(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairSeed {
    GG,
    GE,
    EG,
    EE,
    Plus,
    Minus,
}

impl PairSeed {
    pub const ALL: [PairSeed; 6] = [
        PairSeed::GG,
        PairSeed::GE,
        PairSeed::EG,
        PairSeed::EE,
        PairSeed::Plus,
        PairSeed::Minus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PairSeed::GG => "gg",
            PairSeed::GE => "ge",
            PairSeed::EG => "eg",
            PairSeed::EE => "ee",
            PairSeed::Plus => "plus",
            PairSeed::Minus => "minus",
        }
    }
}

impl fmt::Display for PairSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PairSeed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PairSeed::ALL
            .into_iter()
            .find(|seed| seed.label() == s)
            .ok_or_else(|| Error::UnknownSeedLabel(s.to_string()))
    }
}

pub fn rydberg_seed_vector(seed: PairSeed) -> CVector {
    let r = FRAC_1_SQRT_2;
    real_vector(&match seed {
        PairSeed::GG => [1.0, 0.0, 0.0, 0.0],
        PairSeed::GE => [0.0, 1.0, 0.0, 0.0],
        PairSeed::EG => [0.0, 0.0, 1.0, 0.0],
        PairSeed::EE => [0.0, 0.0, 0.0, 1.0],
        PairSeed::Plus => [0.0, r, r, 0.0],
        PairSeed::Minus => [0.0, r, -r, 0.0],
    })
}

pub fn rydberg_seed(seed: PairSeed) -> StateVector {
    StateVector::normalized(rydberg_seed_vector(seed), rydberg_labels()).expect("unit vector")
}

/// Two driven two-level atoms with a van der Waals shift `V0` on `|ee>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RydbergPairSpec {
    pub omega1: f64,
    pub omega2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub v0: f64,
}

impl RydbergPairSpec {
    pub fn new(omega1: f64, omega2: f64, delta1: f64, delta2: f64, v0: f64) -> Result<Self> {
        if ![omega1, omega2, delta1, delta2, v0].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameters("parameters must be finite".into()));
        }
        if v0 < 0.0 {
            return Err(Error::InvalidParameters("V0 must be nonnegative".into()));
        }
        Ok(Self { omega1, omega2, delta1, delta2, v0 })
    }

    /// Both atoms driven with the same `(Omega, Delta)`.
    pub fn global(omega: f64, delta: f64, v0: f64) -> Result<Self> {
        Self::new(omega, omega, delta, delta, v0)
    }
}

pub fn build_rydberg_pair(spec: &RydbergPairSpec) -> HermitianOperator {
    let (h1, h2) = (spec.omega1 / 2.0, spec.omega2 / 2.0);
    // gg ge eg ee; sigma_x on atom 1 flips the first label.
    let rows: [[f64; 4]; 4] = [
        [0.0, h2, h1, 0.0],
        [h2, -spec.delta2, 0.0, h1],
        [h1, 0.0, -spec.delta1, h2],
        [0.0, h1, h2, spec.v0 - spec.delta1 - spec.delta2],
    ];
    let m = CMatrix::from_fn(4, 4, |i, j| Complex64::new(rows[i][j], 0.0));
    HermitianOperator::new(m).expect("real symmetric matrix is Hermitian")
}

/// Zeroth-order blockade Hamiltonian `(Omega/2)(|g><g| x sigma_x + sigma_x x |g><g|)`.
/// The `|ee>` row and column vanish.
pub fn effective_blockade_hamiltonian(omega: f64) -> HermitianOperator {
    let h = omega / 2.0;
    let rows: [[f64; 4]; 4] = [
        [0.0, h, h, 0.0],
        [h, 0.0, 0.0, 0.0],
        [h, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ];
    let m = CMatrix::from_fn(4, 4, |i, j| Complex64::new(rows[i][j], 0.0));
    HermitianOperator::new(m).expect("real symmetric matrix is Hermitian")
}

/// Analytic Lanczos data for a Rydberg pair: `a`, `b` (with `b[0] = 0`) and the
/// Krylov vectors, each defined up to a phase.
#[derive(Debug, Clone)]
pub struct ReferenceLanczos {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub vectors: Vec<CVector>,
}

impl ReferenceLanczos {
    /// Drops everything from the first vanishing `b_n` on.
    fn truncated(mut self, scale: f64) -> Self {
        if let Some(cut) = self.b.iter().skip(1).position(|b| b.abs() <= 1e-12 * scale) {
            let len = cut + 1;
            self.a.truncate(len);
            self.b.truncate(len);
            self.vectors.truncate(len);
        }
        self
    }
}

/// Lanczos coefficients and Krylov vectors under global resonant drive for the
/// seeds `gg`, `plus` and `ge`.
pub fn blockade_reference_lanczos(seed: PairSeed, omega: f64, v0: f64) -> Result<ReferenceLanczos> {
    if !(omega > 0.0 && v0 > 0.0) {
        return Err(Error::InvalidParameters("Omega and V0 must be positive".into()));
    }
    let r = FRAC_1_SQRT_2;
    let reference = match seed {
        PairSeed::GG => ReferenceLanczos {
            a: vec![0.0, 0.0, v0],
            b: vec![0.0, omega * r, omega * r],
            vectors: vec![
                rydberg_seed_vector(PairSeed::GG),
                rydberg_seed_vector(PairSeed::Plus),
                rydberg_seed_vector(PairSeed::EE),
            ],
        },
        PairSeed::Plus => ReferenceLanczos {
            a: vec![0.0, v0 / 2.0, v0 / 2.0],
            b: vec![0.0, omega, v0 / 2.0],
            vectors: vec![
                rydberg_seed_vector(PairSeed::Plus),
                real_vector(&[r, 0.0, 0.0, r]),
                real_vector(&[-r, 0.0, 0.0, r]),
            ],
        },
        PairSeed::GE => {
            let ov_sq = 2.0 * omega * omega + v0 * v0;
            let ov = ov_sq.sqrt();
            ReferenceLanczos {
                // The last diagonal entry follows from tr H = sum_n a_n.
                a: vec![0.0, v0 / 2.0, v0.powi(3) / (2.0 * ov_sq), v0 * omega * omega / ov_sq],
                b: vec![0.0, omega * r, ov / 2.0, v0 * v0 * omega * r / ov_sq],
                vectors: vec![
                    rydberg_seed_vector(PairSeed::GE),
                    real_vector(&[r, 0.0, 0.0, r]),
                    real_vector(&[-v0, 0.0, 2.0 * omega, v0]).unscale(2.0_f64.sqrt() * ov),
                    real_vector(&[-omega, 0.0, -v0, omega]).unscale(ov),
                ],
            }
        }
        other => return Err(Error::UnknownSeedLabel(other.label().to_string())),
    };
    Ok(reference)
}

/// Analytic data for unequal Rabi couplings with `Delta = 0`.
#[derive(Debug, Clone)]
pub struct BiasedFreezingReference {
    pub lanczos: ReferenceLanczos,
    /// `V0 >= 10 Omega2` and `Omega2 >= 10 Omega1`.
    pub regime: bool,
    pub omega2: f64,
    /// Limits of the Krylov vectors deep in the freezing regime, where known.
    pub asymptotic_vectors: Option<Vec<CVector>>,
}

impl BiasedFreezingReference {
    /// `sin^2(Omega2 t / 2)`, valid deep in the freezing regime.
    pub fn approx_complexity(&self, t: f64) -> f64 {
        (self.omega2 * t / 2.0).sin().powi(2)
    }
}

/// Krylov data for seeds `gg` and `ge` with Rabi frequencies `Omega1 != Omega2`.
///
/// Every entry has been re-derived from the Lanczos recursion; when a `b_n`
/// vanishes the basis is truncated there.
pub fn biased_freezing_reference(
    seed: PairSeed,
    omega1: f64,
    omega2: f64,
    v0: f64,
) -> Result<BiasedFreezingReference> {
    if !(omega1 >= 0.0 && omega2 >= 0.0 && v0 >= 0.0) || omega1.hypot(omega2) == 0.0 {
        return Err(Error::InvalidParameters(
            "Rabi frequencies and V0 must be nonnegative, not both frequencies zero".into(),
        ));
    }
    let bar_sq = omega1 * omega1 + omega2 * omega2;
    let bar = bar_sq.sqrt();
    let scale = bar.max(v0);
    let (lanczos, asymptotic) = match seed {
        PairSeed::GG => (
            ReferenceLanczos {
                a: vec![0.0, 0.0, v0, 0.0],
                b: vec![
                    0.0,
                    bar / 2.0,
                    omega1 * omega2 / bar,
                    (omega2 * omega2 - omega1 * omega1).abs() / (2.0 * bar),
                ],
                vectors: vec![
                    rydberg_seed_vector(PairSeed::GG),
                    real_vector(&[0.0, omega2, omega1, 0.0]).unscale(bar),
                    rydberg_seed_vector(PairSeed::EE),
                    real_vector(&[0.0, -omega1, omega2, 0.0]).unscale(bar),
                ],
            },
            None,
        ),
        PairSeed::GE => {
            let ov_sq = bar_sq + v0 * v0;
            let ov = ov_sq.sqrt();
            (
                ReferenceLanczos {
                    a: vec![
                        0.0,
                        v0 * omega1 * omega1 / bar_sq,
                        v0 * (omega2 * omega2 * ov_sq - omega1 * omega1 * bar_sq) / (ov_sq * bar_sq),
                        v0 * omega1 * omega1 / ov_sq,
                    ],
                    b: vec![
                        0.0,
                        bar / 2.0,
                        omega1 * omega2 * ov / bar_sq,
                        bar * (omega2 * omega2 - omega1 * omega1 + v0 * v0).abs() / (2.0 * ov_sq),
                    ],
                    vectors: vec![
                        rydberg_seed_vector(PairSeed::GE),
                        real_vector(&[omega2, 0.0, 0.0, omega1]).unscale(bar),
                        real_vector(&[-v0 * omega1, 0.0, bar_sq, v0 * omega2]).unscale(ov * bar),
                        real_vector(&[-omega1, 0.0, -v0, omega2]).unscale(ov),
                    ],
                },
                Some(vec![
                    rydberg_seed_vector(PairSeed::GE),
                    rydberg_seed_vector(PairSeed::GG),
                    rydberg_seed_vector(PairSeed::EE),
                    rydberg_seed_vector(PairSeed::EG),
                ]),
            )
        }
        other => return Err(Error::UnknownSeedLabel(other.label().to_string())),
    };
    Ok(BiasedFreezingReference {
        lanczos: lanczos.truncated(scale),
        regime: v0 >= 10.0 * omega2 && omega2 >= 10.0 * omega1,
        omega2,
        asymptotic_vectors: asymptotic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_labels_round_trip() {
        for seed in PairSeed::ALL {
            assert_eq!(seed.label().parse::<PairSeed>().unwrap(), seed);
        }
        assert!(matches!("xx".parse::<PairSeed>(), Err(Error::UnknownSeedLabel(_))));
    }

    #[test]
    fn hamiltonian_structure() {
        let zero = build_rydberg_pair(&RydbergPairSpec::new(0.0, 0.0, 0.0, 0.0, 0.0).unwrap());
        assert_eq!(zero.max_abs(), 0.0);

        let spec = RydbergPairSpec::new(0.7, 1.1, 0.3, -0.2, 5.0).unwrap();
        let h = build_rydberg_pair(&spec);
        assert!((h.matrix()[(3, 3)].re - (5.0 - 0.3 + 0.2)).abs() < 1e-15);
        let g = build_rydberg_pair(&RydbergPairSpec::global(1.3, 0.0, 0.0).unwrap());
        assert_eq!(g.matrix()[(0, 1)].re, 0.65);
        assert!(RydbergPairSpec::new(1.0, 1.0, 0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn effective_hamiltonian_structure() {
        let h = effective_blockade_hamiltonian(1.5);
        assert_eq!(h.matrix()[(0, 1)].re, 0.75);
        for j in 0..4 {
            assert_eq!(h.matrix()[(3, j)].norm(), 0.0);
            assert_eq!(h.matrix()[(j, 3)].norm(), 0.0);
        }
        assert_eq!(effective_blockade_hamiltonian(0.0).max_abs(), 0.0);
    }

    #[test]
    fn reference_vectors_are_orthonormal() {
        for seed in [PairSeed::GG, PairSeed::Plus, PairSeed::GE] {
            let r = blockade_reference_lanczos(seed, 1.0, 100.0).unwrap();
            assert!(crate::linalg::gram_residual(&r.vectors) < 1e-14);
        }
        for seed in [PairSeed::GG, PairSeed::GE] {
            let r = biased_freezing_reference(seed, 1.0, 25.0, 100.0).unwrap();
            // V0 = 4 Omega2 is short of the tenfold separation.
            assert!(!r.regime);
            assert!(biased_freezing_reference(seed, 1.0, 25.0, 1000.0).unwrap().regime);
            assert!(crate::linalg::gram_residual(&r.lanczos.vectors) < 1e-14);
        }
        assert!(blockade_reference_lanczos(PairSeed::EE, 1.0, 100.0).is_err());
        assert!(blockade_reference_lanczos(PairSeed::GG, 0.0, 100.0).is_err());
    }

    #[test]
    fn equal_couplings_truncate() {
        let r = biased_freezing_reference(PairSeed::GG, 2.0, 2.0, 50.0).unwrap();
        assert_eq!(r.lanczos.vectors.len(), 3);
        assert_eq!(r.lanczos.b.len(), 3);
        assert!(!r.regime);
    }
}
