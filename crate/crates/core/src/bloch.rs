//! Single-qubit geometry on the radius-1/2 sphere.
//!
//! A qubit state is mapped to the vector `alpha` defined by
//! `|psi><psi| = I/2 + alpha . sigma`, so pure states sit on a sphere of radius
//! one half. For `H = (omega/2) sigma_z` the squared displacement of `alpha`
//! between two times equals the Krylov complexity accumulated over the gap.

use std::ops::Sub;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, StateVector};
use crate::models::{single_qubit_complexity_closed, SingleQubitSpec};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }
}

impl Sub for BlochVector {
    type Output = BlochVector;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

/// `alpha` with `rho = I/2 + alpha . sigma`, in the basis the state is
/// written in (the energy eigenbasis for [`SingleQubitSpec`] seeds).
pub fn bloch_of(psi: &StateVector) -> Result<BlochVector> {
    if psi.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: psi.dim(),
        });
    }
    let (u, d) = (psi.amplitudes()[0], psi.amplitudes()[1]);
    let coherence = u * d.conj();
    Ok(BlochVector::new(
        coherence.re,
        -coherence.im,
        (u.norm_sqr() - d.norm_sqr()) / 2.0,
    ))
}

/// `|alpha_a - alpha_b|^2`.
pub fn displacement_sq(psi_a: &StateVector, psi_b: &StateVector) -> Result<f64> {
    Ok((bloch_of(psi_a)? - bloch_of(psi_b)?).norm_sq())
}

/// Checks `sqrt C(t3 - t1) <= sqrt C(t3 - t2) + sqrt C(t2 - t1)` for a qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn triangle_inequality_check(spec: &SingleQubitSpec, t1: f64, t2: f64, t3: f64) -> TriangleReport {
    let root = |t: f64| single_qubit_complexity_closed(spec, t).sqrt();
    let lhs = root(t3 - t1);
    let rhs = root(t3 - t2) + root(t2 - t1);
    TriangleReport {
        lhs,
        rhs,
        holds: lhs <= rhs + 1e-12,
    }
}

/// Coefficients of `sqrt C(t) = c1 t + c3 t^3 + O(t^5)` from the first
/// Lanczos coefficients.
pub fn taylor_coefficients_sqrt_c(a0: f64, a1: f64, b1: f64, b2: f64) -> (f64, f64) {
    let bracket = (a0 - a1).powi(2) + 2.0 * (2.0 * b1 * b1 - b2 * b2);
    (b1, -b1 * bracket / 24.0)
}

/// `U = cos(a) I + i sin(a) (n . sigma)`, a rotation by `2a` about `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationSpec {
    axis: BlochVector,
    half_angle: f64,
}

impl RotationSpec {
    pub fn new(axis: BlochVector, half_angle: f64) -> Result<Self> {
        if (axis.norm() - 1.0).abs() > 1e-12 || !half_angle.is_finite() {
            return Err(Error::InvalidParameters(
                "rotation axis must be a unit vector and the angle finite".into(),
            ));
        }
        Ok(Self { axis, half_angle })
    }

    pub fn axis(&self) -> BlochVector {
        self.axis
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }

    pub fn unitary(&self) -> CMatrix {
        let (s, c) = self.half_angle.sin_cos();
        let i = Complex64::i();
        let n = self.axis;
        // n . sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
        let n_sigma = [
            [Complex64::new(n.z, 0.0), Complex64::new(n.x, -n.y)],
            [Complex64::new(n.x, n.y), Complex64::new(-n.z, 0.0)],
        ];
        CMatrix::from_fn(2, 2, |r, col| {
            let id = if r == col { c } else { 0.0 };
            Complex64::new(id, 0.0) + i * s * n_sigma[r][col]
        })
    }
}

/// `alpha' = cos(2a) alpha - sin(2a) (n x alpha) + 2 sin^2(a) (n . alpha) n`.
pub fn rotate_bloch(v: &BlochVector, r: &RotationSpec) -> BlochVector {
    let a = r.half_angle;
    let n = r.axis;
    v.scale((2.0 * a).cos())
        .add(&n.cross(v).scale(-(2.0 * a).sin()))
        .add(&n.scale(2.0 * a.sin().powi(2) * n.dot(v)))
}
