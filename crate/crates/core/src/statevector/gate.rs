use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A single-qubit gate: a 2x2 complex matrix in row-major order.
///
/// Constructors only hand out unitary matrices; [`OneQubitGate::from_matrix`]
/// checks unitarity to 1e-12.
#[derive(Clone, Copy, PartialEq)]
pub struct OneQubitGate {
    m: [[Complex64; 2]; 2],
}

const UNITARY_TOL: f64 = 1e-12;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl OneQubitGate {
    pub(crate) const fn from_rows_unchecked(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub(crate) fn real_unchecked(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Self {
            m: [[re(m00), re(m01)], [re(m10), re(m11)]],
        }
    }

    /// Builds a gate from an explicit matrix, rejecting non-finite entries and
    /// non-unitary matrices.
    pub fn from_matrix(m: [[Complex64; 2]; 2]) -> Result<Self> {
        if m.iter()
            .flatten()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::invalid("gate matrix has non-finite entries"));
        }
        let gate = Self { m };
        if !gate.is_unitary(UNITARY_TOL) {
            return Err(Error::invalid("gate matrix is not unitary"));
        }
        Ok(gate)
    }

    pub fn identity() -> Self {
        Self::real_unchecked(1.0, 0.0, 0.0, 1.0)
    }

    pub fn hadamard() -> Self {
        Self::real_unchecked(FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
    }

    pub fn pauli_x() -> Self {
        Self::real_unchecked(0.0, 1.0, 1.0, 0.0)
    }

    pub fn pauli_z() -> Self {
        Self::real_unchecked(1.0, 0.0, 0.0, -1.0)
    }

    #[inline]
    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.m
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0].conj(), m[1][0].conj()],
                [m[0][1].conj(), m[1][1].conj()],
            ],
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// `M^dagger M = I` elementwise within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let p = self.adjoint() * *self;
        p.max_abs_diff(&Self::identity()) <= tol
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix product: `(a * b)` applies `b` first, then `a`.
impl Mul for OneQubitGate {
    type Output = OneQubitGate;

    fn mul(self, rhs: OneQubitGate) -> OneQubitGate {
        let (a, b) = (&self.m, &rhs.m);
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        OneQubitGate { m: out }
    }
}

impl fmt::Debug for OneQubitGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}
