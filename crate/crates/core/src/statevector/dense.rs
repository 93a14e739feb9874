//! Small-register dense operators, used as an independent check on the
//! gate kernel.

use num_complex::Complex64;

use super::gate::OneQubitGate;
use super::{check_qubit_count, StateVector};
use crate::error::{Error, Result};

/// Largest register for which [`dense_operator_of`] builds a matrix.
pub const MAX_DENSE_QUBITS: usize = 8;

/// One gate application: `gate` on `target`, conditioned on `controls`.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    pub gate: OneQubitGate,
    pub controls: Vec<usize>,
    pub target: usize,
}

impl GateOp {
    pub fn single(gate: OneQubitGate, target: usize) -> Self {
        Self {
            gate,
            controls: Vec::new(),
            target,
        }
    }

    pub fn controlled(gate: OneQubitGate, controls: Vec<usize>, target: usize) -> Self {
        Self {
            gate,
            controls,
            target,
        }
    }
}

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix of the ordered gate sequence on `n_qubits`, built column by column
/// by pushing each basis vector through the kernel.
pub fn dense_operator_of(ops: &[GateOp], n_qubits: usize) -> Result<DenseMatrix> {
    check_qubit_count(n_qubits)?;
    if n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::Sizing {
            n_qubits,
            min: 1,
            max: MAX_DENSE_QUBITS,
        });
    }
    let dim = 1usize << n_qubits;
    let mut out = DenseMatrix::zeros(dim);
    for col in 0..dim {
        let mut s = StateVector::basis(n_qubits, col)?;
        for op in ops {
            s.apply(op)?;
        }
        for (row, z) in s.amplitudes().iter().enumerate() {
            out.set(row, col, *z);
        }
    }
    Ok(out)
}
