//! Dense complex statevector and the gate-application kernel.
//!
//! Basis index bit `j` is qubit `j` (LSB = qubit 0). Probabilities are read
//! exactly from amplitudes; there is no sampling. Norm drift is detected by
//! [`StateVector::check_norm`] and never silently repaired.

mod dense;
mod gate;
pub mod kernel;

pub use dense::{dense_operator_of, DenseMatrix, GateOp, MAX_DENSE_QUBITS};
pub use gate::OneQubitGate;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// One complex amplitude.
pub type Amplitude = Complex64;

/// Largest register the simulator allocates (2^16 amplitudes, 1 MiB).
pub const MAX_QUBITS: usize = 16;

/// Tolerance used by [`StateVector::from_amplitudes`] and the run loop.
pub const NORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Amplitude>,
}

pub(crate) fn check_qubit_count(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::Sizing {
            n_qubits,
            min: 1,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

impl StateVector {
    /// `H^{(x)n}|0...0>`: every amplitude equals `1/sqrt(2^n)`.
    pub fn uniform_superposition(n_qubits: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let dim = 1usize << n_qubits;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(Self {
            n_qubits,
            amps: vec![a; dim],
        })
    }

    /// The computational basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::BasisIndex { index, dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    /// Wraps explicit amplitudes. The length must be `2^n_qubits`, entries
    /// finite, and the squared norm within [`NORM_TOL`] of one.
    pub fn from_amplitudes(n_qubits: usize, amps: Vec<Amplitude>) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let dim = 1usize << n_qubits;
        if amps.len() != dim {
            return Err(Error::invalid(format!(
                "expected {dim} amplitudes for {n_qubits} qubits, got {}",
                amps.len()
            )));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::invalid("amplitudes must be finite"));
        }
        let state = Self { n_qubits, amps };
        state.check_norm(NORM_TOL)?;
        Ok(state)
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    #[inline]
    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        kernel::norm_sqr(&self.amps)
    }

    /// Fails with [`Error::NormDrift`] when `| |psi|^2 - 1 | > tol`.
    pub fn check_norm(&self, tol: f64) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() > tol || !norm_sqr.is_finite() {
            return Err(Error::NormDrift {
                norm_sqr,
                tolerance: tol,
            });
        }
        Ok(())
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitIndex {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.dim() {
            return Err(Error::BasisIndex {
                index,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    pub fn apply_one_qubit_gate(&mut self, qubit: usize, gate: &OneQubitGate) -> Result<()> {
        self.check_qubit(qubit)?;
        kernel::apply_pairs(&mut self.amps, qubit, gate);
        Ok(())
    }

    /// Applies `gate` to `target` only where every qubit in `controls` is 1.
    /// An empty control set is a plain single-qubit application.
    pub fn apply_controlled_one_qubit_gate(
        &mut self,
        controls: &[usize],
        target: usize,
        gate: &OneQubitGate,
    ) -> Result<()> {
        let mask = self.control_mask(controls, target)?;
        kernel::apply_controlled_pairs(&mut self.amps, target, mask, gate);
        Ok(())
    }

    pub(crate) fn control_mask(&self, controls: &[usize], target: usize) -> Result<usize> {
        self.check_qubit(target)?;
        let mut mask = 0usize;
        for &c in controls {
            self.check_qubit(c)?;
            if c == target {
                return Err(Error::ControlTargetOverlap { qubit: c });
            }
            mask |= 1 << c;
        }
        Ok(mask)
    }

    /// `gate` on every qubit.
    pub fn apply_to_all(&mut self, gate: &OneQubitGate) {
        kernel::apply_all(&mut self.amps, self.n_qubits, gate);
    }

    pub fn apply(&mut self, op: &GateOp) -> Result<()> {
        self.apply_controlled_one_qubit_gate(&op.controls, op.target, &op.gate)
    }

    /// Negates the amplitude at each listed index. Duplicates are ignored.
    pub fn phase_flip_indices(&mut self, indices: &[usize]) -> Result<()> {
        for &i in indices {
            self.check_index(i)?;
        }
        let mut seen = indices.to_vec();
        seen.sort_unstable();
        seen.dedup();
        for i in seen {
            self.amps[i] = -self.amps[i];
        }
        Ok(())
    }

    /// `sum |amp|^2` over `indices` (duplicates counted once).
    pub fn target_probability(&self, indices: &[usize]) -> Result<f64> {
        for &i in indices {
            self.check_index(i)?;
        }
        let mut seen = indices.to_vec();
        seen.sort_unstable();
        seen.dedup();
        Ok(seen.into_iter().map(|i| self.amps[i].norm_sqr()).sum())
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }
}
