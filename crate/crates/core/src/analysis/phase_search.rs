//! Numeric search for the rotation angle that maximises the marked-state
//! probability after one oracle + rotated-diffusion step.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grover::{ry_z, ry_z_derivative};
use crate::statevector::{kernel, OneQubitGate, StateVector};

pub const MIN_SEARCH_QUBITS: usize = 2;
pub const MAX_SEARCH_QUBITS: usize = 12;

/// Grid spacing upper bound for the coarse scan over `[-pi, pi)`.
pub const GRID_STEP: f64 = 1e-3;

/// Marked-state probability after one step from the uniform state, as a
/// function of the angle in `c^{n-1}(R_y(t) Z)`.
///
/// The oracle and the leading half of the diffusion sandwich do not depend
/// on the angle, so they are applied once and cached.
#[derive(Debug, Clone)]
pub struct FirstStepObjective {
    n_qubits: usize,
    rotation_target: usize,
    control_mask: usize,
    marked: usize,
    /// State after the oracle and `X^n H^n`.
    prepared: Vec<Complex64>,
}

impl FirstStepObjective {
    /// Marked state `2^n - 1`, rotation on qubit `n - 1`.
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits < MIN_SEARCH_QUBITS {
            return Err(Error::invalid("phase search needs at least 2 qubits"));
        }
        let mut state = StateVector::uniform_superposition(n_qubits)?;
        let marked = state.dim() - 1;
        state.phase_flip_indices(&[marked])?;
        let mut prepared = state.into_amplitudes();
        let pre = OneQubitGate::pauli_x() * OneQubitGate::hadamard();
        kernel::apply_all(&mut prepared, n_qubits, &pre);
        let rotation_target = n_qubits - 1;
        Ok(Self {
            n_qubits,
            rotation_target,
            control_mask: marked & !(1 << rotation_target),
            marked,
            prepared,
        })
    }

    fn finish(&self, buf: &mut [Complex64], gate: &OneQubitGate) -> Complex64 {
        kernel::apply_controlled_pairs(buf, self.rotation_target, self.control_mask, gate);
        let post = OneQubitGate::hadamard() * OneQubitGate::pauli_x();
        kernel::apply_all(buf, self.n_qubits, &post);
        buf[self.marked]
    }

    fn amplitude(&self, theta: f64) -> Result<Complex64> {
        let gate = ry_z(theta)?;
        let mut buf = self.prepared.clone();
        Ok(self.finish(&mut buf, &gate))
    }

    pub fn probability(&self, theta: f64) -> Result<f64> {
        Ok(self.amplitude(theta)?.norm_sqr())
    }

    /// Exact `dp/dt`. The output is linear in the controlled block, so the
    /// derivative state is the cached state with everything outside the
    /// controlled pair zeroed, pushed through `dG/dt` and the trailing half.
    pub fn derivative(&self, theta: f64) -> Result<f64> {
        let amp = self.amplitude(theta)?;
        let i0 = self.control_mask;
        let i1 = i0 | (1 << self.rotation_target);
        let mut buf = vec![Complex64::new(0.0, 0.0); self.prepared.len()];
        buf[i0] = self.prepared[i0];
        buf[i1] = self.prepared[i1];
        let d_amp = self.finish(&mut buf, &ry_z_derivative(theta));
        Ok(2.0 * (amp.conj() * d_amp).re)
    }
}

/// Outcome of [`optimal_phase_search_detailed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSearch {
    pub theta: f64,
    pub probability: f64,
    pub grid_theta: f64,
    /// Width of the final derivative-sign bracket (0 when the grid point is
    /// returned unrefined).
    pub bracket_width: f64,
}

/// Angle in `[-pi, pi)` maximising [`FirstStepObjective::probability`].
pub fn optimal_phase_search(n_qubits: usize) -> Result<f64> {
    Ok(optimal_phase_search_detailed(n_qubits)?.theta)
}

pub fn optimal_phase_search_detailed(n_qubits: usize) -> Result<PhaseSearch> {
    if !(MIN_SEARCH_QUBITS..=MAX_SEARCH_QUBITS).contains(&n_qubits) {
        return Err(Error::invalid(format!(
            "phase search supports {MIN_SEARCH_QUBITS}..={MAX_SEARCH_QUBITS} qubits, got {n_qubits}"
        )));
    }
    let objective = FirstStepObjective::new(n_qubits)?;

    let points = (2.0 * PI / GRID_STEP).ceil() as usize;
    let step = 2.0 * PI / points as f64;
    let values = (0..points)
        .into_par_iter()
        .map(|k| objective.probability(-PI + k as f64 * step))
        .collect::<Result<Vec<f64>>>()?;
    // Earliest maximum keeps the result independent of scheduling.
    let (best_k, _) =
        values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |(bk, bv), (k, &v)| {
                if v > bv {
                    (k, v)
                } else {
                    (bk, bv)
                }
            });
    let grid_theta = -PI + best_k as f64 * step;

    // Bisect on the sign of the exact derivative inside the neighbouring cells.
    let (mut lo, mut hi) = (grid_theta - step, grid_theta + step);
    let mut bracket_width = 0.0;
    let mut theta = grid_theta;
    if objective.derivative(lo)? >= 0.0 && objective.derivative(hi)? <= 0.0 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if objective.derivative(mid)? > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        theta = 0.5 * (lo + hi);
        bracket_width = hi - lo;
    }
    Ok(PhaseSearch {
        theta,
        probability: objective.probability(theta)?,
        grid_theta,
        bracket_width,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grover::{fixed_phase_angle, modified_diffusion, InnerGate, MarkedSet};

    #[test]
    fn objective_matches_full_kernel_path() {
        for n in [2, 3, 6] {
            let obj = FirstStepObjective::new(n).unwrap();
            for theta in [-2.0, 0.0, 0.5, 1.4, 3.0] {
                let mut s = StateVector::uniform_superposition(n).unwrap();
                let m = MarkedSet::all_ones(n).unwrap();
                crate::grover::apply_oracle(&mut s, &m).unwrap();
                modified_diffusion(&mut s, theta, InnerGate::RyZ, n - 1).unwrap();
                let p = s.target_probability(m.indices()).unwrap();
                assert!((obj.probability(theta).unwrap() - p).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn derivative_against_finite_difference() {
        let obj = FirstStepObjective::new(5).unwrap();
        let h = 1e-5;
        for theta in [-1.0, 0.3, 1.2, 2.2] {
            let fd = (obj.probability(theta + h).unwrap() - obj.probability(theta - h).unwrap())
                / (2.0 * h);
            assert!((fd - obj.derivative(theta).unwrap()).abs() < 1e-8);
        }
    }

    #[test]
    fn n2_optimum_is_zero() {
        let r = optimal_phase_search_detailed(2).unwrap();
        assert!(r.theta.abs() < 1e-9, "{r:?}");
        assert!((r.probability - 1.0).abs() < 1e-12);
    }

    #[test]
    fn small_registers_match_closed_form() {
        for n in 3..=5 {
            let r = optimal_phase_search_detailed(n).unwrap();
            assert!(
                (r.theta - fixed_phase_angle(n).unwrap()).abs() < 1e-9,
                "n={n} {r:?}"
            );
            assert!(r.bracket_width < 1e-9);
        }
    }

    #[test]
    fn range_checks() {
        assert!(optimal_phase_search(1).is_err());
        assert!(optimal_phase_search(13).is_err());
    }
}
