use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grover::{apply_oracle, standard_diffusion_gates, MarkedSet};
use crate::statevector::StateVector;

/// Two-amplitude description of standard Grover with one marked state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceState {
    /// 1-based; row `i` holds the amplitudes after `i - 1` iterations.
    pub iteration: usize,
    /// Marked-state amplitude.
    pub a: f64,
    /// Amplitude shared by every unmarked state.
    pub b: f64,
    /// Mean amplitude once the oracle has flipped `a`; the next reflection
    /// is taken about this value.
    pub mean: f64,
}

/// Largest register the recurrence accepts; `N - 1` stays exact in f64.
pub const MAX_RECURRENCE_QUBITS: usize = 52;

/// Iterates the reflection-about-the-mean recurrence from the uniform state.
///
/// Each step flips `a -> -a`, takes `m = ((N-1) b - a) / N`, then reflects:
/// `a <- 2m + a`, `b <- 2m - b`. Amplitudes are signed in the mean-inversion
/// convention; the gate-level diffusion differs by `(-1)^k` after `k` steps.
pub fn recurrence_table(n_qubits: usize, iterations: usize) -> Result<Vec<RecurrenceState>> {
    if iterations == 0 {
        return Err(Error::invalid("recurrence needs at least one row"));
    }
    if !(1..=MAX_RECURRENCE_QUBITS).contains(&n_qubits) {
        return Err(Error::invalid(format!(
            "recurrence supports 1..={MAX_RECURRENCE_QUBITS} qubits, got {n_qubits}"
        )));
    }
    let dim = 2f64.powi(n_qubits as i32);
    let mut a = 1.0 / dim.sqrt();
    let mut b = a;
    let mut rows = Vec::with_capacity(iterations);
    for iteration in 1..=iterations {
        let mean = ((dim - 1.0) * b - a) / dim;
        rows.push(RecurrenceState {
            iteration,
            a,
            b,
            mean,
        });
        a += 2.0 * mean;
        b = 2.0 * mean - b;
    }
    Ok(rows)
}

/// `(2i + 1) / (2i - 1)`, the large-N limit of `a_{i+1} / a_i`.
pub fn amplitude_ratio(i: usize) -> Result<f64> {
    if i == 0 {
        return Err(Error::invalid("ratio index is 1-based"));
    }
    let i = i as f64;
    Ok((2.0 * i + 1.0) / (2.0 * i - 1.0))
}

/// Marked-state amplitudes of the gate-level standard simulation (marked
/// state `2^n - 1`) after `0..rows` iterations, multiplied by `(-1)^k` so they
/// line up with [`recurrence_table`]. Entry `k` pairs with recurrence row
/// `k + 1`.
pub fn simulated_marked_amplitudes(n_qubits: usize, rows: usize) -> Result<Vec<Complex64>> {
    let marked = MarkedSet::all_ones(n_qubits)?;
    let m = marked.indices()[0];
    let mut state = StateVector::uniform_superposition(n_qubits)?;
    let mut out = Vec::with_capacity(rows);
    for k in 0..rows {
        if k > 0 {
            apply_oracle(&mut state, &marked)?;
            standard_diffusion_gates(&mut state, n_qubits - 1)?;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        out.push(state.amplitude(m) * sign);
    }
    Ok(out)
}
