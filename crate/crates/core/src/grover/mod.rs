//! Grover search: oracle, standard and phase-rotated diffusion, and the
//! iteration loop.
//!
//! The diffusion sandwich is `H^n X^n c^{n-1}(G) X^n H^n` with `G = Z` for
//! the standard operator. Leading minus signs are global phase and are
//! dropped, so the gate form equals `-(2|s><s| - I)`.

mod gates;
mod schedule;

pub(crate) use gates::ry_z_derivative;
pub use gates::{h_ry, ry, ry_h, ry_z};
pub use schedule::{
    adaptive_phase_angle, fixed_phase_angle, AdaptiveInterpretation, HybridGate, InnerGate,
    PhaseSchedule, ScheduleKind,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevector::{check_qubit_count, kernel, OneQubitGate, StateVector, NORM_TOL};

/// Basis indices the oracle marks. Sorted, deduplicated, nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSet {
    indices: Vec<usize>,
}

impl MarkedSet {
    pub fn new(indices: impl IntoIterator<Item = usize>, n_qubits: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let dim = 1usize << n_qubits;
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::invalid("marked set must be nonempty"));
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::BasisIndex { index, dim });
        }
        if indices.len() >= dim {
            return Err(Error::invalid(
                "marking every basis state leaves nothing to search",
            ));
        }
        Ok(Self { indices })
    }

    /// `{2^n - 1}`, the all-ones state.
    pub fn all_ones(n_qubits: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        Self::new([(1usize << n_qubits) - 1], n_qubits)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroverConfig {
    pub n_qubits: usize,
    pub marked: MarkedSet,
    pub schedule: PhaseSchedule,
    pub max_iterations: usize,
}

impl GroverConfig {
    pub fn new(
        n_qubits: usize,
        marked: MarkedSet,
        schedule: PhaseSchedule,
        max_iterations: usize,
    ) -> Result<Self> {
        let config = Self {
            n_qubits,
            marked,
            schedule,
            max_iterations,
        };
        config.validate()?;
        Ok(config)
    }

    /// `max_iterations = 2 * n_optimal_standard + 2`, enough to see the first
    /// peak and what follows it.
    pub fn with_default_iterations(
        n_qubits: usize,
        marked: MarkedSet,
        schedule: PhaseSchedule,
    ) -> Result<Self> {
        let k = default_max_iterations(n_qubits, marked.len())?;
        Self::new(n_qubits, marked, schedule, k)
    }

    pub fn validate(&self) -> Result<()> {
        check_qubit_count(self.n_qubits)?;
        // Re-check against this register size.
        MarkedSet::new(self.marked.indices.iter().copied(), self.n_qubits)?;
        if self.max_iterations == 0 {
            return Err(Error::invalid("max_iterations must be at least 1"));
        }
        let target = self.schedule.rotation_target_for(self.n_qubits);
        if target >= self.n_qubits {
            return Err(Error::QubitIndex {
                qubit: target,
                n_qubits: self.n_qubits,
            });
        }
        if self.schedule.is_modified() && self.n_qubits < 2 {
            return Err(Error::invalid(
                "phase-rotated schedules need at least 2 qubits",
            ));
        }
        if let Some(t) = self.schedule.angle_override {
            if !t.is_finite() {
                return Err(Error::invalid("angle override must be finite"));
            }
        }
        Ok(())
    }
}

pub fn default_max_iterations(n_qubits: usize, marked_count: usize) -> Result<usize> {
    Ok(2 * n_optimal_standard(n_qubits, marked_count)? + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Rotation angle applied this iteration; 0 for the standard diffusion.
    pub theta_used: f64,
    pub target_probability: f64,
    /// Mean of the real parts of all amplitudes after the iteration.
    pub mean_amplitude: f64,
    pub max_nontarget_probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub config: GroverConfig,
    pub records: Vec<IterationRecord>,
    pub initial_probability: f64,
    /// Set when a phase-rotated schedule runs with more than one marked state;
    /// the angle formulas assume a single target.
    pub multi_target_modified: bool,
}

impl RunTrace {
    pub fn probabilities(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.target_probability).collect()
    }
}

/// Phase oracle: negates every marked amplitude.
pub fn apply_oracle(state: &mut StateVector, marked: &MarkedSet) -> Result<()> {
    state.phase_flip_indices(marked.indices())
}

/// Inversion about the mean: `a -> 2m - a` with `m` the mean amplitude.
pub fn standard_diffusion_mean(state: &mut StateVector) {
    let amps = state.amps_mut();
    let mean = amps.iter().sum::<num_complex::Complex64>() / amps.len() as f64;
    for a in amps.iter_mut() {
        *a = 2.0 * mean - *a;
    }
}

/// Runs the diffusion sandwich around an arbitrary controlled gate on raw
/// amplitudes.
pub(crate) fn diffusion_sandwich(
    amps: &mut [num_complex::Complex64],
    n_qubits: usize,
    inner: &OneQubitGate,
    rotation_target: usize,
) {
    // X*H then H*X per qubit: the same products as H^n then X^n, fused.
    let pre = OneQubitGate::pauli_x() * OneQubitGate::hadamard();
    let post = OneQubitGate::hadamard() * OneQubitGate::pauli_x();
    let mask = ((1usize << n_qubits) - 1) & !(1 << rotation_target);
    kernel::apply_all(amps, n_qubits, &pre);
    kernel::apply_controlled_pairs(amps, rotation_target, mask, inner);
    kernel::apply_all(amps, n_qubits, &post);
}

/// `H^n X^n c^{n-1}(inner) X^n H^n`, controls on every qubit but `rotation_target`.
pub fn diffusion_with_gate(
    state: &mut StateVector,
    inner: &OneQubitGate,
    rotation_target: usize,
) -> Result<()> {
    let n = state.n_qubits();
    if rotation_target >= n {
        return Err(Error::QubitIndex {
            qubit: rotation_target,
            n_qubits: n,
        });
    }
    diffusion_sandwich(state.amps_mut(), n, inner, rotation_target);
    Ok(())
}

/// The gate-level standard diffusion. Equals [`standard_diffusion_mean`] up
/// to a global sign.
pub fn standard_diffusion_gates(state: &mut StateVector, rotation_target: usize) -> Result<()> {
    diffusion_with_gate(state, &OneQubitGate::pauli_z(), rotation_target)
}

pub fn inner_gate(kind: InnerGate, theta: f64) -> Result<OneQubitGate> {
    match kind {
        InnerGate::RyZ => ry_z(theta),
        InnerGate::HRy => h_ry(theta),
        InnerGate::RyH => ry_h(theta),
    }
}

/// Diffusion with `c^{n-1}` of the chosen rotation gate in place of `c^{n-1}Z`.
pub fn modified_diffusion(
    state: &mut StateVector,
    theta: f64,
    inner: InnerGate,
    rotation_target: usize,
) -> Result<()> {
    let gate = inner_gate(inner, theta)?;
    diffusion_with_gate(state, &gate, rotation_target)
}

/// Prepares the uniform state and applies `max_iterations` oracle + diffusion
/// rounds, recording the marked-state probability after each.
///
/// The norm is checked against `1e-10` after every iteration; drift is an
/// error, never renormalised.
pub fn run_grover(config: &GroverConfig) -> Result<RunTrace> {
    config.validate()?;
    let n = config.n_qubits;
    let target = config.schedule.rotation_target_for(n);
    let marked = &config.marked;

    let mut state = StateVector::uniform_superposition(n)?;
    let initial_probability = state.target_probability(marked.indices())?;
    let mut records = Vec::with_capacity(config.max_iterations);

    for i in 1..=config.max_iterations {
        apply_oracle(&mut state, marked)?;
        let (theta, inner) = config.schedule.step(n, i)?;
        match inner {
            None => standard_diffusion_gates(&mut state, target)?,
            Some(kind) => modified_diffusion(&mut state, theta, kind, target)?,
        }
        state.check_norm(NORM_TOL)?;
        records.push(record(&state, marked, i, theta));
    }

    Ok(RunTrace {
        config: config.clone(),
        records,
        initial_probability,
        multi_target_modified: config.schedule.is_modified() && marked.len() > 1,
    })
}

fn record(
    state: &StateVector,
    marked: &MarkedSet,
    iteration: usize,
    theta: f64,
) -> IterationRecord {
    let amps = state.amplitudes();
    let mut target_probability = 0.0;
    let mut max_nontarget_probability: f64 = 0.0;
    let mut re_sum = 0.0;
    for (x, a) in amps.iter().enumerate() {
        re_sum += a.re;
        let p = a.norm_sqr();
        if marked.contains(x) {
            target_probability += p;
        } else {
            max_nontarget_probability = max_nontarget_probability.max(p);
        }
    }
    IterationRecord {
        iteration,
        theta_used: theta,
        target_probability,
        mean_amplitude: re_sum / amps.len() as f64,
        max_nontarget_probability,
    }
}

/// `floor((pi/4) sqrt(N/M))`.
///
/// Two variants of the half-correction circulate, `(pi/4) sqrt(N/M - 1/2)`
/// and `(pi/4) sqrt(N/M) - 1/2`; for one marked state and n = 2..13 all
/// three give the same integers once rounded down.
pub fn n_optimal_standard(n_qubits: usize, marked_count: usize) -> Result<usize> {
    if !(1..=62).contains(&n_qubits) {
        return Err(Error::invalid(format!("n = {n_qubits} outside 1..=62")));
    }
    let dim = 1u64 << n_qubits;
    if marked_count == 0 || marked_count as u64 >= dim {
        return Err(Error::invalid(format!(
            "marked count must satisfy 1 <= M < N = {dim}, got {marked_count}"
        )));
    }
    let ratio = dim as f64 / marked_count as f64;
    Ok((std::f64::consts::FRAC_PI_4 * ratio.sqrt()).floor() as usize)
}
