use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grover::{
    default_max_iterations, run_grover, GroverConfig, MarkedSet, PhaseSchedule, RunTrace,
};
use crate::statevector::MAX_QUBITS;

/// First local maximum of the target probability: the earliest iteration
/// after which the probability stops increasing. A trace that never turns
/// over peaks at its last record; a flat one at iteration 1.
///
/// Taking the global maximum instead would jump to a later lobe of the
/// sinusoid whenever that lobe happens to sample closer to 1.
pub fn find_peak_iteration(trace: &RunTrace) -> Result<(usize, f64)> {
    let probs = trace.probabilities();
    let k = first_peak(&probs).ok_or_else(|| Error::invalid("trace has no records"))?;
    Ok((trace.records[k].iteration, probs[k]))
}

/// Index form of [`find_peak_iteration`] over a bare probability sequence.
pub fn first_peak(probs: &[f64]) -> Option<usize> {
    if probs.is_empty() {
        return None;
    }
    Some(
        probs
            .windows(2)
            .position(|w| w[1] <= w[0])
            .unwrap_or(probs.len() - 1),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub std_iters: usize,
    pub mod_iters: usize,
    pub difference: i64,
    pub ratio: f64,
    pub improvement_pct: f64,
    pub std_peak_prob: f64,
    pub mod_peak_prob: f64,
    pub schedule_used: PhaseSchedule,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rows: Vec<ComparisonRow>,
    /// Mean of every row's improvement.
    pub average_improvement_pct: f64,
    /// Mean over rows with `n != 2`; `None` when no such row exists.
    pub average_improvement_excluding_n2_pct: Option<f64>,
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

/// Peak iteration of the standard schedule against `schedule` for each
/// register size, marked state `2^n - 1`, `2 * n_optimal + 2` iterations.
pub fn sweep_compare(
    qubits: RangeInclusive<usize>,
    schedule: PhaseSchedule,
) -> Result<SweepReport> {
    let (lo, hi) = (*qubits.start(), *qubits.end());
    if lo < 2 || hi > MAX_QUBITS || lo > hi {
        if hi > MAX_QUBITS {
            return Err(Error::Sizing {
                n_qubits: hi,
                min: 2,
                max: MAX_QUBITS,
            });
        }
        return Err(Error::invalid(format!(
            "qubit range {lo}..{hi} must be nonempty and start at 2 or more"
        )));
    }

    let rows = qubits
        .into_par_iter()
        .map(|n| compare_one(n, schedule))
        .collect::<Result<Vec<_>>>()?;

    let average_improvement_pct = mean(rows.iter().map(|r| r.improvement_pct)).unwrap_or(0.0);
    let average_improvement_excluding_n2_pct =
        mean(rows.iter().filter(|r| r.n != 2).map(|r| r.improvement_pct));
    Ok(SweepReport {
        rows,
        average_improvement_pct,
        average_improvement_excluding_n2_pct,
    })
}

fn compare_one(n: usize, schedule: PhaseSchedule) -> Result<ComparisonRow> {
    let marked = MarkedSet::all_ones(n)?;
    let k = default_max_iterations(n, 1)?;
    let std_trace = run_grover(&GroverConfig::new(
        n,
        marked.clone(),
        PhaseSchedule::standard(),
        k,
    )?)?;
    let mod_trace = run_grover(&GroverConfig::new(n, marked, schedule, k)?)?;
    let (std_iters, std_peak_prob) = find_peak_iteration(&std_trace)?;
    let (mod_iters, mod_peak_prob) = find_peak_iteration(&mod_trace)?;
    let ratio = mod_iters as f64 / std_iters as f64;
    Ok(ComparisonRow {
        n,
        std_iters,
        mod_iters,
        difference: std_iters as i64 - mod_iters as i64,
        ratio,
        improvement_pct: 100.0 * (1.0 - ratio),
        std_peak_prob,
        mod_peak_prob,
        schedule_used: schedule,
    })
}
