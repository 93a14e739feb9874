//! Classical models checked against the simulator: the amplitude
//! recurrence, closed-form success probabilities, the optimal-angle search,
//! peak detection and the standard-vs-modified sweep.

mod phase_search;
mod recurrence;
mod success;
mod sweep;

pub use phase_search::{
    optimal_phase_search, optimal_phase_search_detailed, FirstStepObjective, PhaseSearch,
    GRID_STEP, MAX_SEARCH_QUBITS, MIN_SEARCH_QUBITS,
};
pub use recurrence::{
    amplitude_ratio, recurrence_table, simulated_marked_amplitudes, RecurrenceState,
    MAX_RECURRENCE_QUBITS,
};
pub use success::{theoretical_complexity, SuccessModel, DEFAULT_DELTA_THETA};
pub use sweep::{find_peak_iteration, first_peak, sweep_compare, ComparisonRow, SweepReport};
