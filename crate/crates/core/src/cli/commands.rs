use crate::analysis::{
    amplitude_ratio, find_peak_iteration, first_peak, optimal_phase_search, recurrence_table,
    simulated_marked_amplitudes, sweep_compare, SuccessModel, MAX_RECURRENCE_QUBITS,
    MAX_SEARCH_QUBITS,
};
use crate::error::{Error, Result};
use crate::grover::{
    default_max_iterations, fixed_phase_angle, run_grover, GroverConfig, MarkedSet, PhaseSchedule,
};
use crate::statevector::{check_qubit_count, MAX_QUBITS};

use super::output::{Cell, Table};
use super::{AnglesArgs, CurveArgs, RecurrenceArgs, RunArgs, SweepArgs, TOOL_VERSION};

const MAX_ANGLE_QUBITS: usize = 62;

fn schedule_meta(
    table: &mut Table,
    command: &str,
    schedule: &PhaseSchedule,
    n_qubits: Option<usize>,
) {
    table.meta("command", command);
    table.meta("schedule", schedule.kind.as_str());
    table.meta("eq10_interpretation", schedule.interpretation.as_str());
    table.meta("hybrid_gate", schedule.hybrid_gate.as_str());
    match n_qubits {
        Some(n) => table.meta("rotation_target", schedule.rotation_target_for(n)),
        None => table.meta(
            "rotation_target",
            schedule
                .rotation_target
                .map_or("n-1".to_string(), |t| t.to_string()),
        ),
    }
    table.meta("theta_override", schedule.angle_override);
    table.meta("tool_version", TOOL_VERSION);
}

fn config_for(
    n: usize,
    marked: Option<&[usize]>,
    schedule: PhaseSchedule,
    iterations: Option<usize>,
) -> Result<GroverConfig> {
    check_qubit_count(n)?;
    let marked = match marked {
        Some(list) => MarkedSet::new(list.iter().copied(), n)?,
        None => MarkedSet::all_ones(n)?,
    };
    let k = match iterations {
        Some(k) => k,
        None => default_max_iterations(n, marked.len())?,
    };
    GroverConfig::new(n, marked, schedule, k)
}

pub fn cmd_run(args: &RunArgs) -> Result<Table> {
    let schedule = args.schedule.schedule();
    let config = config_for(
        args.qubits,
        args.marked.as_ref().map(|m| m.0.as_slice()),
        schedule,
        args.iterations,
    )?;
    let trace = run_grover(&config)?;

    let mut t = Table::new(vec![
        "iteration",
        "theta_used",
        "target_probability",
        "mean_amplitude",
    ]);
    for r in &trace.records {
        t.push(vec![
            r.iteration.into(),
            r.theta_used.into(),
            r.target_probability.into(),
            r.mean_amplitude.into(),
        ]);
    }
    schedule_meta(&mut t, "run", &schedule, Some(config.n_qubits));
    t.meta("n_qubits", config.n_qubits);
    t.meta("marked", config.marked.indices());
    t.meta("max_iterations", config.max_iterations);
    t.meta("initial_probability", trace.initial_probability);
    t.meta("multi_target_modified", trace.multi_target_modified);
    Ok(t)
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Table> {
    let schedule = args.schedule.schedule();
    let report = sweep_compare(args.qubits.clone(), schedule)?;

    let mut t = Table::new(vec![
        "n",
        "std_iters",
        "mod_iters",
        "difference",
        "ratio",
        "improvement_pct",
        "std_peak_prob",
        "mod_peak_prob",
    ]);
    for r in &report.rows {
        t.push(vec![
            r.n.into(),
            r.std_iters.into(),
            r.mod_iters.into(),
            r.difference.into(),
            r.ratio.into(),
            r.improvement_pct.into(),
            r.std_peak_prob.into(),
            r.mod_peak_prob.into(),
        ]);
    }
    t.trailer.push((
        "average_improvement_pct",
        report.average_improvement_pct.into(),
    ));
    t.trailer.push((
        "average_improvement_excluding_n2_pct",
        report.average_improvement_excluding_n2_pct.into(),
    ));
    schedule_meta(&mut t, "sweep", &schedule, None);
    t.meta("qubits", [args.qubits.start(), args.qubits.end()]);
    t.meta("marked", "2^n-1");
    Ok(t)
}

pub fn cmd_angles(args: &AnglesArgs) -> Result<Table> {
    let (lo, hi) = (*args.qubits.start(), *args.qubits.end());
    if hi > MAX_ANGLE_QUBITS {
        return Err(Error::Sizing {
            n_qubits: hi,
            min: 2,
            max: MAX_ANGLE_QUBITS,
        });
    }
    if lo < 2 {
        return Err(Error::invalid("angles need at least 2 qubits"));
    }
    let mut t = Table::new(vec![
        "n",
        "fraction",
        "fraction_value",
        "phase_rad",
        "search_rad",
        "abs_diff",
    ]);
    for n in lo..=hi {
        let den = 1u64 << (n - 2);
        let phase = fixed_phase_angle(n)?;
        let search = if n <= MAX_SEARCH_QUBITS {
            Some(optimal_phase_search(n)?)
        } else {
            None
        };
        t.push(vec![
            n.into(),
            Cell::Text(format!("{}/{}", den - 1, den)),
            ((den - 1) as f64 / den as f64).into(),
            phase.into(),
            search.into(),
            search.map(|s| (s - phase).abs()).into(),
        ]);
    }
    t.meta("command", "angles");
    t.meta("qubits", [lo, hi]);
    t.meta("search_max_qubits", MAX_SEARCH_QUBITS);
    t.meta("tool_version", TOOL_VERSION);
    Ok(t)
}

pub fn cmd_recurrence(args: &RecurrenceArgs) -> Result<Table> {
    let n = args.qubits;
    if n > MAX_RECURRENCE_QUBITS {
        return Err(Error::Sizing {
            n_qubits: n,
            min: 1,
            max: MAX_RECURRENCE_QUBITS,
        });
    }
    if n == 0 {
        return Err(Error::Sizing {
            n_qubits: 0,
            min: 1,
            max: MAX_RECURRENCE_QUBITS,
        });
    }
    let k = args.iterations;
    if k == 0 {
        return Err(Error::invalid("iterations must be at least 1"));
    }
    // One extra row for the last ratio.
    let rows = recurrence_table(n, k + 1)?;
    let simulated = if n <= MAX_QUBITS {
        Some(simulated_marked_amplitudes(n, k)?)
    } else {
        None
    };

    let mut t = Table::new(vec![
        "i",
        "a_recurrence",
        "a_statevector",
        "ratio",
        "model_ratio",
    ]);
    for i in 1..=k {
        let a = rows[i - 1].a;
        let sim = simulated.as_ref().map(|s| s[i - 1].re);
        t.push(vec![
            i.into(),
            a.into(),
            sim.into(),
            (rows[i].a / a).into(),
            amplitude_ratio(i)?.into(),
        ]);
    }
    t.meta("command", "recurrence");
    t.meta("n_qubits", n);
    t.meta("iterations", k);
    t.meta("statevector_column", simulated.is_some());
    t.meta("tool_version", TOOL_VERSION);
    Ok(t)
}

pub fn cmd_curve(args: &CurveArgs) -> Result<Table> {
    let schedule = args.schedule.schedule();
    let config = config_for(args.qubits, None, schedule, Some(args.iterations))?;
    let trace = run_grover(&config)?;
    let mut model = SuccessModel::new(config.n_qubits, 1)?;
    if let Some(d) = args.delta_theta {
        if !d.is_finite() {
            return Err(Error::invalid("delta-theta must be finite"));
        }
        model = model.with_delta_theta(d);
    }

    let mut columns = vec!["iteration", "probability"];
    if args.with_model {
        columns.extend(["model_standard", "model_modified"]);
    }
    let mut t = Table::new(columns);
    let probs: Vec<f64> = std::iter::once(trace.initial_probability)
        .chain(trace.probabilities())
        .collect();
    for (i, p) in probs.iter().enumerate() {
        let mut row = vec![Cell::from(i), Cell::from(*p)];
        if args.with_model {
            row.push(model.standard(i).into());
            row.push(model.modified(i).into());
        }
        t.push(row);
    }

    schedule_meta(&mut t, "curve", &schedule, Some(config.n_qubits));
    t.meta("n_qubits", config.n_qubits);
    t.meta("marked", config.marked.indices());
    let (peak, peak_p) = find_peak_iteration(&trace)?;
    t.meta("simulated_first_peak", peak);
    t.meta("simulated_first_peak_probability", peak_p);
    if args.with_model {
        let k = args.iterations;
        let standard: Vec<f64> = (1..=k).map(|i| model.standard(i)).collect();
        let modified: Vec<f64> = (1..=k).map(|i| model.modified(i)).collect();
        t.meta("delta_theta", model.delta_theta);
        t.meta(
            "model_standard_first_peak",
            first_peak(&standard).map(|x| x + 1),
        );
        t.meta(
            "model_modified_first_peak",
            first_peak(&modified).map(|x| x + 1),
        );
    }
    Ok(t)
}
