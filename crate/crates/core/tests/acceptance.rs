//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//! No test harness, so output is never captured.

use std::process::Command;
use std::time::{Duration, Instant};

use grover_phase::analysis::{
    amplitude_ratio, find_peak_iteration, optimal_phase_search, recurrence_table,
    simulated_marked_amplitudes, sweep_compare, SuccessModel,
};
use grover_phase::grover::{
    fixed_phase_angle, n_optimal_standard, run_grover, ry, ry_z, standard_diffusion_gates,
    standard_diffusion_mean, GroverConfig, HybridGate, MarkedSet, PhaseSchedule,
};
use grover_phase::statevector::{dense_operator_of, GateOp, OneQubitGate, StateVector};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const STANDARD_ROW: [usize; 12] = [1, 2, 3, 4, 6, 8, 12, 17, 25, 35, 50, 71];
const MODIFIED_ROW: [usize; 12] = [1, 1, 2, 3, 4, 6, 9, 12, 18, 25, 35, 50];
const REPORTED_AVG: f64 = 28.1017;
const REPORTED_AVG_EXCL_N2: f64 = 30.65;
const REPORTED_N5_STANDARD: f64 = 0.896936;
const REPORTED_N5_MODIFIED: f64 = 0.997461;

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.2?}]", out.detail, elapsed);
    if let Some(limit) = limit {
        if elapsed > limit {
            out.pass = false;
            out.detail = format!("{} exceeds {:?}", out.detail, limit);
        }
    }
    out
}

fn peak(n: usize, schedule: PhaseSchedule) -> (usize, f64) {
    let cfg = GroverConfig::with_default_iterations(n, MarkedSet::all_ones(n).unwrap(), schedule)
        .unwrap();
    find_peak_iteration(&run_grover(&cfg).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let report = match sweep_compare(2..=13, PhaseSchedule::standard()) {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let got: Vec<usize> = report.rows.iter().map(|r| r.std_iters).collect();
    Outcome::new(got == STANDARD_ROW, format!("standard peaks {got:?}"))
}

fn criterion_2() -> Outcome {
    let cfg = GroverConfig::new(
        5,
        MarkedSet::all_ones(5).unwrap(),
        PhaseSchedule::standard(),
        3,
    )
    .unwrap();
    let p = run_grover(&cfg).unwrap().records[2].target_probability;
    let closed = SuccessModel::new(5, 1).unwrap().standard(3);
    let d_reported = (p - REPORTED_N5_STANDARD).abs();
    let d_closed = (p - closed).abs();
    Outcome::new(
        d_reported < 5e-3 && d_closed < 1e-9,
        format!("p3 = {p:.9}; |p - {REPORTED_N5_STANDARD}| = {d_reported:.2e}; |p - closed form| = {d_closed:.2e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for n in 2..=12 {
        let found = optimal_phase_search(n).unwrap();
        let closed = if n <= 7 {
            let q = 2f64.powi(n as i32 - 2);
            2.0 * ((q - 1.0) / q).atan()
        } else {
            fixed_phase_angle(n).unwrap()
        };
        let d = (found - closed).abs();
        worst = worst.max(d);
        if d >= 1e-6 {
            failures.push(n);
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("max |search - closed form| = {worst:.2e} over n=2..12, failing {failures:?}"),
    )
}

fn criterion_4() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=10 {
        let rows = n_optimal_standard(n, 1).unwrap() + 1;
        let rec = recurrence_table(n, rows).unwrap();
        let sim = simulated_marked_amplitudes(n, rows).unwrap();
        for (r, s) in rec.iter().zip(&sim) {
            worst = worst.max((r.a - s.re).abs()).max(s.im.abs());
        }
    }
    let rows = recurrence_table(20, 7).unwrap();
    let mut worst_ratio: f64 = 0.0;
    for i in 1..=6 {
        let got = rows[i].a / rows[i - 1].a;
        worst_ratio = worst_ratio.max((got - amplitude_ratio(i).unwrap()).abs());
    }
    Outcome::new(
        worst < 1e-12 && worst_ratio < 1e-4,
        format!(
            "recurrence vs simulation {worst:.2e}; ratio deviation at N=2^20 {worst_ratio:.2e}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let n = 5;
    println!("  n=5 headline, per combination (target {REPORTED_N5_MODIFIED}):");
    println!(
        "    {:<30} {:>6} {:>5} {:>12} {:>10}  verdict",
        "schedule", "target", "peak", "p_peak", "deviation"
    );
    let mut any = false;
    let mut default_ok = false;
    let mut combos: Vec<(String, PhaseSchedule)> = Vec::new();
    for gate in [HybridGate::RyH, HybridGate::HRy] {
        for t in 0..n {
            combos.push((
                format!("hybrid-eq11-12/{gate}"),
                PhaseSchedule::hybrid()
                    .with_hybrid_gate(gate)
                    .with_rotation_target(t),
            ));
        }
    }
    for t in 0..n {
        combos.push((
            "fixed-eq9".into(),
            PhaseSchedule::fixed().with_rotation_target(t),
        ));
    }
    for interp in ["multiplicative", "additive"] {
        combos.push((
            format!("adaptive-eq10/{interp}"),
            PhaseSchedule::adaptive(interp.parse().unwrap()).with_rotation_target(n - 1),
        ));
    }
    for (name, schedule) in combos {
        let target = schedule.rotation_target_for(n);
        let (k, p) = peak(n, schedule);
        let dev = (p - REPORTED_N5_MODIFIED).abs();
        let ok = k == 3 && p >= 0.99 && dev < 5e-3;
        any |= ok;
        if ok && name == "hybrid-eq11-12/ry-h" && target == n - 1 {
            default_ok = true;
        }
        println!(
            "    {name:<30} {target:>6} {k:>5} {p:>12.7} {dev:>10.2e}  {}",
            if ok { "meets" } else { "deviates" }
        );
    }
    Outcome::new(
        any,
        format!(
            "some combination meets the headline: {any}; default hybrid meets it: {default_ok}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let report = sweep_compare(2..=13, PhaseSchedule::hybrid()).unwrap();
    println!("  modified row, schedule hybrid-eq11-12 (gate ry-h, target n-1):");
    println!(
        "    {:>3} {:>5} {:>9} {:>7}",
        "n", "got", "reported", "match"
    );
    let mut matches = 0;
    for (row, expected) in report.rows.iter().zip(MODIFIED_ROW) {
        let ok = row.mod_iters == expected;
        matches += ok as usize;
        println!(
            "    {:>3} {:>5} {:>9} {:>7}",
            row.n,
            row.mod_iters,
            expected,
            if ok { "yes" } else { "NO" }
        );
    }
    let excl = report
        .average_improvement_excluding_n2_pct
        .unwrap_or(f64::NAN);
    println!(
        "    average improvement {:.4}% (reported {REPORTED_AVG}%), excluding n=2 {:.4}% (reported {REPORTED_AVG_EXCL_N2}%)",
        report.average_improvement_pct, excl
    );
    // Reporting is the criterion; the match count is informational.
    Outcome::new(
        true,
        format!(
            "{matches}/12 rows match; averages {:.4}% / {:.4}%",
            report.average_improvement_pct, excl
        ),
    )
}

fn random_state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n).prop_filter_map(
        "zero vector",
        move |v| {
            let amps: Vec<Complex64> = v.into_iter().map(|(r, i)| Complex64::new(r, i)).collect();
            let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            (norm > 1e-3).then(|| {
                StateVector::from_amplitudes(n, amps.iter().map(|a| a / norm).collect()).unwrap()
            })
        },
    )
}

fn random_circuit(n: usize, len: usize) -> impl Strategy<Value = Vec<GateOp>> {
    prop::collection::vec((0u8..4, -6.3f64..6.3, 0..n, any::<u16>()), 0..len).prop_map(move |raw| {
        raw.into_iter()
            .map(|(kind, angle, target, mask)| {
                let gate = match kind {
                    0 => OneQubitGate::hadamard(),
                    1 => OneQubitGate::pauli_x(),
                    2 => OneQubitGate::pauli_z(),
                    _ => ry(angle).unwrap(),
                };
                let controls = (0..n)
                    .filter(|&q| q != target && mask & (1 << q) != 0)
                    .collect();
                GateOp::controlled(gate, controls, target)
            })
            .collect()
    })
}

fn property(
    name: &str,
    cases: u32,
    f: impl FnOnce(&mut TestRunner) -> Result<(), String>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    f(&mut runner).map_err(|e| format!("{name}: {e}"))
}

fn criterion_7() -> Outcome {
    let checks: Vec<Result<(), String>> = vec![
        property("norm over random circuits", 64, |r| {
            r.run(
                &(1usize..=10).prop_flat_map(|n| (Just(n), random_circuit(n, 40))),
                |(n, ops)| {
                    let mut s = StateVector::uniform_superposition(n).unwrap();
                    for op in &ops {
                        s.apply(op).unwrap();
                    }
                    prop_assert!((s.norm_sqr() - 1.0).abs() < 1e-10);
                    Ok(())
                },
            )
            .map_err(|e| e.to_string())
        }),
        property("gate vs mean diffusion", 48, |r| {
            r.run(
                &(2usize..=10).prop_flat_map(|n| (random_state(n), 0..n)),
                |(state, t)| {
                    let mut g = state.clone();
                    standard_diffusion_gates(&mut g, t).unwrap();
                    let mut m = state;
                    standard_diffusion_mean(&mut m);
                    for (a, b) in g.amplitudes().iter().zip(m.amplitudes()) {
                        prop_assert!((a + b).norm() < 1e-10);
                    }
                    Ok(())
                },
            )
            .map_err(|e| e.to_string())
        }),
        property("dense vs kernel", 48, |r| {
            r.run(
                &(1usize..=6).prop_flat_map(|n| (Just(n), random_circuit(n, 20), random_state(n))),
                |(n, ops, state)| {
                    let expected = dense_operator_of(&ops, n)
                        .unwrap()
                        .mul_vec(state.amplitudes());
                    let mut s = state;
                    for op in &ops {
                        s.apply(op).unwrap();
                    }
                    for (a, b) in s.amplitudes().iter().zip(&expected) {
                        prop_assert!((a - b).norm() < 1e-10);
                    }
                    Ok(())
                },
            )
            .map_err(|e| e.to_string())
        }),
        {
            let hx = OneQubitGate::hadamard() * OneQubitGate::pauli_x();
            let d = hx.max_abs_diff(&ry(-std::f64::consts::FRAC_PI_2).unwrap());
            if d < 1e-15 {
                Ok(())
            } else {
                Err(format!("HX vs R_y(-pi/2): {d:e}"))
            }
        },
        {
            let mut bad = None;
            if ry_z(0.0).unwrap() != OneQubitGate::pauli_z() {
                bad = Some("ry_z(0) != Z".to_string());
            }
            for n in 2..=10 {
                let m = MarkedSet::all_ones(n).unwrap();
                let a = run_grover(
                    &GroverConfig::with_default_iterations(n, m.clone(), PhaseSchedule::standard())
                        .unwrap(),
                )
                .unwrap();
                let b = run_grover(
                    &GroverConfig::with_default_iterations(
                        n,
                        m,
                        PhaseSchedule::fixed().with_angle(0.0),
                    )
                    .unwrap(),
                )
                .unwrap();
                for (x, y) in a.records.iter().zip(&b.records) {
                    if (x.target_probability - y.target_probability).abs() >= 1e-12 {
                        bad = Some(format!("zero-angle reduction n={n} i={}", x.iteration));
                    }
                }
            }
            bad.map_or(Ok(()), Err)
        },
        {
            let mut bad = None;
            for n in 2..=12 {
                let k = n_optimal_standard(n, 1).unwrap();
                let cfg = GroverConfig::new(
                    n,
                    MarkedSet::all_ones(n).unwrap(),
                    PhaseSchedule::standard(),
                    k,
                )
                .unwrap();
                let model = SuccessModel::new(n, 1).unwrap();
                for r in run_grover(&cfg).unwrap().records {
                    if (r.target_probability - model.standard(r.iteration)).abs() >= 1e-9 {
                        bad = Some(format!("sin^2 law n={n} i={}", r.iteration));
                    }
                }
            }
            bad.map_or(Ok(()), Err)
        },
    ];
    let total = checks.len();
    let failures: Vec<String> = checks.into_iter().filter_map(Result::err).collect();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{}/{total} properties hold {failures:?}",
            total - failures.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let commands: &[&[&str]] = &[
        &["sweep", "--qubits", "2..13", "--schedule", "standard"],
        &["sweep", "--qubits", "2..13", "--schedule", "hybrid-eq11-12"],
        &[
            "sweep",
            "--qubits",
            "2..13",
            "--schedule",
            "hybrid-eq11-12",
            "--format",
            "json",
        ],
        &[
            "run",
            "--qubits",
            "5",
            "--schedule",
            "standard",
            "--iterations",
            "4",
        ],
        &[
            "run",
            "--qubits",
            "5",
            "--schedule",
            "hybrid-eq11-12",
            "--iterations",
            "3",
            "--format",
            "json",
        ],
        &["angles", "--qubits", "2..12"],
        &["recurrence", "--qubits", "20", "--iterations", "7"],
        &[
            "recurrence",
            "--qubits",
            "10",
            "--iterations",
            "26",
            "--format",
            "json",
        ],
        &[
            "curve",
            "--qubits",
            "13",
            "--iterations",
            "140",
            "--with-model",
        ],
    ];
    let exe = env!("CARGO_BIN_EXE_grover-phase");
    let mut differing = Vec::new();
    for args in commands {
        let a = Command::new(exe).args(*args).output();
        let b = Command::new(exe).args(*args).output();
        match (a, b) {
            (Ok(a), Ok(b))
                if a.status.success() && a.stdout == b.stdout && a.status == b.status => {}
            _ => differing.push(args.join(" ")),
        }
    }
    Outcome::new(
        differing.is_empty(),
        format!(
            "{}/{} commands byte-identical {differing:?}",
            commands.len() - differing.len(),
            commands.len()
        ),
    )
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "standard row, exact",
            Some(Duration::from_secs(10)),
            criterion_1,
        ),
        ("n=5 standard probability", None, criterion_2),
        (
            "closed-form angles vs search",
            Some(Duration::from_secs(60)),
            criterion_3,
        ),
        ("amplitude recurrence", None, criterion_4),
        ("n=5 modified headline", None, criterion_5),
        ("modified row report", None, criterion_6),
        (
            "property suite",
            Some(Duration::from_secs(120)),
            criterion_7,
        ),
        ("determinism", None, criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let out = timed(limit, f);
        failed += !out.pass as usize;
        println!(
            "{} criterion {} ({name}): {}",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
