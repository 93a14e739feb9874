//! Command-line experiment harness.
//!
//! Exit codes: 0 success, 2 usage or argument error, 3 register too large
//! (or zero qubits), 1 I/O or internal failure. Nothing is stochastic, so
//! identical command lines produce byte-identical output.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::grover::{AdaptiveInterpretation, HybridGate, PhaseSchedule, ScheduleKind};
pub use commands::{cmd_angles, cmd_curve, cmd_recurrence, cmd_run, cmd_sweep};
pub use output::{format_significant, Cell, OutputFormat, Table, TableDocument};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "grover-phase",
    version,
    about = "Grover search with phase-rotated diffusion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate one configuration and print the per-iteration trace.
    Run(RunArgs),
    /// Compare peak iterations of the standard and a modified schedule over a range of sizes.
    Sweep(SweepArgs),
    /// Closed-form optimal angles next to the numeric search.
    Angles(AnglesArgs),
    /// Amplitude recurrence next to the simulated amplitudes.
    Recurrence(RecurrenceArgs),
    /// Probability curve with the closed-form success models.
    Curve(CurveArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ScheduleArgs {
    #[arg(long, default_value = "standard", value_parser = parse_from_str::<ScheduleKind>)]
    pub schedule: ScheduleKind,
    #[arg(long = "eq10-interpretation", default_value = "multiplicative",
          value_parser = parse_from_str::<AdaptiveInterpretation>)]
    pub interpretation: AdaptiveInterpretation,
    /// Gate used by the hybrid schedule after the first iteration.
    #[arg(long = "hybrid-gate", default_value = "ry-h", value_parser = parse_from_str::<HybridGate>)]
    pub hybrid_gate: HybridGate,
    /// Target qubit of the controlled rotation (default: n-1).
    #[arg(long = "rotation-target")]
    pub rotation_target: Option<usize>,
    /// Override the computed rotation angle (radians).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
}

impl ScheduleArgs {
    pub fn schedule(&self) -> PhaseSchedule {
        PhaseSchedule {
            kind: self.schedule,
            interpretation: self.interpretation,
            hybrid_gate: self.hybrid_gate,
            rotation_target: self.rotation_target,
            angle_override: self.theta,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, default_value = "csv", value_parser = parse_from_str::<OutputFormat>)]
    pub format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// One `--marked` value. A bare `Vec` would make clap expect repeated flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedList(pub Vec<usize>);

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub qubits: usize,
    /// Comma-separated marked basis indices (default: 2^n - 1).
    #[arg(long, value_parser = |s: &str| parse_marked_list(s).map(MarkedList))]
    pub marked: Option<MarkedList>,
    #[arg(long)]
    pub iterations: Option<usize>,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Inclusive range `LO..HI` (or a single `N`).
    #[arg(long, value_parser = parse_qubit_range)]
    pub qubits: RangeInclusive<usize>,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AnglesArgs {
    #[arg(long, value_parser = parse_qubit_range)]
    pub qubits: RangeInclusive<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RecurrenceArgs {
    #[arg(long)]
    pub qubits: usize,
    #[arg(long)]
    pub iterations: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub qubits: usize,
    #[arg(long)]
    pub iterations: usize,
    /// Add the closed-form standard and compressed-angle model columns.
    #[arg(long = "with-model")]
    pub with_model: bool,
    #[arg(long = "delta-theta", allow_negative_numbers = true)]
    pub delta_theta: Option<f64>,
    #[command(flatten)]
    pub schedule: ScheduleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_from_str<T: std::str::FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `"LO..HI"` (inclusive) or a bare `"N"`.
pub fn parse_qubit_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a qubit count"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty qubit range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Comma-separated basis indices, at least one.
pub fn parse_marked_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let out = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .map_err(|_| format!("'{t}' is not a basis index"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err("marked list is empty".into());
    }
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => e.exit_code(),
            CliError::Io(_) => 1,
        }
    }
}

fn emit(
    table: &Table,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> std::result::Result<(), CliError> {
    match &output.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(output.format, &mut w)?;
            w.flush()?;
        }
        None => table.write(output.format, stdout)?,
    }
    Ok(())
}

/// Builds the table for a parsed command line.
pub fn build_table(command: &Command) -> Result<Table> {
    match command {
        Command::Run(a) => cmd_run(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Angles(a) => cmd_angles(a),
        Command::Recurrence(a) => cmd_recurrence(a),
        Command::Curve(a) => cmd_curve(a),
    }
}

fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Run(a) => &a.output,
        Command::Sweep(a) => &a.output,
        Command::Angles(a) => &a.output,
        Command::Recurrence(a) => &a.output,
        Command::Curve(a) => &a.output,
    }
}

/// Parses `args`, runs the command, writes to `stdout`/`stderr`, and returns
/// the process exit code.
pub fn run_with_io<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let result = build_table(&cli.command)
        .map_err(CliError::from)
        .and_then(|table| emit(&table, output_args(&cli.command), stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run_with_io(args, &mut out, &mut io::stderr());
    let _ = out.flush();
    code
}
