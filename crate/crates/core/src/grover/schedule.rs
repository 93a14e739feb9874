//! Phase-angle schedules for the rotated diffusion operator.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which diffusion operator each iteration uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScheduleKind {
    /// Plain `c^{n-1}Z` every iteration.
    #[serde(rename = "standard")]
    Standard,
    /// `c^{n-1}(R_y(t) Z)` with the fixed angle [`fixed_phase_angle`].
    #[serde(rename = "fixed-eq9")]
    FixedPhase,
    /// `c^{n-1}(R_y(t_i) Z)` with the iteration-dependent [`adaptive_phase_angle`].
    #[serde(rename = "adaptive-eq10")]
    AdaptivePhase,
    /// `R_y(t) Z` on the first iteration, then the Hadamard-rotation gate
    /// (see [`HybridGate`]) on every later one; `t` is the fixed angle.
    #[serde(rename = "hybrid-eq11-12")]
    Hybrid,
}

impl ScheduleKind {
    pub const ALL: [ScheduleKind; 4] = [
        ScheduleKind::Standard,
        ScheduleKind::FixedPhase,
        ScheduleKind::AdaptivePhase,
        ScheduleKind::Hybrid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScheduleKind::Standard => "standard",
            ScheduleKind::FixedPhase => "fixed-eq9",
            ScheduleKind::AdaptivePhase => "adaptive-eq10",
            ScheduleKind::Hybrid => "hybrid-eq11-12",
        }
    }
}

/// How the per-iteration correction `1 + (2i-1)/(2i+1)` combines with the
/// fixed angle. The printed formula adds a dimensionless ratio to an angle;
/// the multiplicative reading scales the angle by it instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdaptiveInterpretation {
    #[serde(rename = "additive")]
    AdditiveLiteral,
    #[serde(rename = "multiplicative")]
    Multiplicative,
}

impl AdaptiveInterpretation {
    pub fn as_str(self) -> &'static str {
        match self {
            AdaptiveInterpretation::AdditiveLiteral => "additive",
            AdaptiveInterpretation::Multiplicative => "multiplicative",
        }
    }
}

/// Matrix order of the Hadamard-rotation gate used by the hybrid schedule
/// after its first iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HybridGate {
    /// `R_y(t) * H`, the same notation-to-matrix order as `R_y(t) * Z`.
    #[serde(rename = "ry-h")]
    RyH,
    /// `H * R_y(t)`.
    #[serde(rename = "h-ry")]
    HRy,
}

impl HybridGate {
    pub fn as_str(self) -> &'static str {
        match self {
            HybridGate::RyH => "ry-h",
            HybridGate::HRy => "h-ry",
        }
    }
}

macro_rules! str_enum {
    ($ty:ty, $what:literal, [$($v:expr),+]) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                [$($v),+]
                    .into_iter()
                    .find(|v| v.as_str() == s)
                    .ok_or_else(|| {
                        let names: Vec<_> = [$($v.as_str()),+].into();
                        Error::invalid(format!(
                            "unknown {} '{}' (expected one of: {})",
                            $what, s, names.join(", ")
                        ))
                    })
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

str_enum!(
    ScheduleKind,
    "schedule",
    [
        ScheduleKind::Standard,
        ScheduleKind::FixedPhase,
        ScheduleKind::AdaptivePhase,
        ScheduleKind::Hybrid
    ]
);
str_enum!(
    AdaptiveInterpretation,
    "adaptive interpretation",
    [
        AdaptiveInterpretation::AdditiveLiteral,
        AdaptiveInterpretation::Multiplicative
    ]
);
str_enum!(
    HybridGate,
    "hybrid gate order",
    [HybridGate::RyH, HybridGate::HRy]
);

/// The gate placed under `n-1` controls inside the diffusion sandwich.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerGate {
    /// `R_y(t) * Z`
    RyZ,
    /// `H * R_y(t)`
    HRy,
    /// `R_y(t) * H`
    RyH,
}

/// A complete description of the diffusion used at every iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseSchedule {
    pub kind: ScheduleKind,
    /// Only consulted by [`ScheduleKind::AdaptivePhase`].
    pub interpretation: AdaptiveInterpretation,
    /// Only consulted by [`ScheduleKind::Hybrid`].
    pub hybrid_gate: HybridGate,
    /// Target qubit of the controlled gate; `None` means qubit `n-1`.
    pub rotation_target: Option<usize>,
    /// Replaces the computed angle for every non-standard iteration.
    pub angle_override: Option<f64>,
}

impl Default for PhaseSchedule {
    fn default() -> Self {
        Self::new(ScheduleKind::Standard)
    }
}

impl PhaseSchedule {
    pub fn new(kind: ScheduleKind) -> Self {
        Self {
            kind,
            interpretation: AdaptiveInterpretation::Multiplicative,
            hybrid_gate: HybridGate::RyH,
            rotation_target: None,
            angle_override: None,
        }
    }

    pub fn standard() -> Self {
        Self::new(ScheduleKind::Standard)
    }

    pub fn fixed() -> Self {
        Self::new(ScheduleKind::FixedPhase)
    }

    pub fn adaptive(interpretation: AdaptiveInterpretation) -> Self {
        Self {
            interpretation,
            ..Self::new(ScheduleKind::AdaptivePhase)
        }
    }

    pub fn hybrid() -> Self {
        Self::new(ScheduleKind::Hybrid)
    }

    pub fn with_hybrid_gate(mut self, gate: HybridGate) -> Self {
        self.hybrid_gate = gate;
        self
    }

    pub fn with_rotation_target(mut self, target: usize) -> Self {
        self.rotation_target = Some(target);
        self
    }

    pub fn with_angle(mut self, theta: f64) -> Self {
        self.angle_override = Some(theta);
        self
    }

    pub fn rotation_target_for(&self, n_qubits: usize) -> usize {
        self.rotation_target.unwrap_or(n_qubits.saturating_sub(1))
    }

    pub fn is_modified(&self) -> bool {
        self.kind != ScheduleKind::Standard
    }

    /// Angle and inner gate for iteration `i` (1-based). `None` for the gate
    /// means the plain `c^{n-1}Z`.
    pub fn step(&self, n_qubits: usize, i: usize) -> Result<(f64, Option<InnerGate>)> {
        let angle = |computed: f64| self.angle_override.unwrap_or(computed);
        Ok(match self.kind {
            ScheduleKind::Standard => (0.0, None),
            ScheduleKind::FixedPhase => (angle(fixed_phase_angle(n_qubits)?), Some(InnerGate::RyZ)),
            ScheduleKind::AdaptivePhase => (
                angle(adaptive_phase_angle(n_qubits, i, self.interpretation)?),
                Some(InnerGate::RyZ),
            ),
            ScheduleKind::Hybrid => {
                let gate = match (i, self.hybrid_gate) {
                    (1, _) => InnerGate::RyZ,
                    (_, HybridGate::RyH) => InnerGate::RyH,
                    (_, HybridGate::HRy) => InnerGate::HRy,
                };
                (angle(fixed_phase_angle(n_qubits)?), Some(gate))
            }
        })
    }
}

/// `2 atan((2^{n-2} - 1) / 2^{n-2}) = 2 atan(1 - 4/N)`: the angle maximising
/// the marked-state probability after one rotated-diffusion step. Zero at
/// `n = 2`, increasing towards `pi/2`.
pub fn fixed_phase_angle(n_qubits: usize) -> Result<f64> {
    if !(2..=1023).contains(&n_qubits) {
        return Err(Error::invalid(format!(
            "phase angle needs 2 <= n <= 1023 qubits, got {n_qubits}"
        )));
    }
    let quarter = 2f64.powi(n_qubits as i32 - 2);
    let angle = 2.0 * ((quarter - 1.0) / quarter).atan();
    debug_assert!(angle <= PI / 2.0);
    Ok(angle)
}

/// Fixed angle corrected by the amplitude-growth term `1 + (2i-1)/(2i+1)`.
pub fn adaptive_phase_angle(
    n_qubits: usize,
    iteration: usize,
    interpretation: AdaptiveInterpretation,
) -> Result<f64> {
    if iteration == 0 {
        return Err(Error::invalid("iteration index is 1-based"));
    }
    let base = fixed_phase_angle(n_qubits)?;
    let i = iteration as f64;
    let growth = 1.0 + (2.0 * i - 1.0) / (2.0 * i + 1.0);
    Ok(match interpretation {
        AdaptiveInterpretation::AdditiveLiteral => base + growth,
        AdaptiveInterpretation::Multiplicative => base * growth,
    })
}
