use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed-form success probability `sin^2((2i+1) k theta0)` with
/// `theta0 = asin(sqrt(M/N))` and `k = 1` (standard) or `1 + delta_theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuccessModel {
    pub theta0: f64,
    /// Angle compression; the default `sqrt(2) - 1` shortens the period by
    /// a factor of about `sqrt(2)`.
    pub delta_theta: f64,
}

pub const DEFAULT_DELTA_THETA: f64 = std::f64::consts::SQRT_2 - 1.0;

impl SuccessModel {
    pub fn new(n_qubits: usize, marked_count: usize) -> Result<Self> {
        if !(1..=62).contains(&n_qubits) {
            return Err(Error::invalid(format!("n = {n_qubits} outside 1..=62")));
        }
        let dim = 2f64.powi(n_qubits as i32);
        let m = marked_count as f64;
        if marked_count == 0 || m >= dim {
            return Err(Error::invalid("marked count must satisfy 1 <= M < N"));
        }
        Ok(Self {
            theta0: (m / dim).sqrt().asin(),
            delta_theta: DEFAULT_DELTA_THETA,
        })
    }

    pub fn with_delta_theta(mut self, delta_theta: f64) -> Self {
        self.delta_theta = delta_theta;
        self
    }

    pub fn standard(&self, iterations: usize) -> f64 {
        ((2 * iterations + 1) as f64 * self.theta0).sin().powi(2)
    }

    pub fn modified(&self, iterations: usize) -> f64 {
        ((2 * iterations + 1) as f64 * (1.0 + self.delta_theta) * self.theta0)
            .sin()
            .powi(2)
    }
}

/// Oracle-call estimate `(pi/4) sqrt(N/M) - 1/2`; the modified form divides
/// it by `sqrt(2)`.
pub fn theoretical_complexity(n_qubits: usize, marked_count: usize, modified: bool) -> Result<f64> {
    if marked_count == 0 {
        return Err(Error::invalid("marked count must be at least 1"));
    }
    let dim = 2f64.powi(n_qubits as i32);
    let standard = std::f64::consts::FRAC_PI_4 * (dim / marked_count as f64).sqrt() - 0.5;
    Ok(if modified {
        standard / std::f64::consts::SQRT_2
    } else {
        standard
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_examples() {
        let m = SuccessModel::new(5, 1).unwrap();
        assert!((m.standard(3) - 0.896_936_535_835_266).abs() < 1e-14);
        assert!((m.standard(0) - 1.0 / 32.0).abs() < 1e-16);
        let m = SuccessModel::new(2, 1).unwrap();
        assert!((m.theta0 - std::f64::consts::FRAC_PI_6).abs() < 1e-15);
        assert!((m.standard(1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn modified_reduces_to_standard() {
        let m = SuccessModel::new(7, 1).unwrap().with_delta_theta(0.0);
        for i in 0..20 {
            assert_eq!(m.modified(i), m.standard(i));
        }
        // With compression the i = 0 value is sin^2(sqrt2 * theta0), not M/N.
        let m = SuccessModel::new(9, 3).unwrap();
        assert!((m.standard(0) - 3.0 / 512.0).abs() < 1e-15);
        assert!((m.modified(0) - 0.011_695_825_948_462_042).abs() < 1e-15);
    }

    #[test]
    fn complexity_examples() {
        // (pi/4) sqrt(8192) - 1/2 = 70.586...
        let s = theoretical_complexity(13, 1, false).unwrap();
        assert!((s - 70.586_127_010_533_86).abs() < 1e-12);
        for n in 2..20 {
            let r = theoretical_complexity(n, 1, true).unwrap()
                / theoretical_complexity(n, 1, false).unwrap();
            assert!((r - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        }
        // M = N/4 -> (pi/4) * 2 - 1/2
        let s = theoretical_complexity(6, 16, false).unwrap();
        assert!((s - (std::f64::consts::FRAC_PI_2 - 0.5)).abs() < 1e-15);
        assert!(theoretical_complexity(6, 0, false).is_err());
    }

    #[test]
    fn model_validation() {
        assert!(SuccessModel::new(3, 0).is_err());
        assert!(SuccessModel::new(3, 8).is_err());
        assert!(SuccessModel::new(0, 1).is_err());
    }
}
