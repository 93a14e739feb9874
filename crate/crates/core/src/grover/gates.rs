//! Rotation gates used inside the diffusion operator.
//!
//! Names follow the matrix product they return: `ry_z(t)` is `R_y(t) * Z`
//! (apply Z, then the rotation).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevector::OneQubitGate;

fn check_finite(theta: f64) -> Result<()> {
    if !theta.is_finite() {
        return Err(Error::invalid(format!(
            "rotation angle must be finite, got {theta}"
        )));
    }
    Ok(())
}

/// `R_y(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]`.
pub fn ry(theta: f64) -> Result<OneQubitGate> {
    check_finite(theta)?;
    let (s, c) = (theta / 2.0).sin_cos();
    Ok(OneQubitGate::real_unchecked(c, -s, s, c))
}

/// `R_y(t) * Z = [[cos t/2, sin t/2], [sin t/2, -cos t/2]]`.
///
/// At `t = 0` this is `Z`, so the controlled version reduces to the standard
/// diffusion. Determinant is always -1.
pub fn ry_z(theta: f64) -> Result<OneQubitGate> {
    check_finite(theta)?;
    let (s, c) = (theta / 2.0).sin_cos();
    Ok(OneQubitGate::real_unchecked(c, s, s, -c))
}

/// `H * R_y(t)`.
pub fn h_ry(theta: f64) -> Result<OneQubitGate> {
    Ok(OneQubitGate::hadamard() * ry(theta)?)
}

/// `R_y(t) * H`.
pub fn ry_h(theta: f64) -> Result<OneQubitGate> {
    Ok(ry(theta)? * OneQubitGate::hadamard())
}

/// Derivative of [`ry_z`] with respect to `t`. Not unitary.
pub(crate) fn ry_z_derivative(theta: f64) -> OneQubitGate {
    let (s, c) = (theta / 2.0).sin_cos();
    let (ds, dc) = (0.5 * c, -0.5 * s);
    OneQubitGate::from_rows_unchecked([
        [Complex64::new(dc, 0.0), Complex64::new(ds, 0.0)],
        [Complex64::new(ds, 0.0), Complex64::new(-dc, 0.0)],
    ])
}
