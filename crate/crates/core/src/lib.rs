//! Dense statevector simulation of Grover search with standard and
//! phase-rotated diffusion operators, plus the classical models and sweep
//! harness used to check it.
//!
//! Qubit `j` is bit `j` of a basis index (LSB = qubit 0). All probabilities
//! are computed exactly from amplitudes.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod grover;
pub mod statevector;

pub use error::{Error, Result};
