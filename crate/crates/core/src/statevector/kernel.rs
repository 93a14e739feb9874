//! Raw amplitude-buffer kernels.
//!
//! These operate on plain slices so they can also be pushed through
//! non-normalized buffers (derivative states, basis columns). Bit `j` of a
//! basis index is qubit `j` (LSB = qubit 0).

use num_complex::Complex64;

use super::gate::OneQubitGate;

/// Applies `gate` to `target` on every index pair `(x, x | 2^target)`.
pub fn apply_pairs(amps: &mut [Complex64], target: usize, gate: &OneQubitGate) {
    let stride = 1usize << target;
    debug_assert!(amps.len().is_power_of_two() && stride < amps.len());
    let [[m00, m01], [m10, m11]] = *gate.matrix();

    for block in amps.chunks_exact_mut(stride << 1) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            let (x0, x1) = (*a, *b);
            *a = m00 * x0 + m01 * x1;
            *b = m10 * x0 + m11 * x1;
        }
    }
}

/// Controlled variant of [`apply_pairs`]: only pairs with every bit of
/// `control_mask` set are touched. `control_mask` must not contain the target.
pub fn apply_controlled_pairs(
    amps: &mut [Complex64],
    target: usize,
    control_mask: usize,
    gate: &OneQubitGate,
) {
    if control_mask == 0 {
        apply_pairs(amps, target, gate);
        return;
    }
    let stride = 1usize << target;
    debug_assert_eq!(control_mask & stride, 0);
    let [[m00, m01], [m10, m11]] = *gate.matrix();
    let dim = amps.len();

    // Walk only indices that already satisfy the control mask with the target
    // bit clear: enumerate subsets of the free bits.
    let free = !(control_mask | stride) & (dim - 1);
    let mut sub = 0usize;
    loop {
        let i0 = sub | control_mask;
        let i1 = i0 | stride;
        let (x0, x1) = (amps[i0], amps[i1]);
        amps[i0] = m00 * x0 + m01 * x1;
        amps[i1] = m10 * x0 + m11 * x1;
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
}

/// Applies `gate` to every qubit in turn (the tensor power `gate^{(x)n}`).
pub fn apply_all(amps: &mut [Complex64], n_qubits: usize, gate: &OneQubitGate) {
    for q in 0..n_qubits {
        apply_pairs(amps, q, gate);
    }
}

pub fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn controlled_enumerates_every_matching_pair() {
        // 4 qubits, control on qubit 1, target qubit 3: pairs (i, i|8) with bit1 set.
        let mut amps: Vec<Complex64> = (0..16).map(|i| c(i as f64)).collect();
        apply_controlled_pairs(&mut amps, 3, 0b0010, &OneQubitGate::pauli_x());
        for (i, a) in amps.iter().enumerate() {
            let expected = if i & 0b0010 != 0 { i ^ 8 } else { i };
            assert_eq!(*a, c(expected as f64), "index {i}");
        }
    }

    #[test]
    fn all_but_target_controls_touch_one_pair() {
        let mut amps: Vec<Complex64> = (0..8).map(|i| c(i as f64)).collect();
        apply_controlled_pairs(&mut amps, 0, 0b110, &OneQubitGate::pauli_x());
        let got: Vec<f64> = amps.iter().map(|z| z.re).collect();
        assert_eq!(got, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 7.0, 6.0]);
    }
}
