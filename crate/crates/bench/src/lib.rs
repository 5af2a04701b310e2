//! Input fixtures shared by the benchmarks.

use gramp_core::StateVector;

/// Deterministic non-uniform unit vector of dimension `n`.
pub fn ramp_vector(n: usize) -> StateVector {
    let raw = (0..n).map(|i| 1.0 + (i % 7) as f64 * 0.25).collect();
    StateVector::normalize(raw).expect("ramp vector is non-zero")
}

/// Dimensions used across benchmark groups.
pub const DIMS: [usize; 4] = [64, 1024, 16_384, 262_144];
