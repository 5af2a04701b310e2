//! Numerical tolerances shared by constructors, tests and the verify suite.

/// Squared-norm slack accepted by [`StateVector::new`](crate::StateVector::new).
pub const NORMALIZATION: f64 = 1e-9;

/// Construction-time invariants (ellipse identity, unit reflection vector).
pub const CONSTRUCTION: f64 = 1e-12;

/// Residuals after applying an operator (norm preservation, U² = I).
pub const APPLIED: f64 = 1e-10;

/// Entrywise agreement between two constructions of the same matrix.
pub const DENSE_AGREEMENT: f64 = 1e-12;

/// A report counts as absolutely optimal when `p0 >= 1 - ABSOLUTE`.
pub const ABSOLUTE: f64 = 1e-9;

/// `|Σ_{k≠0} a_k|` at or below this is treated as zero by the optimizer.
pub const SUM_ZERO: f64 = 1e-14;

/// Default cap on the dimension for which dense matrices are built.
pub const DEFAULT_DENSE_CAP: usize = 4096;
