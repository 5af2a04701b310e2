//! Generalized Grover amplification.
//!
//! The crate implements the one-parameter family of real unitaries that
//! amplify the component of a vector along `|0⟩` at the expense of the
//! others, written as a target flip combined with a reflection. Grover's
//! iteration is one member of the family; choosing the member's angle
//! from the input vector gives the optimal amplifier, which for Grover's
//! uniform start reaches the target with probability 1 in a single step.
//!
//! - [`amplifier`]: the family `U(β₀, ε)`, its matrix and reflection form.
//! - [`grover`]: the flip, diffusion and Grover iteration.
//! - [`optimal`]: optimal angle, closed-form outputs and angle sweeps.
//! - [`search`]: relabeling involution and one-step marked-item search.

pub mod amplifier;
pub mod error;
pub mod grover;
mod numeric;
pub mod optimal;
pub mod search;
pub mod signs;
pub mod state;
pub mod tol;

pub use amplifier::{AmplifierSpec, ConditionViolated, ReflectionForm};
pub use error::{Error, Result};
pub use grover::{GroverOperator, GroverTrace, TraceRow};
pub use optimal::{AmplifyReport, SweepRow, ThetaSweep};
pub use search::{ComparisonReport, SearchOperator, SearchOutcome, SearchProblem};
pub use signs::{Sign, SignChoice};
pub use state::StateVector;
