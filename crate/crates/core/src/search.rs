//! One-step search for a single marked item.
//!
//! The relabeling `V` swaps the marked basis state with `|0⟩`. Grover's
//! uniform start is invariant under `V`, and its tail is uniform, so the
//! optimal family member `U` for it reaches probability 1. Conjugating,
//! `U_OPT = V U V` moves all amplitude onto the marked state in one step.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::amplifier::AmplifierSpec;
use crate::error::{Error, Result};
use crate::grover::{grover_apply, iterate_with, GroverTrace};
use crate::optimal::optimal_theta;
use crate::signs::SignChoice;
use crate::state::StateVector;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchProblem {
    n: usize,
    marked: usize,
}

impl SearchProblem {
    pub fn new(n: usize, marked: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if marked >= n {
            return Err(Error::MarkedOutOfRange { marked, n });
        }
        Ok(Self { n, marked })
    }

    /// Evaluates `predicate` on every basis index; exactly one must match.
    pub fn from_predicate(n: usize, predicate: impl Fn(usize) -> bool) -> Result<Self> {
        let hits: Vec<usize> = (0..n).filter(|&i| predicate(i)).collect();
        match hits[..] {
            [marked] => Self::new(n, marked),
            _ => Err(Error::MarkedCount(hits.len())),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn is_marked(&self, i: usize) -> bool {
        i == self.marked
    }

    /// `V a`: exchanges components 0 and `marked`.
    pub fn relabel_apply(&self, a: &StateVector) -> Result<StateVector> {
        a.check_dim(self.n)?;
        let mut out = a.amplitudes().to_vec();
        out.swap(0, self.marked);
        Ok(StateVector::from_raw_parts(out))
    }

    /// Permutation matrix of `V`.
    pub fn relabel_dense(&self) -> Result<DMatrix<f64>> {
        if self.n > tol::DEFAULT_DENSE_CAP {
            return Err(Error::DenseCapExceeded { n: self.n, cap: tol::DEFAULT_DENSE_CAP });
        }
        let mut v = DMatrix::identity(self.n, self.n);
        v.swap_rows(0, self.marked);
        Ok(v)
    }
}

/// `V U V` for a family member `U`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOperator {
    problem: SearchProblem,
    spec: AmplifierSpec,
}

impl SearchOperator {
    pub fn new(problem: SearchProblem, spec: AmplifierSpec) -> Result<Self> {
        if spec.n() != problem.n() {
            return Err(Error::DimensionMismatch { expected: problem.n(), found: spec.n() });
        }
        Ok(Self { problem, spec })
    }

    /// Conjugates the optimal member for Grover's uniform start.
    pub fn optimal(problem: SearchProblem, signs: SignChoice) -> Result<Self> {
        let start = problem.relabel_apply(&StateVector::uniform(problem.n())?)?;
        let theta = optimal_theta(&start)?;
        Self::new(problem, AmplifierSpec::new(problem.n(), theta, signs)?)
    }

    pub fn spec(&self) -> &AmplifierSpec {
        &self.spec
    }

    pub fn apply(&self, a: &StateVector) -> Result<StateVector> {
        let relabeled = self.problem.relabel_apply(a)?;
        self.problem.relabel_apply(&self.spec.apply(&relabeled)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub found_index: usize,
    /// `|amplitude|` at `found_index`.
    pub amplitude: f64,
}

/// Applies `V U V` once to the uniform start and reads off the largest component.
pub fn one_step_search(problem: &SearchProblem) -> Result<SearchOutcome> {
    let op = SearchOperator::optimal(*problem, SignChoice::default())?;
    let out = op.apply(&StateVector::uniform(problem.n())?)?;
    let found_index = out.argmax_probability();
    Ok(SearchOutcome { found_index, amplitude: out.get(found_index).abs() })
}

/// `ceil(2√N)`.
pub fn default_max_steps(n: usize) -> usize {
    (2.0 * (n as f64).sqrt()).ceil() as usize
}

/// Grover iterations conjugated by `V`, tracking the marked component.
pub fn grover_trace(problem: &SearchProblem, steps: usize) -> Result<GroverTrace> {
    let start = StateVector::uniform(problem.n())?;
    Ok(iterate_with(&start, steps, problem.marked(), |s| {
        // The closure only sees vectors of the right dimension.
        let moved = problem.relabel_apply(s).expect("dimension checked");
        problem.relabel_apply(&grover_apply(&moved)).expect("dimension checked")
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n: usize,
    pub marked: usize,
    pub one_step_probability: f64,
    pub grover_peak_step: usize,
    pub grover_peak_probability: f64,
    pub grover_first_step_above_half: Option<usize>,
}

impl ComparisonReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn compare_with_grover(problem: &SearchProblem, max_steps: usize) -> Result<ComparisonReport> {
    if max_steps == 0 {
        return Err(Error::NoSteps(max_steps));
    }
    let one_step = one_step_search(problem)?;
    let trace = grover_trace(problem, max_steps)?;
    let peak = trace.peak().expect("at least one step");
    Ok(ComparisonReport {
        n: problem.n(),
        marked: problem.marked(),
        one_step_probability: one_step.amplitude * one_step.amplitude,
        grover_peak_step: peak.step,
        grover_peak_probability: peak.probability0,
        grover_first_step_above_half: trace.first_step_above(0.5),
    })
}
