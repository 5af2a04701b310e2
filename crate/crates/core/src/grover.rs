//! Textbook Grover iteration with the target fixed at index 0.
//!
//! `Z = 1 - 2|0⟩⟨0|` flips the target, `D = -1 + 2|v⟩⟨v|` reflects about
//! the uniform superposition `|v⟩`, and one iteration is `U_G = D Z`:
//!
//! ```text
//! a₀ ↦ (N-2)/N a₀ + 2/N Σ_{k≠0} a_k
//! aᵢ ↦ -aᵢ + 2/N (-a₀ + Σ_{k≠0} a_k)
//! ```

use std::fmt::Write as _;

use nalgebra::DMatrix;

use crate::amplifier::{max_entry_diff, AmplifierSpec};
use crate::error::{Error, Result};
use crate::numeric::compensated_sum;
use crate::signs::{Sign, SignChoice};
use crate::state::StateVector;
use crate::tol;

pub const TRACE_HEADER: &str = "step,amplitude0,probability0";

/// `Z a`: negates component 0.
pub fn flip_apply(a: &StateVector) -> StateVector {
    let mut out = a.amplitudes().to_vec();
    out[0] = -out[0];
    StateVector::from_raw_parts(out)
}

/// `D a = -a + 2⟨v|a⟩ v`, componentwise `-aᵢ + (2/N) Σⱼ aⱼ`.
pub fn diffusion_apply(a: &StateVector) -> StateVector {
    let n = a.dim() as f64;
    let shift = 2.0 * compensated_sum(a.amplitudes().iter().copied()) / n;
    StateVector::from_raw_parts(a.amplitudes().iter().map(|x| shift - x).collect())
}

/// One Grover iteration `D Z a`.
pub fn grover_apply(a: &StateVector) -> StateVector {
    diffusion_apply(&flip_apply(a))
}

/// Dense `Z`, `D` and their product, for checking the matrix-free routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroverOperator {
    n: usize,
}

impl GroverOperator {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.n > cap {
            return Err(Error::DenseCapExceeded { n: self.n, cap });
        }
        Ok(())
    }

    pub fn flip(&self) -> DMatrix<f64> {
        let mut z = DMatrix::identity(self.n, self.n);
        z[(0, 0)] = -1.0;
        z
    }

    /// `-1 + 2|v⟩⟨v|` with `|v⟩ = N^{-1/2}(1, …, 1)`.
    pub fn diffusion(&self) -> DMatrix<f64> {
        let v = nalgebra::DVector::from_element(self.n, 1.0 / (self.n as f64).sqrt());
        let projector = &v * v.transpose();
        projector * 2.0 - DMatrix::identity(self.n, self.n)
    }

    pub fn dense(&self) -> Result<DMatrix<f64>> {
        self.dense_with_cap(tol::DEFAULT_DENSE_CAP)
    }

    pub fn dense_with_cap(&self, cap: usize) -> Result<DMatrix<f64>> {
        self.check_cap(cap)?;
        Ok(self.diffusion() * self.flip())
    }
}

/// Max entrywise deviation between Grover's `D Z` and the family member with
/// `β₀ = (N-2)/N`, `γ₀ > 0` and the Grover sign choice.
pub fn corollary_equivalence_check(n: usize) -> Result<f64> {
    let nf = n as f64;
    let spec = AmplifierSpec::from_beta0(n, (nf - 2.0) / nf, Sign::Plus, SignChoice::grover())?;
    let family = spec.dense_matrix()?;
    let grover = GroverOperator::new(n)?.dense()?;
    Ok(max_entry_diff(&family, &grover))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub step: usize,
    /// `|a₀|` after `step` iterations.
    pub amplitude0: f64,
    pub probability0: f64,
}

/// Target amplitude after each of `0..=steps` iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverTrace {
    pub rows: Vec<TraceRow>,
}

impl GroverTrace {
    /// First local maximum of the target probability among steps `>= 1`.
    ///
    /// The iteration is periodic, so a long window can contain later
    /// revivals; the first crest is the usual optimal iteration count.
    /// Rises smaller than `1e-12` count as flat.
    pub fn peak(&self) -> Option<TraceRow> {
        let rows = self.rows.get(1..)?;
        rows.windows(2)
            .find(|w| w[1].probability0 <= w[0].probability0 + 1e-12)
            .map(|w| w[0])
            .or_else(|| rows.last().copied())
    }

    /// First step `>= 1` whose target probability exceeds `threshold`.
    pub fn first_step_above(&self, threshold: f64) -> Option<usize> {
        self.rows
            .iter()
            .skip(1)
            .find(|r| r.probability0 > threshold)
            .map(|r| r.step)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(TRACE_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{},{:?},{:?}", r.step, r.amplitude0, r.probability0);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(TRACE_HEADER) {
            return Err(Error::Io(format!("trace CSV must start with `{TRACE_HEADER}`")));
        }
        let rows = lines
            .filter(|l| !l.is_empty())
            .map(|line| {
                let bad = || Error::Io(format!("malformed trace row `{line}`"));
                let mut fields = line.split(',');
                let step = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
                let amplitude0 = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
                let probability0 = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
                if fields.next().is_some() {
                    return Err(bad());
                }
                Ok(TraceRow { step, amplitude0, probability0 })
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }
}

/// Applies [`grover_apply`] `steps` times, recording the target after each step.
pub fn grover_iterate(a: &StateVector, steps: usize) -> GroverTrace {
    iterate_with(a, steps, 0, grover_apply)
}

pub(crate) fn iterate_with(
    a: &StateVector,
    steps: usize,
    target: usize,
    mut step: impl FnMut(&StateVector) -> StateVector,
) -> GroverTrace {
    let row = |step, v: &StateVector| {
        let x = v.get(target);
        TraceRow { step, amplitude0: x.abs(), probability0: x * x }
    };
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(row(0, a));
    let mut state = a.clone();
    for k in 1..=steps {
        state = step(&state);
        rows.push(row(k, &state));
    }
    GroverTrace { rows }
}
