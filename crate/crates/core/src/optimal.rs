//! Choosing the family member that maximizes the target amplitude.
//!
//! For unit `a` with tail sum `s = Σ_{k≠0} a_k`, the member at angle `θ`
//! produces
//!
//! ```text
//! (U a)₀ = ε₁ε₄ε₃ (cos θ · a₀ + sin θ · s / √(N-1))
//! ```
//!
//! which is maximized in magnitude at `θ̄ = atan2(s, a₀√(N-1))`, giving
//! `|(U a)₀| = √(a₀² + s²/(N-1))` and `(U a)ᵢ = ε₂(aᵢ - s/(N-1))`. When the
//! tail is uniform this reaches 1.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::amplifier::{reduce_angle, AmplifierSpec};
use crate::error::{Error, Result};
use crate::signs::SignChoice;
use crate::state::StateVector;
use crate::tol;

pub const SWEEP_HEADER: &str = "theta,amplitude0,probability0";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplifyReport {
    pub theta_star: f64,
    pub pre_amplitude0: f64,
    /// Magnitude; the sign is visible in the returned vector.
    pub post_amplitude0: f64,
    pub post_probability0: f64,
    pub absolute: bool,
}

impl AmplifyReport {
    fn new(theta: f64, a: &StateVector, out: &StateVector) -> Self {
        let post = out.target().abs();
        let post_probability0 = post * post;
        Self {
            theta_star: theta,
            pre_amplitude0: a.target(),
            post_amplitude0: post,
            post_probability0,
            absolute: post_probability0 >= 1.0 - tol::ABSOLUTE,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// `atan2(Σ_{k≠0} a_k, a₀√(N-1))`, reduced to `[0, 2π)`.
pub fn optimal_theta(a: &StateVector) -> Result<f64> {
    let tail = (a.dim() - 1) as f64;
    let s = a.tail_sum();
    if s.abs() <= tol::SUM_ZERO * tail.sqrt() {
        return Err(Error::SumZero);
    }
    Ok(reduce_angle(s.atan2(a.target() * tail.sqrt())))
}

/// Applies the optimal member for `a` under `signs`.
pub fn amplify_optimal(a: &StateVector, signs: SignChoice) -> Result<(StateVector, AmplifyReport)> {
    let theta = optimal_theta(a)?;
    amplify_at(a, theta, signs)
}

/// Applies the member at a caller-chosen angle and reports on it.
pub fn amplify_at(a: &StateVector, theta: f64, signs: SignChoice) -> Result<(StateVector, AmplifyReport)> {
    let spec = AmplifierSpec::new(a.dim(), theta, signs)?;
    let out = spec.apply(a)?;
    let report = AmplifyReport::new(spec.theta(), a, &out);
    Ok((out, report))
}

/// The optimal output written directly from `a` without building an operator.
pub fn closed_form_optimum(a: &StateVector, signs: SignChoice) -> Result<StateVector> {
    let tail = (a.dim() - 1) as f64;
    let s = a.tail_sum();
    if s.abs() <= tol::SUM_ZERO * tail.sqrt() {
        return Err(Error::SumZero);
    }
    let mean = s / tail;
    let a0 = a.target();
    let eps2 = signs.eps2.value();
    let mut out = Vec::with_capacity(a.dim());
    out.push(signs.target_phase().value() * (a0 * a0 + s * mean).sqrt());
    out.extend(a.amplitudes()[1..].iter().map(|ai| eps2 * (ai - mean)));
    StateVector::unnormalized(out)
}

pub fn is_absolute_optimal(report: &AmplifyReport) -> bool {
    report.post_probability0 >= 1.0 - tol::ABSOLUTE
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    /// Signed `(U a)₀`.
    pub amplitude0: f64,
    pub probability0: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaSweep {
    pub rows: Vec<SweepRow>,
}

impl ThetaSweep {
    pub fn max_abs_amplitude(&self) -> f64 {
        self.rows.iter().map(|r| r.amplitude0.abs()).fold(0.0, f64::max)
    }

    /// Row with the largest `|amplitude0|`; ties go to the smaller angle.
    pub fn best(&self) -> Option<SweepRow> {
        self.rows
            .iter()
            .copied()
            .reduce(|best, r| if r.amplitude0.abs() > best.amplitude0.abs() { r } else { best })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(SWEEP_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{:?},{:?},{:?}", r.theta, r.amplitude0, r.probability0);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(SWEEP_HEADER) {
            return Err(Error::Io(format!("sweep CSV must start with `{SWEEP_HEADER}`")));
        }
        let rows = lines
            .filter(|l| !l.is_empty())
            .map(|line| {
                let fields: Vec<f64> = line
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| Error::Io(format!("malformed sweep row `{line}`")))?;
                match fields[..] {
                    [theta, amplitude0, probability0] => Ok(SweepRow { theta, amplitude0, probability0 }),
                    _ => Err(Error::Io(format!("malformed sweep row `{line}`"))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }
}

/// Target amplitude at `points` evenly spaced angles `2πk/points`.
pub fn theta_sweep(a: &StateVector, signs: SignChoice, points: usize) -> Result<ThetaSweep> {
    if points < 2 {
        return Err(Error::TooFewPoints(points));
    }
    let rows = (0..points)
        .map(|k| {
            let theta = TAU * k as f64 / points as f64;
            let amplitude0 = AmplifierSpec::new(a.dim(), theta, signs)?.target_amplitude(a)?;
            Ok(SweepRow { theta, amplitude0, probability0: amplitude0 * amplitude0 })
        })
        .collect::<Result<_>>()?;
    Ok(ThetaSweep { rows })
}
