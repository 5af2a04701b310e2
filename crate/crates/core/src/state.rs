//! Real amplitude vectors.
//!
//! A [`StateVector`] built with [`StateVector::new`] is a unit vector of
//! dimension at least 2. Operators also need to act on arbitrary vectors
//! (linear combinations, intermediate products), so
//! [`StateVector::unnormalized`] skips the norm check but keeps the
//! dimension check.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;
use crate::tol;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

/// On-disk layout: `{"n": <int>, "amplitudes": [<float>...]}`.
#[derive(Serialize, Deserialize)]
struct RawState {
    n: usize,
    amplitudes: Vec<f64>,
}

impl TryFrom<RawState> for StateVector {
    type Error = Error;

    fn try_from(raw: RawState) -> Result<Self> {
        if raw.n != raw.amplitudes.len() {
            return Err(Error::LengthMismatch {
                declared: raw.n,
                actual: raw.amplitudes.len(),
            });
        }
        StateVector::new(raw.amplitudes)
    }
}

impl From<StateVector> for RawState {
    fn from(v: StateVector) -> Self {
        RawState {
            n: v.amplitudes.len(),
            amplitudes: v.amplitudes,
        }
    }
}

impl StateVector {
    /// Unit vector; the squared norm must be within [`tol::NORMALIZATION`] of 1.
    pub fn new(amplitudes: Vec<f64>) -> Result<Self> {
        let v = Self::unnormalized(amplitudes)?;
        let norm_sqr = v.norm_sqr();
        if (norm_sqr - 1.0).abs() > tol::NORMALIZATION {
            return Err(Error::NotNormalized {
                norm_sqr,
                tolerance: tol::NORMALIZATION,
            });
        }
        Ok(v)
    }

    /// Any finite vector of dimension at least 2.
    pub fn unnormalized(amplitudes: Vec<f64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::DimensionTooSmall(amplitudes.len()));
        }
        if amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite("amplitudes"));
        }
        Ok(Self { amplitudes })
    }

    /// Scales `amplitudes` to unit norm.
    pub fn normalize(amplitudes: Vec<f64>) -> Result<Self> {
        Self::unnormalized(amplitudes)?.renormalized()
    }

    /// Basis vector `|k⟩`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: k + 1,
            });
        }
        let mut amplitudes = vec![0.0; n];
        amplitudes[k] = 1.0;
        Self::unnormalized(amplitudes)
    }

    /// The uniform superposition `N^{-1/2}(1, …, 1)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        Self::unnormalized(vec![1.0 / (n as f64).sqrt(); n])
    }

    /// `a0|0⟩ + b Σ_{i≠0} |i⟩` with `b` chosen non-negative so the vector has unit norm.
    pub fn uniform_tail(n: usize, a0: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if !(-1.0..=1.0).contains(&a0) {
            return Err(Error::ParameterOutOfRange {
                name: "a0",
                value: a0,
                range: "[-1, 1]",
            });
        }
        let b = ((1.0 - a0 * a0) / (n - 1) as f64).sqrt();
        let mut amplitudes = vec![b; n];
        amplitudes[0] = a0;
        Self::unnormalized(amplitudes)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<f64> {
        self.amplitudes
    }

    pub fn get(&self, i: usize) -> f64 {
        self.amplitudes[i]
    }

    pub fn target(&self) -> f64 {
        self.amplitudes[0]
    }

    /// `Σ_{k≠0} a_k`.
    pub fn tail_sum(&self) -> f64 {
        compensated_sum(self.amplitudes[1..].iter().copied())
    }

    pub fn norm_sqr(&self) -> f64 {
        compensated_sum(self.amplitudes.iter().map(|a| a * a))
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn dot(&self, other: &StateVector) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok(compensated_sum(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a * b),
        ))
    }

    pub fn renormalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok(Self {
            amplitudes: self.amplitudes.iter().map(|a| a / norm).collect(),
        })
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: f64, other: &StateVector, beta: f64) -> Result<Self> {
        self.check_dim(other.dim())?;
        Self::unnormalized(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| alpha * a + beta * b)
                .collect(),
        )
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Index of the largest squared amplitude; ties go to the lowest index.
    pub fn argmax_probability(&self) -> usize {
        let mut best = 0;
        for (i, a) in self.amplitudes.iter().enumerate().skip(1) {
            if a * a > self.amplitudes[best] * self.amplitudes[best] {
                best = i;
            }
        }
        best
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn from_raw_parts(amplitudes: Vec<f64>) -> Self {
        debug_assert!(amplitudes.len() >= 2);
        Self { amplitudes }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

impl AsRef<[f64]> for StateVector {
    fn as_ref(&self) -> &[f64] {
        &self.amplitudes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_unnormalized_input() {
        let err = StateVector::new(vec![0.9, 0.0]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        assert!(StateVector::unnormalized(vec![0.9, 0.0]).is_ok());
    }

    #[test]
    fn rejects_dimension_below_two() {
        assert_eq!(
            StateVector::new(vec![1.0]).unwrap_err(),
            Error::DimensionTooSmall(1)
        );
        assert_eq!(StateVector::uniform(1).unwrap_err(), Error::DimensionTooSmall(1));
    }

    #[test]
    fn json_length_mismatch_is_structural() {
        let err = StateVector::from_json(r#"{"n": 3, "amplitudes": [0.6, 0.8]}"#).unwrap_err();
        assert!(err.to_string().contains("declares n = 3"), "{err}");
    }

    #[test]
    fn json_norm_point_nine_is_rejected() {
        let err = StateVector::from_json(r#"{"n": 2, "amplitudes": [0.9, 0.0]}"#).unwrap_err();
        assert!(err.to_string().contains("not normalized"), "{err}");
    }

    #[test]
    fn json_uses_shared_field_names() {
        let v = StateVector::new(vec![0.6, 0.8]).unwrap();
        assert_eq!(v.to_json().unwrap(), r#"{"n":2,"amplitudes":[0.6,0.8]}"#);
    }

    #[test]
    fn uniform_four_round_trips_bit_exactly() {
        let v = StateVector::uniform(4).unwrap();
        let back = StateVector::from_json(&v.to_json().unwrap()).unwrap();
        for (a, b) in v.amplitudes().iter().zip(back.amplitudes()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn argmax_prefers_lowest_index_on_ties() {
        let v = StateVector::uniform(8).unwrap();
        assert_eq!(v.argmax_probability(), 0);
        let w = StateVector::new(vec![0.0, -0.6, 0.8, 0.0]).unwrap();
        assert_eq!(w.argmax_probability(), 2);
    }

    #[test]
    fn uniform_tail_is_unit() {
        let v = StateVector::uniform_tail(10, 0.3).unwrap();
        assert!((v.norm_sqr() - 1.0).abs() < 1e-15);
        assert!(StateVector::uniform_tail(10, 1.2).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip_is_bit_exact(raw in prop::collection::vec(-1.0f64..1.0, 2..40)) {
            prop_assume!(raw.iter().any(|a| *a != 0.0));
            let v = StateVector::normalize(raw).unwrap();
            let back = StateVector::from_json(&v.to_json().unwrap()).unwrap();
            for (a, b) in v.amplitudes().iter().zip(back.amplitudes()) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }
}
