//! The generalized amplifier family `U(β₀, ε)`.
//!
//! Every member acts on a real vector `a` as
//!
//! ```text
//! (U a)₀ = ε₁ (a₀ + η(a))
//! (U a)ᵢ = ε₂ (aᵢ + c(a))        i ≠ 0
//! ```
//!
//! where `η` and `c` are the linear functionals
//!
//! ```text
//! η(a) = (-1 + ε₄β₀) a₀ + ε₄ε₃γ₀ Σ_{k≠0} a_k
//! c(a) = γ₀ a₀ - (1 + ε₃β₀)/(N-1) Σ_{k≠0} a_k
//! ```
//!
//! and `β₀ = ε₃ cos θ`, `√(N-1) γ₀ = sin θ`. The pair `(β₀, γ₀)` therefore
//! lies on the ellipse `(N-1)γ₀² + β₀² = 1` for every `θ`, which is exactly
//! the unitarity condition of the family. Both functionals only need the
//! target amplitude and the tail sum, so [`AmplifierSpec::apply`] is `O(N)`.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::signs::{Sign, SignChoice};
use crate::state::StateVector;
use crate::tol;

/// One member of the family: dimension, angle and signs, plus the
/// coefficients derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplifierSpec {
    n: usize,
    theta: f64,
    signs: SignChoice,
    beta0: f64,
    gamma0: f64,
    gamma_tail: f64,
    eta0: f64,
    eta_tail: f64,
}

impl AmplifierSpec {
    /// Builds the member at angle `theta` (reduced to `[0, 2π)`).
    pub fn new(n: usize, theta: f64, signs: SignChoice) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if !theta.is_finite() {
            return Err(Error::NonFinite("theta"));
        }
        let theta = reduce_angle(theta);
        let eps3 = signs.eps3.value();
        let eps4 = signs.eps4.value();
        let tail = (n - 1) as f64;

        let beta0 = eps3 * theta.cos();
        let gamma0 = theta.sin() / tail.sqrt();
        Ok(Self {
            n,
            theta,
            signs,
            beta0,
            gamma0,
            gamma_tail: -(1.0 + eps3 * beta0) / tail,
            eta0: -1.0 + eps4 * beta0,
            eta_tail: eps4 * eps3 * gamma0,
        })
    }

    /// Builds the member with the given `β₀` and sign of `γ₀`.
    ///
    /// The angle is recovered from `cos θ = ε₃β₀` and
    /// `sin θ = sign_gamma0 · √(1 - β₀²)`.
    pub fn from_beta0(n: usize, beta0: f64, sign_gamma0: Sign, signs: SignChoice) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if !beta0.is_finite() {
            return Err(Error::NonFinite("beta0"));
        }
        if beta0.abs() > 1.0 {
            return Err(Error::ParameterOutOfRange {
                name: "beta0",
                value: beta0,
                range: "[-1, 1]",
            });
        }
        let cos = signs.eps3.value() * beta0;
        let sin = sign_gamma0.value() * (1.0 - beta0 * beta0).max(0.0).sqrt();
        Self::new(n, sin.atan2(cos), signs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn signs(&self) -> SignChoice {
        self.signs
    }

    pub fn beta0(&self) -> f64 {
        self.beta0
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    /// `γᵢ` for `i ≠ 0`; all tail coefficients of `c` are equal.
    pub fn gamma_tail(&self) -> f64 {
        self.gamma_tail
    }

    pub fn eta0(&self) -> f64 {
        self.eta0
    }

    /// `ηᵢ` for `i ≠ 0`, equal to `ε₄ε₃γ₀`.
    pub fn eta_tail(&self) -> f64 {
        self.eta_tail
    }

    /// `(N-1)γ₀² + β₀² - 1`; zero up to rounding.
    pub fn ellipse_residual(&self) -> f64 {
        (self.n - 1) as f64 * self.gamma0 * self.gamma0 + self.beta0 * self.beta0 - 1.0
    }

    /// `η(a)`, the shift applied to the target amplitude.
    pub fn target_shift(&self, a: &StateVector) -> Result<f64> {
        a.check_dim(self.n)?;
        Ok(self.target_shift_from(a.target(), a.tail_sum()))
    }

    /// `c(a)`, the shift applied to every tail amplitude.
    pub fn tail_shift(&self, a: &StateVector) -> Result<f64> {
        a.check_dim(self.n)?;
        Ok(self.tail_shift_from(a.target(), a.tail_sum()))
    }

    fn target_shift_from(&self, a0: f64, tail_sum: f64) -> f64 {
        self.eta0 * a0 + self.eta_tail * tail_sum
    }

    fn tail_shift_from(&self, a0: f64, tail_sum: f64) -> f64 {
        self.gamma0 * a0 + self.gamma_tail * tail_sum
    }

    pub fn apply(&self, a: &StateVector) -> Result<StateVector> {
        a.check_dim(self.n)?;
        let a0 = a.target();
        let tail_sum = a.tail_sum();
        let eta = self.target_shift_from(a0, tail_sum);
        let c = self.tail_shift_from(a0, tail_sum);
        let eps1 = self.signs.eps1.value();
        let eps2 = self.signs.eps2.value();

        let mut out = Vec::with_capacity(self.n);
        out.push(eps1 * (a0 + eta));
        out.extend(a.amplitudes()[1..].iter().map(|ai| eps2 * (ai + c)));
        Ok(StateVector::from_raw_parts(out))
    }

    /// `(U a)₀` without materializing the rest of the output.
    pub fn target_amplitude(&self, a: &StateVector) -> Result<f64> {
        a.check_dim(self.n)?;
        let a0 = a.target();
        Ok(self.signs.eps1.value() * (a0 + self.target_shift_from(a0, a.tail_sum())))
    }

    /// `|‖U a‖² - ‖a‖²|`.
    pub fn isometry_residual(&self, a: &StateVector) -> Result<f64> {
        let out = self.apply(a)?;
        Ok((out.norm_sqr() - a.norm_sqr()).abs())
    }

    pub fn dense_matrix(&self) -> Result<DMatrix<f64>> {
        self.dense_matrix_with_cap(tol::DEFAULT_DENSE_CAP)
    }

    /// Row 0 is `ε₁(e₀ + η)`; row `i ≠ 0` is `ε₂(eᵢ + γ)`.
    pub fn dense_matrix_with_cap(&self, cap: usize) -> Result<DMatrix<f64>> {
        if self.n > cap {
            return Err(Error::DenseCapExceeded { n: self.n, cap });
        }
        let eps1 = self.signs.eps1.value();
        let eps2 = self.signs.eps2.value();
        Ok(DMatrix::from_fn(self.n, self.n, |i, j| match (i, j) {
            (0, 0) => eps1 * (1.0 + self.eta0),
            (0, _) => eps1 * self.eta_tail,
            (_, 0) => eps2 * self.gamma0,
            _ => eps2 * (f64::from(u8::from(i == j)) + self.gamma_tail),
        }))
    }

    /// `ε₂(1 - 2|u⟩⟨u|)` when `ε₂ = ε₁ε₄ε₃`.
    pub fn reflection_form(&self) -> Result<ReflectionForm, ConditionViolated> {
        if !self.signs.admits_reflection() {
            return Err(ConditionViolated { signs: self.signs });
        }
        let half = self.theta / 2.0;
        let tail = half.cos() / ((self.n - 1) as f64).sqrt();
        let mut u = vec![tail; self.n];
        u[0] = -half.sin();
        Ok(ReflectionForm {
            overall_sign: self.signs.eps2,
            u: StateVector::from_raw_parts(u),
        })
    }
}

/// Reduces an angle to `[0, 2π)`.
pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Angle at which `cos θ = (N-2)/N`, the member that equals Grover's operator.
pub fn grover_theta(n: usize) -> f64 {
    let n = n as f64;
    (2.0 * (n - 1.0).sqrt() / n).atan2((n - 2.0) / n)
}

/// `U = overall_sign · (1 - 2|u⟩⟨u|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionForm {
    pub overall_sign: Sign,
    pub u: StateVector,
}

impl ReflectionForm {
    pub fn apply(&self, a: &StateVector) -> Result<StateVector> {
        let proj = self.u.dot(a)?;
        let s = self.overall_sign.value();
        Ok(StateVector::from_raw_parts(
            a.amplitudes()
                .iter()
                .zip(self.u.amplitudes())
                .map(|(ai, ui)| s * (ai - 2.0 * proj * ui))
                .collect(),
        ))
    }

    pub fn dense(&self) -> DMatrix<f64> {
        let n = self.u.dim();
        let u = self.u.amplitudes();
        let s = self.overall_sign.value();
        DMatrix::from_fn(n, n, |i, j| {
            s * (f64::from(u8::from(i == j)) - 2.0 * u[i] * u[j])
        })
    }
}

/// The sign choice has `ε₂ ≠ ε₁ε₄ε₃`, so no reflection form exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("signs ({signs}) violate eps2 = eps1*eps4*eps3; no reflection form")]
pub struct ConditionViolated {
    pub signs: SignChoice,
}

/// Largest absolute entry of `a - b`.
pub fn max_entry_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Largest absolute entry of `mᵀm - I`.
pub fn orthogonality_defect(m: &DMatrix<f64>) -> f64 {
    let gram = m.transpose() * m;
    max_entry_diff(&gram, &DMatrix::identity(m.nrows(), m.ncols()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signs::Sign::{Minus, Plus};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn grover4() -> AmplifierSpec {
        AmplifierSpec::new(4, PI / 3.0, SignChoice::grover()).unwrap()
    }

    fn uniform4() -> StateVector {
        StateVector::uniform(4).unwrap()
    }

    fn lincomb_signs(idx: usize) -> SignChoice {
        SignChoice::all().nth(idx).unwrap()
    }

    #[test]
    fn grover_member_coefficients() {
        let spec = grover4();
        assert_abs_diff_eq!(spec.beta0(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(spec.gamma0(), 0.5, epsilon = 1e-15);
        // (N-2)/N and 2/N
        assert_abs_diff_eq!(spec.beta0(), 2.0 / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(spec.gamma0(), 2.0 / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn ellipse_endpoint_at_zero() {
        let spec = AmplifierSpec::new(2, 0.0, SignChoice::default()).unwrap();
        assert_eq!(spec.beta0(), 1.0);
        assert_eq!(spec.gamma0(), 0.0);
    }

    #[test]
    fn quarter_turn_n16() {
        let spec = AmplifierSpec::new(16, PI / 2.0, SignChoice::grover()).unwrap();
        assert_abs_diff_eq!(spec.beta0(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(spec.gamma0(), 1.0 / 15f64.sqrt(), epsilon = 1e-15);
        assert!(spec.ellipse_residual().abs() < 1e-12);
    }

    #[test]
    fn rejects_small_dimension() {
        assert_eq!(
            AmplifierSpec::new(1, 0.3, SignChoice::default()).unwrap_err(),
            Error::DimensionTooSmall(1)
        );
        assert!(AmplifierSpec::new(4, f64::NAN, SignChoice::default()).is_err());
    }

    #[test]
    fn angle_is_reduced() {
        let spec = AmplifierSpec::new(5, -PI / 2.0, SignChoice::default()).unwrap();
        assert_abs_diff_eq!(spec.theta(), 1.5 * PI, epsilon = 1e-15);
        assert_eq!(reduce_angle(-1e-300), 0.0);
    }

    #[test]
    fn from_beta0_round_trips_grover() {
        let a = AmplifierSpec::from_beta0(4, 0.5, Plus, SignChoice::grover()).unwrap();
        let b = grover4();
        assert_abs_diff_eq!(a.theta(), b.theta(), epsilon = 1e-15);
        assert_abs_diff_eq!(a.beta0(), b.beta0(), epsilon = 1e-15);
        assert_abs_diff_eq!(a.gamma0(), b.gamma0(), epsilon = 1e-15);
    }

    #[test]
    fn from_beta0_rejects_out_of_range() {
        let err = AmplifierSpec::from_beta0(8, 1.5, Plus, SignChoice::default()).unwrap_err();
        assert!(matches!(err, Error::ParameterOutOfRange { name: "beta0", .. }));
    }

    #[test]
    fn from_beta0_minus_one_endpoint() {
        let spec = AmplifierSpec::from_beta0(8, -1.0, Plus, SignChoice::default()).unwrap();
        assert!(spec.gamma0().abs() < 1e-16);
        assert_abs_diff_eq!(spec.theta(), PI, epsilon = 1e-15);
        let flipped = SignChoice { eps3: Minus, ..SignChoice::default() };
        let spec = AmplifierSpec::from_beta0(8, -1.0, Plus, flipped).unwrap();
        assert_eq!(spec.theta(), 0.0);
        assert_eq!(spec.beta0(), -1.0);
    }

    #[test]
    fn from_beta0_sign_selects_half_plane() {
        let up = AmplifierSpec::from_beta0(8, 0.2, Plus, SignChoice::default()).unwrap();
        let down = AmplifierSpec::from_beta0(8, 0.2, Minus, SignChoice::default()).unwrap();
        assert!(up.gamma0() > 0.0 && down.gamma0() < 0.0);
        assert_abs_diff_eq!(up.theta() + down.theta(), TAU, epsilon = 1e-14);
    }

    #[test]
    fn target_shift_grover_uniform() {
        // (-1 + 0.5)(0.5) + (0.5)(1.5)
        assert_abs_diff_eq!(grover4().target_shift(&uniform4()).unwrap(), 0.5, epsilon = 1e-14);
    }

    #[test]
    fn target_shift_vanishes_on_flip_free_branch() {
        let signs = SignChoice { eps3: Minus, eps4: Minus, ..SignChoice::default() };
        let spec = AmplifierSpec::new(5, 0.0, signs).unwrap();
        let a = StateVector::normalize(vec![0.3, -0.1, 0.7, 0.2, 0.5]).unwrap();
        assert_eq!(spec.target_shift(&a).unwrap(), 0.0);
    }

    #[test]
    fn target_shift_on_basis_vector() {
        for signs in SignChoice::all() {
            let spec = AmplifierSpec::new(6, 1.1, signs).unwrap();
            let e0 = StateVector::basis(6, 0).unwrap();
            assert_abs_diff_eq!(
                spec.target_shift(&e0).unwrap(),
                -1.0 + signs.eps4.value() * spec.beta0(),
                epsilon = 1e-15
            );
            assert_abs_diff_eq!(spec.tail_shift(&e0).unwrap(), spec.gamma0(), epsilon = 1e-15);
        }
    }

    #[test]
    fn tail_shift_grover_uniform() {
        // 0.5 * 0.5 - (1.5 / 3) * 1.5
        assert_abs_diff_eq!(grover4().tail_shift(&uniform4()).unwrap(), -0.5, epsilon = 1e-14);
    }

    #[test]
    fn tail_shift_vanishes_at_half_turn() {
        let spec = AmplifierSpec::new(7, PI, SignChoice::default()).unwrap();
        let a = StateVector::normalize(vec![0.1, 0.9, -0.3, 0.4, 0.0, 0.2, -0.5]).unwrap();
        assert!(spec.tail_shift(&a).unwrap().abs() < 1e-15);
    }

    #[test]
    fn functionals_check_dimension() {
        let spec = grover4();
        let a = StateVector::uniform(5).unwrap();
        assert!(matches!(spec.target_shift(&a), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(spec.tail_shift(&a), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(spec.apply(&a), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(spec.isometry_residual(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn grover_member_sends_uniform_to_target() {
        let out = grover4().apply(&uniform4()).unwrap();
        let expected = StateVector::basis(4, 0).unwrap();
        assert!(out.max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn identity_member() {
        // θ = π gives c ≡ 0; ε₃ε₄ = -1 gives η ≡ 0.
        let signs = SignChoice { eps4: Minus, ..SignChoice::default() };
        let spec = AmplifierSpec::new(3, PI, signs).unwrap();
        let a = StateVector::new(vec![0.6, 0.0, 0.8]).unwrap();
        assert!(spec.apply(&a).unwrap().max_abs_diff(&a).unwrap() < 1e-15);
        assert!(max_entry_diff(&spec.dense_matrix().unwrap(), &DMatrix::identity(3, 3)) < 1e-15);
    }

    #[test]
    fn flip_member() {
        let spec = AmplifierSpec::new(3, PI, SignChoice::default()).unwrap();
        let a = StateVector::new(vec![0.6, 0.8, 0.0]).unwrap();
        let out = spec.apply(&a).unwrap();
        let expected = StateVector::new(vec![-0.6, 0.8, 0.0]).unwrap();
        assert!(out.max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn dense_cap_is_enforced() {
        let spec = AmplifierSpec::new(10, 0.4, SignChoice::default()).unwrap();
        assert_eq!(
            spec.dense_matrix_with_cap(8).unwrap_err(),
            Error::DenseCapExceeded { n: 10, cap: 8 }
        );
        let big = AmplifierSpec::new(5000, 0.4, SignChoice::default()).unwrap();
        assert!(matches!(big.dense_matrix(), Err(Error::DenseCapExceeded { cap: 4096, .. })));
    }

    #[test]
    fn dense_is_orthogonal_for_every_sign_choice() {
        for signs in SignChoice::all() {
            let m = AmplifierSpec::new(9, 2.2, signs).unwrap().dense_matrix().unwrap();
            assert!(orthogonality_defect(&m) < 1e-10, "{signs}");
        }
    }

    #[test]
    fn grover_signs_have_no_reflection_form() {
        assert!(grover4().reflection_form().is_err());
    }

    #[test]
    fn half_turn_reflection_is_target_flip() {
        let spec = AmplifierSpec::new(5, PI, SignChoice::default()).unwrap();
        let form = spec.reflection_form().unwrap();
        assert_eq!(form.overall_sign, Plus);
        let minus_e0 = StateVector::new(vec![-1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(form.u.max_abs_diff(&minus_e0).unwrap() < 1e-15);
        let mut z = DMatrix::identity(5, 5);
        z[(0, 0)] = -1.0;
        assert!(max_entry_diff(&form.dense(), &z) < 1e-15);
    }

    #[test]
    fn reflection_matches_dense_third_turn() {
        for signs in SignChoice::all().filter(|s| s.admits_reflection()) {
            let spec = AmplifierSpec::new(4, PI / 3.0, signs).unwrap();
            let form = spec.reflection_form().unwrap();
            assert!(max_entry_diff(&spec.dense_matrix().unwrap(), &form.dense()) <= 1e-12);
            assert!((form.u.norm() - 1.0).abs() < 1e-12);
            let tail = &form.u.amplitudes()[1..];
            assert!(tail.iter().all(|x| *x == tail[0]));
        }
    }

    #[test]
    fn violating_signs_give_asymmetric_matrix() {
        for signs in SignChoice::all() {
            let m = AmplifierSpec::new(6, 0.9, signs).unwrap().dense_matrix().unwrap();
            let symmetric = max_entry_diff(&m, &m.transpose()) < 1e-12;
            assert_eq!(symmetric, signs.admits_reflection(), "{signs}");
        }
    }

    #[test]
    fn basis_residuals() {
        let e0 = StateVector::basis(4, 0).unwrap();
        assert!(grover4().isometry_residual(&e0).unwrap() <= 1e-12);
        let spec = AmplifierSpec::new(4, PI, SignChoice::default()).unwrap();
        let e1 = StateVector::basis(4, 1).unwrap();
        assert!(spec.isometry_residual(&e1).unwrap() <= 1e-12);
    }

    #[test]
    fn grover_theta_matches_coefficients() {
        for n in [2usize, 3, 4, 17, 256] {
            let spec = AmplifierSpec::new(n, grover_theta(n), SignChoice::grover()).unwrap();
            let nf = n as f64;
            assert_abs_diff_eq!(spec.beta0(), (nf - 2.0) / nf, epsilon = 1e-15);
            assert_abs_diff_eq!(spec.gamma0(), 2.0 / nf, epsilon = 1e-15);
        }
    }

    fn vector_strategy(n: usize) -> impl Strategy<Value = StateVector> {
        prop::collection::vec(-1.0f64..1.0, n)
            .prop_filter("non-zero", |v| v.iter().any(|x| x.abs() > 1e-3))
            .prop_map(|v| StateVector::normalize(v).unwrap())
    }

    fn case_strategy() -> impl Strategy<Value = (AmplifierSpec, StateVector, StateVector)> {
        (2usize..48, 0.0..TAU, 0usize..32).prop_flat_map(|(n, theta, s)| {
            let spec = AmplifierSpec::new(n, theta, lincomb_signs(s)).unwrap();
            (Just(spec), vector_strategy(n), vector_strategy(n))
        })
    }

    proptest! {
        #[test]
        fn preserves_norm((spec, a, _) in case_strategy()) {
            prop_assert!(spec.isometry_residual(&a).unwrap() <= 1e-10);
        }

        #[test]
        fn ellipse_holds(n in 2usize..100_000, theta in -10.0f64..10.0, s in 0usize..32) {
            let spec = AmplifierSpec::new(n, theta, lincomb_signs(s)).unwrap();
            prop_assert!(spec.ellipse_residual().abs() <= 1e-12);
            prop_assert!(spec.beta0().abs() <= 1.0);
            prop_assert!((0.0..TAU).contains(&spec.theta()));
            let again = AmplifierSpec::new(n, spec.theta(), spec.signs()).unwrap();
            prop_assert_eq!(again, spec);
        }

        #[test]
        fn dense_agrees_with_matrix_free((spec, a, _) in case_strategy()) {
            let m = spec.dense_matrix().unwrap();
            let dense = &m * nalgebra::DVector::from_column_slice(a.amplitudes());
            let free = spec.apply(&a).unwrap();
            for (x, y) in dense.iter().zip(free.amplitudes()) {
                prop_assert!((x - y).abs() <= 1e-12);
            }
        }

        #[test]
        fn linear((spec, a, b) in case_strategy(), alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
            let lhs = spec.apply(&a.combine(alpha, &b, beta).unwrap()).unwrap();
            let rhs = spec.apply(&a).unwrap().combine(alpha, &spec.apply(&b).unwrap(), beta).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs).unwrap() <= 1e-12);
        }

        #[test]
        fn reflection_is_involution(n in 2usize..40, theta in 0.0..TAU, s in 0usize..32) {
            let spec = AmplifierSpec::new(n, theta, lincomb_signs(s)).unwrap();
            match spec.reflection_form() {
                Ok(form) => {
                    let m = spec.dense_matrix().unwrap();
                    prop_assert!(max_entry_diff(&m, &form.dense()) <= 1e-12);
                    prop_assert!(max_entry_diff(&(&m * &m), &DMatrix::identity(n, n)) <= 1e-10);
                    prop_assert!((form.u.norm() - 1.0).abs() <= 1e-12);
                }
                Err(ConditionViolated { signs }) => prop_assert!(!signs.admits_reflection()),
            }
        }

        #[test]
        fn reflection_apply_matches_operator((spec, a, _) in case_strategy()) {
            if let Ok(form) = spec.reflection_form() {
                let lhs = form.apply(&a).unwrap();
                prop_assert!(lhs.max_abs_diff(&spec.apply(&a).unwrap()).unwrap() <= 1e-12);
            }
        }
    }
}
