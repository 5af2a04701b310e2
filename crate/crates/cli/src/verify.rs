//! Seeded randomized invariant suite behind `gramp verify`.
//!
//! Random unit vectors are standard-normal samples from a `ChaCha8Rng`
//! seeded with `--seed`, divided by their norm. Angles are uniform on
//! `[0, 2π)`; sign choices are uniform over all 32. Checks run in a fixed
//! order so the same seed always yields the same report.

use std::f64::consts::TAU;

use gramp_core::amplifier::max_entry_diff;
use gramp_core::grover::{corollary_equivalence_check, grover_apply};
use gramp_core::optimal::{amplify_optimal, closed_form_optimum, optimal_theta, theta_sweep};
use gramp_core::search::{one_step_search, SearchOperator};
use gramp_core::{tol, AmplifierSpec, Error, SearchProblem, SignChoice, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Angle resolution of the per-case brute-force sweep.
const SWEEP_POINTS: usize = 256;
const FD_STEP: f64 = 1e-6;
const FD_TOLERANCE: f64 = 1e-5;
/// Dimension above which dense checks are skipped.
const DENSE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn unit_vector(&mut self, n: usize) -> StateVector {
        loop {
            let raw: Vec<f64> = (0..n).map(|_| self.rng.sample(StandardNormal)).collect();
            if let Ok(v) = StateVector::normalize(raw) {
                return v;
            }
        }
    }

    pub fn theta(&mut self) -> f64 {
        self.rng.random_range(0.0..TAU)
    }

    pub fn signs(&mut self) -> SignChoice {
        let k = self.rng.random_range(0..32);
        SignChoice::all().nth(k).expect("32 sign choices")
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }
}

struct Check {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    max_error: f64,
    failed: bool,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, cases: 0, max_error: 0.0, failed: false }
    }

    fn record(&mut self, error: f64) {
        // NaN has no JSON encoding; report it as the largest finite error.
        let error = if error.is_nan() { f64::MAX } else { error };
        self.cases += 1;
        if error > self.tolerance {
            self.failed = true;
        }
        self.max_error = self.max_error.max(error);
    }

    fn record_bool(&mut self, ok: bool) {
        self.record(if ok { 0.0 } else { 1.0 });
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            cases: self.cases,
            max_error: self.max_error,
            tolerance: self.tolerance,
            passed: !self.failed,
        }
    }
}

pub fn run_suite(n: usize, seed: u64, cases: usize) -> Result<VerifyReport, Error> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut rng = Sampler::new(seed);
    let mut checks = Vec::new();
    let dense = n <= DENSE_LIMIT;

    let mut isometry = Check::new("isometry_residual", tol::APPLIED);
    let mut ellipse = Check::new("ellipse", tol::CONSTRUCTION);
    let mut linearity = Check::new("linearity", tol::DENSE_AGREEMENT);
    let mut agreement = Check::new("dense_vs_matrix_free", tol::DENSE_AGREEMENT);
    for _ in 0..cases {
        let spec = AmplifierSpec::new(n, rng.theta(), rng.signs())?;
        let a = rng.unit_vector(n);
        let b = rng.unit_vector(n);
        isometry.record(spec.isometry_residual(&a)?);
        ellipse.record(spec.ellipse_residual().abs());

        let (alpha, beta) = (rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        let lhs = spec.apply(&a.combine(alpha, &b, beta)?)?;
        let rhs = spec.apply(&a)?.combine(alpha, &spec.apply(&b)?, beta)?;
        linearity.record(lhs.max_abs_diff(&rhs)?);

        if dense {
            let m = spec.dense_matrix()?;
            let via_dense: Vec<f64> = (0..n)
                .map(|i| (0..n).map(|j| m[(i, j)] * a.get(j)).sum())
                .collect();
            agreement.record(spec.apply(&a)?.max_abs_diff(&StateVector::unnormalized(via_dense)?)?);
        }
    }
    checks.extend([isometry, ellipse, linearity, agreement].map(Check::finish));

    let mut reflection = Check::new("reflection_form", tol::DENSE_AGREEMENT);
    let mut involution = Check::new("reflection_involution", tol::APPLIED);
    let mut violated = Check::new("reflection_condition", 0.0);
    for _ in 0..cases {
        let spec = AmplifierSpec::new(n, rng.theta(), rng.signs())?;
        match spec.reflection_form() {
            Ok(form) => {
                violated.record_bool(spec.signs().admits_reflection());
                let a = rng.unit_vector(n);
                let twice = spec.apply(&spec.apply(&a)?)?;
                involution.record(twice.max_abs_diff(&a)?);
                if dense {
                    reflection.record(max_entry_diff(&spec.dense_matrix()?, &form.dense()));
                } else {
                    reflection.record(form.apply(&a)?.max_abs_diff(&spec.apply(&a)?)?);
                }
            }
            Err(_) => violated.record_bool(!spec.signs().admits_reflection()),
        }
    }
    checks.extend([reflection, involution, violated].map(Check::finish));

    let mut closed_form = Check::new("optimal_closed_form", tol::DENSE_AGREEMENT);
    let mut optimality = Check::new("sweep_never_beats_optimum", tol::ABSOLUTE);
    let mut stationarity = Check::new("stationarity", FD_TOLERANCE);
    let mut amplifies = Check::new("amplifies_target", tol::CONSTRUCTION);
    for _ in 0..cases {
        let a = rng.unit_vector(n);
        let signs = rng.signs();
        let (out, report) = match amplify_optimal(&a, signs) {
            Ok(r) => r,
            Err(Error::SumZero) => continue,
            Err(e) => return Err(e),
        };
        closed_form.record(out.max_abs_diff(&closed_form_optimum(&a, signs)?)?);
        let excess = theta_sweep(&a, rng.signs(), SWEEP_POINTS)?.max_abs_amplitude() - report.post_amplitude0;
        optimality.record(excess.max(0.0));
        amplifies.record((a.target().abs() - report.post_amplitude0).max(0.0));

        let theta = optimal_theta(&a)?;
        let f = |t: f64| AmplifierSpec::new(n, t, signs)?.target_amplitude(&a);
        stationarity.record(((f(theta + FD_STEP)? - f(theta - FD_STEP)?) / (2.0 * FD_STEP)).abs());
    }
    checks.extend([closed_form, optimality, stationarity, amplifies].map(Check::finish));

    let mut grover_norm = Check::new("grover_norm", tol::APPLIED);
    for _ in 0..cases {
        let a = rng.unit_vector(n);
        grover_norm.record((grover_apply(&a).norm_sqr() - 1.0).abs());
    }
    checks.push(grover_norm.finish());

    if n <= tol::DEFAULT_DENSE_CAP.min(DENSE_LIMIT) {
        let mut corollary = Check::new("grover_embedding", tol::DENSE_AGREEMENT);
        corollary.record(corollary_equivalence_check(n)?);
        checks.push(corollary.finish());
    }

    let mut relabel = Check::new("relabel_involution", 0.0);
    let mut search_norm = Check::new("search_operator_norm", tol::APPLIED);
    let mut one_step = Check::new("one_step_search", tol::ABSOLUTE);
    for _ in 0..cases {
        let problem = SearchProblem::new(n, rng.index(n))?;
        let a = rng.unit_vector(n);
        relabel.record(problem.relabel_apply(&problem.relabel_apply(&a)?)?.max_abs_diff(&a)?);
        let op = SearchOperator::optimal(problem, rng.signs())?;
        search_norm.record((op.apply(&a)?.norm_sqr() - 1.0).abs());
        let found = one_step_search(&problem)?;
        if found.found_index == problem.marked() {
            one_step.record((1.0 - found.amplitude).abs());
        } else {
            one_step.record(1.0);
        }
    }
    checks.extend([relabel, search_norm, one_step].map(Check::finish));

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { n, seed, cases, passed, checks })
}
