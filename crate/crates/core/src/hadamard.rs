//! Shot-level simulation of the Hadamard test.
//!
//! The control qubit reads `0` with probability `(1 + Re⟨ψ|U|ψ⟩)/2`, or
//! `(1 + Im⟨ψ|U|ψ⟩)/2` when prepared in `(|0⟩ − i|1⟩)/√2`. Outcome counts are
//! drawn from that Bernoulli law directly.

use num_complex::Complex64;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};
use crate::linalg::{CVector, LinearOperator};
use crate::sampling::{hoeffding_shots, sharded_sum, validate_accuracy};

const NORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Real,
    Imaginary,
}

impl Part {
    pub fn of(self, z: Complex64) -> f64 {
        match self {
            Part::Real => z.re,
            Part::Imaginary => z.im,
        }
    }
}

impl std::str::FromStr for Part {
    type Err = IrrepError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" | "re" => Ok(Part::Real),
            "imaginary" | "imag" | "im" => Ok(Part::Imaginary),
            other => Err(IrrepError::InvalidArgument(format!("part must be real or imaginary, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShotPlan {
    pub epsilon: f64,
    pub delta: f64,
    pub shots: usize,
    pub part: Part,
}

impl ShotPlan {
    /// Plan with the Hoeffding shot count for accuracy `ε` at confidence `1 − δ`.
    pub fn new(epsilon: f64, delta: f64, part: Part) -> Result<Self> {
        Ok(ShotPlan {
            epsilon,
            delta,
            shots: hoeffding_shots(epsilon, delta)?,
            part,
        })
    }

    /// The same plan with more shots.
    pub fn with_shots(self, shots: usize) -> Result<Self> {
        validate_accuracy(self.epsilon, self.delta)?;
        let minimum = hoeffding_shots(self.epsilon, self.delta)?;
        if shots < minimum {
            return Err(IrrepError::InvalidArgument(format!(
                "{shots} shots is below the {minimum} required for epsilon={}, delta={}",
                self.epsilon, self.delta
            )));
        }
        Ok(ShotPlan { shots, ..self })
    }
}

/// Plan file: `{epsilon, delta, part, seed}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanSpec {
    pub epsilon: f64,
    pub delta: f64,
    pub part: Part,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HadamardEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub shots: usize,
    pub seed: u64,
}

/// Exact `⟨ψ|U|ψ⟩`.
pub fn overlap<U: LinearOperator + ?Sized>(u: &U, psi: &CVector) -> Result<Complex64> {
    if psi.len() != u.dim() {
        return Err(IrrepError::SizeMismatch { expected: u.dim(), found: psi.len() });
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(IrrepError::NotNormalized(norm));
    }
    Ok(psi.dotc(&u.apply(psi)))
}

/// Probability of reading the control qubit as `0`.
pub fn p_zero(overlap_part: f64) -> Result<f64> {
    if !(overlap_part.abs() <= 1.0 + NORM_TOLERANCE) {
        return Err(IrrepError::OutOfRange {
            what: "overlap part",
            value: overlap_part.round() as i64,
            range: "[-1, 1]".into(),
        });
    }
    Ok(((1.0 + overlap_part) / 2.0).clamp(0.0, 1.0))
}

/// Runs `plan.shots` simulated Hadamard tests and returns `2·(fraction of 0s) − 1`.
pub fn simulate_estimate<U: LinearOperator + ?Sized>(
    u: &U,
    psi: &CVector,
    plan: &ShotPlan,
    seed: u64,
    threads: usize,
) -> Result<HadamardEstimate> {
    validate_accuracy(plan.epsilon, plan.delta)?;
    if plan.shots == 0 {
        return Err(IrrepError::InvalidArgument("plan needs at least one shot".into()));
    }
    let p0 = p_zero(plan.part.of(overlap(u, psi)?))?;
    let zeros = sharded_sum(plan.shots, seed, threads, |rng, count| {
        Binomial::new(count as u64, p0).expect("p0 lies in [0, 1]").sample(rng) as f64
    })?;
    let fraction = zeros / plan.shots as f64;
    Ok(HadamardEstimate {
        estimate: 2.0 * fraction - 1.0,
        stderr: 2.0 * (fraction * (1.0 - fraction) / plan.shots as f64).sqrt(),
        shots: plan.shots,
        seed,
    })
}
