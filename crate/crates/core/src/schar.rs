//! Symmetric-group characters from Roichman's weights.
//!
//! `χ^λ(μ) = Σ_Λ W_μ(Λ)` over standard tableaux `Λ` of shape `λ`, with each
//! weight in `{-1, 0, 1}`. Averaging the weight over hook-walk samples gives
//! an unbiased estimate of the normalized character `χ^λ(μ) / d_λ`.

use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};
use crate::perm::CycleType;
use crate::sampling::{hoeffding_shots, sharded_sum};
use crate::tableaux::{enumerate_syt, hook_walk_sample, StandardTableau, YoungDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoichmanContext {
    mu: CycleType,
    /// `in_b[k]` is true when `k` is a partial sum of `μ`.
    in_b: Vec<bool>,
}

impl RoichmanContext {
    pub fn new(mu: CycleType) -> Self {
        let mut in_b = vec![false; mu.n() + 1];
        let mut acc = 0;
        for &part in mu.parts() {
            acc += part;
            in_b[acc] = true;
        }
        RoichmanContext { mu, in_b }
    }

    pub fn mu(&self) -> &CycleType {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    pub fn in_b(&self, k: usize) -> bool {
        self.in_b.get(k).copied().unwrap_or(false)
    }

    /// The partial sums `B(μ)` in increasing order.
    pub fn b_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&k| self.in_b[k]).collect()
    }
}

/// Local factor `f_μ(i, Λ)` for `1 ≤ i ≤ n−1`, `i ∉ B(μ)`.
pub fn roichman_f(ctx: &RoichmanContext, i: usize, t: &StandardTableau) -> Result<i8> {
    let n = ctx.n();
    if t.n() != n {
        return Err(IrrepError::SizeMismatch { expected: n, found: t.n() });
    }
    if i == 0 || i >= n || ctx.in_b(i) {
        return Err(IrrepError::OutOfRange {
            what: "Roichman index (must avoid the partial sums of mu)",
            value: i as i64,
            range: format!("1..={} minus {:?}", n.saturating_sub(1), ctx.b_set()),
        });
    }
    let row = |k: usize| t.position(k).0;
    if row(i + 1) > row(i) {
        return Ok(-1);
    }
    if i + 2 <= n && row(i + 2) > row(i + 1) && !ctx.in_b(i + 1) {
        return Ok(0);
    }
    Ok(1)
}

/// `W_μ(Λ)`: product of `f_μ(i, Λ)` over `i ∈ {1..n−1} \ B(μ)`.
pub fn roichman_weight(ctx: &RoichmanContext, t: &StandardTableau) -> Result<i8> {
    if t.n() != ctx.n() {
        return Err(IrrepError::SizeMismatch { expected: ctx.n(), found: t.n() });
    }
    let mut w = 1i8;
    for i in (1..ctx.n()).filter(|&i| !ctx.in_b(i)) {
        w *= roichman_f(ctx, i, t)?;
        if w == 0 {
            break;
        }
    }
    Ok(w)
}

/// Exact `χ^λ(μ)` by summing weights over all standard tableaux.
pub fn exact_character_roichman(shape: &YoungDiagram, mu: &CycleType) -> Result<i64> {
    check_sizes(shape, mu)?;
    let ctx = RoichmanContext::new(mu.clone());
    enumerate_syt(shape)?
        .iter()
        .map(|t| roichman_weight(&ctx, t).map(i64::from))
        .sum()
}

fn check_sizes(shape: &YoungDiagram, mu: &CycleType) -> Result<()> {
    if shape.n() != mu.n() {
        return Err(IrrepError::SizeMismatch { expected: shape.n(), found: mu.n() });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorReport {
    pub estimate: f64,
    pub shots: usize,
    pub epsilon: f64,
    pub delta: f64,
    pub seed: u64,
}

/// Estimates `χ^λ(μ) / d_λ` to within `ε` with probability at least `1 − δ`.
///
/// Sampling is sharded over `threads` workers; the result depends only on
/// `seed`.
pub fn estimate_normalized_character(
    shape: &YoungDiagram,
    mu: &CycleType,
    epsilon: f64,
    delta: f64,
    seed: u64,
    threads: usize,
) -> Result<EstimatorReport> {
    check_sizes(shape, mu)?;
    let shots = hoeffding_shots(epsilon, delta)?;
    let ctx = RoichmanContext::new(mu.clone());
    let total = sharded_sum(shots, seed, threads, |rng, count| {
        (0..count)
            .map(|_| {
                let t = hook_walk_sample(shape, rng);
                f64::from(roichman_weight(&ctx, &t).expect("sizes checked"))
            })
            .sum()
    })?;
    Ok(EstimatorReport {
        estimate: total / shots as f64,
        shots,
        epsilon,
        delta,
        seed,
    })
}
