//! Seeded, sharded Monte Carlo driver.
//!
//! Work is cut into fixed-size shards, each with its own ChaCha stream derived
//! from the master seed. Shard results are merged in shard order, so the
//! output does not depend on the number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{IrrepError, Result};

pub const SHARD_SIZE: usize = 4096;

/// Two-sided Hoeffding sample count for a mean of variables in `[-1, 1]`:
/// `N = ceil(2 ln(2/δ) / ε²)` gives `P(|mean − E| > ε) ≤ δ`.
pub fn hoeffding_shots(epsilon: f64, delta: f64) -> Result<usize> {
    validate_accuracy(epsilon, delta)?;
    Ok((2.0 * (2.0 / delta).ln() / (epsilon * epsilon)).ceil() as usize)
}

pub fn validate_accuracy(epsilon: f64, delta: f64) -> Result<()> {
    for (name, v) in [("epsilon", epsilon), ("delta", delta)] {
        if !(v > 0.0 && v < 1.0) {
            return Err(IrrepError::InvalidArgument(format!("{name} = {v} must lie in (0, 1)")));
        }
    }
    Ok(())
}

/// RNG for one shard of a seeded run.
pub fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

/// Runs `draw(rng, count)` over shards covering `total` samples and returns
/// the sum of the shard results.
pub fn sharded_sum<F>(total: usize, seed: u64, threads: usize, draw: F) -> Result<f64>
where
    F: Fn(&mut ChaCha8Rng, usize) -> f64 + Sync,
{
    let shards: Vec<(u64, usize)> = (0..total.div_ceil(SHARD_SIZE))
        .map(|s| (s as u64, SHARD_SIZE.min(total - s * SHARD_SIZE)))
        .collect();
    let run = |&(shard, count): &(u64, usize)| draw(&mut shard_rng(seed, shard), count);
    let partials: Vec<f64> = if threads <= 1 {
        shards.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| IrrepError::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| shards.par_iter().map(run).collect())
    };
    Ok(partials.into_iter().sum())
}
