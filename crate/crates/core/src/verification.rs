//! Independent checks of the block success probability: exhaustive
//! enumeration of Pauli patterns and seeded Monte Carlo sampling of the
//! depolarizing channel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;

use crate::combinatorics::compensated_sum;
use crate::efficiency::ErrorProbability;
use crate::error::{Error, Result};

/// Largest block length accepted by [`brute_force_success`] (`4^12` patterns).
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Samples per Monte Carlo shard; each shard owns one ChaCha8 stream.
pub const SHARD_SIZE: u64 = 1 << 16;

/// Generator identity recorded in every [`McReport`].
pub const GENERATOR: &str = "chacha8-stream-per-65536-sample-shard";

/// A single-qubit Pauli error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Enumerates all `4^n` per-qubit patterns of the depolarizing channel and
/// returns the total probability of those with at most `t` errors.
pub fn brute_force_success(n: usize, t: usize, p: ErrorProbability) -> Result<f64> {
    let third = p.value() / 3.0;
    brute_force_success_with_split(n, t, [third, third, third])
}

/// As [`brute_force_success`], with an arbitrary Pauli channel
/// `(p_x, p_y, p_z)`; the identity takes the remaining mass.
pub fn brute_force_success_with_split(n: usize, t: usize, split: [f64; 3]) -> Result<f64> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if split.iter().any(|q| q.is_nan() || *q < 0.0) || split.iter().sum::<f64>() > 1.0 + 1e-15 {
        return Err(Error::Domain(format!("invalid Pauli channel {split:?}")));
    }
    let identity = (1.0 - split.iter().sum::<f64>()).max(0.0);
    let outcomes = [identity, split[0], split[1], split[2]];

    let mut terms = Vec::with_capacity(1 << (2 * n));
    // Pattern index in base 4: digit 0 is the identity, 1..=3 are X, Y, Z.
    for pattern in 0u64..1u64 << (2 * n) {
        let mut prob = 1.0;
        let mut weight = 0;
        let mut rest = pattern;
        for _ in 0..n {
            let digit = (rest & 3) as usize;
            rest >>= 2;
            prob *= outcomes[digit];
            weight += usize::from(digit != 0);
        }
        if weight <= t {
            terms.push(prob);
        }
    }
    Ok(compensated_sum(terms))
}

/// Outcome of a Monte Carlo run.
#[derive(Debug, Clone, PartialEq)]
pub struct McReport {
    pub samples: u64,
    pub successes: u64,
    pub estimate: f64,
    /// `sqrt(P (1 - P) / samples)` at the estimate.
    pub std_error: f64,
    pub seed: u64,
    pub generator: &'static str,
}

/// Draws the error pattern of one block: the positions that err, each with a
/// uniformly chosen Pauli.
///
/// Gaps between erroneous qubits are geometric, which is the same law as an
/// independent Bernoulli(`p`) draw per qubit.
pub struct DepolarizingSampler {
    n: usize,
    gaps: Option<Geometric>,
}

impl DepolarizingSampler {
    pub fn new(n: usize, p: ErrorProbability) -> Self {
        let gaps = (p.value() > 0.0)
            .then(|| Geometric::new(p.value()).expect("probability lies in (0, 1]"));
        Self { n, gaps }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R, errors: &mut Vec<(usize, Pauli)>) {
        errors.clear();
        let Some(gaps) = &self.gaps else { return };
        let mut position = 0u64;
        loop {
            position += gaps.sample(rng);
            if position >= self.n as u64 {
                return;
            }
            let pauli = match rng.random_range(0..3u8) {
                0 => Pauli::X,
                1 => Pauli::Y,
                _ => Pauli::Z,
            };
            errors.push((position as usize, pauli));
            position += 1;
        }
    }
}

fn shard_successes(
    n: usize,
    t: usize,
    p: ErrorProbability,
    seed: u64,
    shard: u64,
    count: u64,
) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    let sampler = DepolarizingSampler::new(n, p);
    let mut errors = Vec::new();
    (0..count)
        .filter(|_| {
            sampler.sample(&mut rng, &mut errors);
            errors.len() <= t
        })
        .count() as u64
}

/// Monte Carlo estimate of the probability that at most `t` of `n` qubits err.
///
/// Samples are split into shards of [`SHARD_SIZE`]; shard `i` draws from
/// stream `i` of a ChaCha8 generator keyed by `seed`, so the result depends
/// only on the arguments and not on the thread count.
pub fn mc_success(
    n: usize,
    t: usize,
    p: ErrorProbability,
    samples: u64,
    seed: u64,
) -> Result<McReport> {
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let shards = samples.div_ceil(SHARD_SIZE);
    let successes: u64 = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let count = SHARD_SIZE.min(samples - shard * SHARD_SIZE);
            shard_successes(n, t, p, seed, shard, count)
        })
        .sum();
    let estimate = successes as f64 / samples as f64;
    Ok(McReport {
        samples,
        successes,
        estimate,
        std_error: (estimate * (1.0 - estimate) / samples as f64).sqrt(),
        seed,
        generator: GENERATOR,
    })
}
