use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

use super::PartitionSpec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunsEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Monte-Carlo estimate of `AO(K_λ) / N!` as `E Π_j 1/L_j!`, where `L_j` are
/// the maximal same-part runs of a uniformly random vertex ordering.
///
/// Orderings come from a Fisher–Yates shuffle driven by SplitMix64 seeded
/// with `seed`, so the estimate is reproducible bit for bit.
pub fn random_runs_estimate(parts: &PartitionSpec, samples: u64, seed: u64) -> Result<RunsEstimate> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("need at least one vertex".into()));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let mut colours: Vec<u32> = parts
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| core::iter::repeat(i as u32).take(p))
        .collect();
    let longest = parts.parts()[0];
    let mut inv_fact = alloc::vec![1.0f64; longest + 1];
    for l in 1..=longest {
        inv_fact[l] = inv_fact[l - 1] / l as f64;
    }

    let mut rng = SplitMix64::seed_from_u64(seed);
    // Welford
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 1..=samples {
        colours.shuffle(&mut rng);
        let mut weight = 1.0;
        let mut run = 1;
        for w in colours.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                weight *= inv_fact[run];
                run = 1;
            }
        }
        weight *= inv_fact[run];
        let delta = weight - mean;
        mean += delta / i as f64;
        m2 += delta * (weight - mean);
    }
    let var = if samples > 1 { m2 / (samples - 1) as f64 } else { 0.0 };
    Ok(RunsEstimate {
        mean,
        std_error: libm::sqrt(var / samples as f64),
        samples,
    })
}
