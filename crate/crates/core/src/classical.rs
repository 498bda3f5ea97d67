//! The classical random walk on the line with a fair coin.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distribution::Distribution;
use crate::error::{Error, Result};

/// Exact path counts `(x, C(n, (x + n)/2))` for `x = −n, −n + 2, …, n`.
/// The counts sum to `2ⁿ`.
pub fn crw_exact_counts(n: u32) -> Vec<(i64, BigUint)> {
    let n64 = u64::from(n);
    let mut counts = Vec::with_capacity(n as usize + 1);
    let mut binom = BigUint::one();
    for k in 0..=n64 {
        counts.push((2 * k as i64 - n64 as i64, binom.clone()));
        // C(n, k+1) = C(n, k) · (n − k) / (k + 1), exact at every step
        binom = binom * (n64 - k) / (k + 1);
    }
    counts
}

/// `count / 2ⁿ` as an `f64`, correctly rounded for `n ≤ 1000`.
fn count_over_power_of_two(count: &BigUint, n: u32) -> f64 {
    const DIRECT_LIMIT: u32 = 1000;
    if n <= DIRECT_LIMIT {
        count.to_f64().unwrap() * 2f64.powi(-(n as i32))
    } else {
        let drop = n - DIRECT_LIMIT;
        (count >> drop).to_f64().unwrap() * 2f64.powi(-(DIRECT_LIMIT as i32))
    }
}

/// `P_n(x) = C(n, (x + n)/2) / 2ⁿ`, computed from exact binomials.
pub fn crw_exact(n: u32) -> Distribution {
    Distribution::new(
        crw_exact_counts(n)
            .iter()
            .map(|(x, c)| (*x, count_over_power_of_two(c, n))),
    )
}

/// Empirical distribution of `trials` independent n-step walks.
///
/// The generator is ChaCha8 seeded with [`SeedableRng::seed_from_u64`]. Each
/// trial draws `⌈n/64⌉` fresh `u64` words and reads its steps from their bits,
/// least significant first; a set bit is a step to the right.
pub fn crw_monte_carlo(n: u32, trials: u64, seed: u64) -> Result<Distribution> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for _ in 0..trials {
        let mut remaining = n;
        let mut rights = 0u32;
        while remaining > 0 {
            let take = remaining.min(64);
            let word = rng.next_u64();
            let mask = if take == 64 { u64::MAX } else { (1u64 << take) - 1 };
            rights += (word & mask).count_ones();
            remaining -= take;
        }
        let x = 2 * i64::from(rights) - i64::from(n);
        *counts.entry(x).or_default() += 1;
    }
    let total = trials as f64;
    Ok(Distribution::new(
        counts.into_iter().map(|(x, c)| (x, c as f64 / total)),
    ))
}
