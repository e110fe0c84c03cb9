#![allow(dead_code)]

use biased_pred::workload::{self, Prng};
use biased_pred::{Key, KeySet, UniverseSpec, WeightedDistribution};
use rand::Rng;

pub fn rng(seed: u64) -> Prng {
    workload::stream(seed, 0xfeed)
}

pub fn random_keys(bits: u32, n: usize, rng: &mut Prng) -> KeySet {
    workload::random_keys(UniverseSpec::new(bits).unwrap(), n, rng).unwrap()
}

/// Random weights over a random support that overlaps the keys, with a few
/// heavy elements so threshold tables are not always empty.
pub fn random_dist(keys: &KeySet, rng: &mut Prng) -> WeightedDistribution {
    let max = keys.universe().max_key();
    let support_size = rng.random_range(1..=512usize);
    let mut entries: Vec<(Key, f64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 0..support_size {
        let key = if i % 3 == 0 {
            keys[rng.random_range(0..keys.len())]
        } else {
            rng.random_range(0..=max)
        };
        if seen.insert(key) {
            let w = if rng.random_bool(0.05) {
                rng.random_range(50.0..500.0)
            } else {
                rng.random_range(0.0..1.0)
            };
            entries.push((key, w));
        }
    }
    entries[0].1 += 1.0;
    WeightedDistribution::new(entries).unwrap()
}

/// Exhaustive linear-scan predecessor, independent of the sorted-search oracle.
pub fn scan_predecessor(keys: &[Key], q: Key) -> Option<Key> {
    keys.iter().copied().filter(|&k| k <= q).max()
}
