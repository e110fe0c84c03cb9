//! Query distributions and seeded query sampling.
//!
//! All randomness comes from [`Prng`] (ChaCha8). Independent streams are
//! carved out of one user seed with [`stream`], so each component of a run
//! can be reproduced on its own.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distribution::WeightedDistribution;
use crate::error::{Error, Result};
use crate::io;
use crate::universe::{Key, KeySet, UniverseSpec};

pub type Prng = ChaCha8Rng;

/// Name recorded in reports.
pub const PRNG_NAME: &str = "chacha8";

/// Stream identifiers split off one seed.
pub mod streams {
    pub const KEYS: u64 = 1;
    pub const SUPPORT: u64 = 2;
    pub const QUERIES: u64 = 3;
    pub const WEIGHTS: u64 = 4;
}

/// Generator for stream `id` of `seed`.
pub fn stream(seed: u64, id: u64) -> Prng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

#[derive(Debug, Clone, PartialEq)]
pub enum WorkloadKind {
    /// Weight 1 everywhere.
    Uniform,
    /// Weight `ratio^rank`, `ratio` in `(0, 1)`.
    Geometric { ratio: f64 },
    /// Weight `(rank + 1)^-s`, `s > 0`.
    Zipf { s: f64 },
    /// Weight 1 on the first support key only.
    PointMass,
    /// `key<TAB>weight` lines read from a file; the support list is ignored.
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorkloadSpec {
    pub kind: WorkloadKind,
    /// Support keys in rank order (rank 0 first).
    pub support: Vec<Key>,
    pub seed: u64,
    pub num_queries: usize,
}

impl WorkloadSpec {
    pub fn distribution(&self) -> Result<WeightedDistribution> {
        generate_distribution(&self.kind, &self.support)
    }

    /// Queries drawn from the generated distribution on the query stream of
    /// `seed`.
    pub fn queries(&self) -> Result<Vec<Key>> {
        let dist = self.distribution()?;
        Ok(sample_queries(&dist, &mut stream(self.seed, streams::QUERIES), self.num_queries))
    }
}

pub fn generate_distribution(kind: &WorkloadKind, support: &[Key]) -> Result<WeightedDistribution> {
    if let WorkloadKind::File(path) = kind {
        return io::read_weights(path);
    }
    if support.is_empty() {
        return Err(Error::InvalidParameter("distribution support is empty".into()));
    }
    let weights: Vec<(Key, f64)> = match *kind {
        WorkloadKind::Uniform => support.iter().map(|&k| (k, 1.0)).collect(),
        WorkloadKind::Geometric { ratio } => {
            if !(ratio > 0.0 && ratio < 1.0) {
                return Err(Error::InvalidParameter(format!("geometric ratio must be in (0, 1), got {ratio}")));
            }
            // Deep ranks underflow; clamp so every support key keeps positive weight.
            support
                .iter()
                .enumerate()
                .map(|(rank, &k)| (k, ratio.powf(rank as f64).max(f64::MIN_POSITIVE)))
                .collect()
        }
        WorkloadKind::Zipf { s } => {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::InvalidParameter(format!("zipf exponent must be positive, got {s}")));
            }
            support
                .iter()
                .enumerate()
                .map(|(rank, &k)| (k, ((rank + 1) as f64).powf(-s).max(f64::MIN_POSITIVE)))
                .collect()
        }
        WorkloadKind::PointMass => vec![(support[0], 1.0)],
        WorkloadKind::File(_) => unreachable!(),
    };
    WeightedDistribution::new(weights)
}

/// `count` i.i.d. queries by inverse-CDF lookup over the support.
pub fn sample_queries(dist: &WeightedDistribution, rng: &mut Prng, count: usize) -> Vec<Key> {
    let entries = dist.entries();
    let mut cumulative = Vec::with_capacity(entries.len());
    let mut acc = 0.0;
    for &(_, w) in entries {
        acc += w;
        cumulative.push(acc);
    }
    let total = acc;
    (0..count)
        .map(|_| {
            let u = rng.random::<f64>() * total;
            let i = cumulative.partition_point(|&c| c <= u).min(entries.len() - 1);
            entries[i].0
        })
        .collect()
}

/// `n` distinct keys drawn uniformly from the universe, sorted.
pub fn random_keys(universe: UniverseSpec, n: usize, rng: &mut Prng) -> Result<KeySet> {
    if n == 0 {
        return Err(Error::EmptyKeySet);
    }
    if (n as u128) > universe.size() {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {n} distinct keys from a universe of {} bits",
            universe.bits()
        )));
    }
    let keys: Vec<Key> = if universe.bits() <= 24 {
        rand::seq::index::sample(rng, universe.size() as usize, n)
            .into_iter()
            .map(|k| k as Key)
            .collect()
    } else {
        let mut seen = rustc_hash::FxHashSet::default();
        let mut keys = Vec::with_capacity(n);
        while keys.len() < n {
            let k = rng.random::<u64>() & universe.max_key();
            if seen.insert(k) {
                keys.push(k);
            }
        }
        keys
    };
    KeySet::from_unsorted(keys, universe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::entropy;

    #[test]
    fn parameter_checks() {
        let support = [1, 2, 3];
        assert!(generate_distribution(&WorkloadKind::Geometric { ratio: 1.0 }, &support).is_err());
        assert!(generate_distribution(&WorkloadKind::Geometric { ratio: 0.0 }, &support).is_err());
        assert!(generate_distribution(&WorkloadKind::Zipf { s: 0.0 }, &support).is_err());
        assert!(generate_distribution(&WorkloadKind::Uniform, &[]).is_err());
    }

    #[test]
    fn simple_entropies() {
        let support: Vec<Key> = (0..1024).collect();
        let uniform = generate_distribution(&WorkloadKind::Uniform, &support).unwrap();
        assert!((entropy(&uniform) - 10.0).abs() < 1e-9);
        let point = generate_distribution(&WorkloadKind::PointMass, &support).unwrap();
        assert_eq!(entropy(&point), 0.0);
        assert_eq!(point.entries(), &[(0, 1.0)]);
    }

    #[test]
    fn deep_geometric_ranks_stay_positive() {
        let support: Vec<Key> = (0..5000).collect();
        let d = generate_distribution(&WorkloadKind::Geometric { ratio: 0.5 }, &support).unwrap();
        assert!(d.entries().iter().all(|&(_, w)| w > 0.0));
    }

    #[test]
    fn sampling_edge_cases() {
        let d = WeightedDistribution::uniform([77]).unwrap();
        let q = sample_queries(&d, &mut stream(1, streams::QUERIES), 100);
        assert!(q.iter().all(|&k| k == 77));
        assert!(sample_queries(&d, &mut stream(1, streams::QUERIES), 0).is_empty());
        // Zero-weight entries are never drawn.
        let d = WeightedDistribution::new(vec![(1, 0.0), (2, 1.0), (3, 0.0)]).unwrap();
        let q = sample_queries(&d, &mut stream(9, streams::QUERIES), 1000);
        assert!(q.iter().all(|&k| k == 2));
    }

    #[test]
    fn random_keys_are_distinct_and_bounded() {
        let u = UniverseSpec::new(40).unwrap();
        let s = random_keys(u, 500, &mut stream(3, streams::KEYS)).unwrap();
        assert_eq!(s.len(), 500);
        let u = UniverseSpec::new(4).unwrap();
        assert_eq!(random_keys(u, 16, &mut stream(3, streams::KEYS)).unwrap().len(), 16);
        assert!(random_keys(u, 17, &mut stream(3, streams::KEYS)).is_err());
    }
}
