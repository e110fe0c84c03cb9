//! Query distributions over the universe, their entropy, and the induced
//! distribution of answers.

use crate::error::{Error, Result};
use crate::universe::{Key, KeySet};

/// Relative slack applied to every probability-versus-threshold comparison.
pub const THRESHOLD_REL_TOLERANCE: f64 = 1e-12;

/// Inclusive `p >= threshold` with the crate-wide relative tolerance.
pub fn meets_threshold(p: f64, threshold: f64) -> bool {
    p >= threshold * (1.0 - THRESHOLD_REL_TOLERANCE)
}

/// `log2(x + 2)`, the padded logarithm used when bounding probe counts so that
/// tiny arguments stay positive.
pub fn padded_log2(x: f64) -> f64 {
    (x + 2.0).log2()
}

/// Sparse non-negative weights over universe keys.
///
/// Keys outside the support have weight zero. Probabilities are `w_i / W`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDistribution {
    entries: Vec<(Key, f64)>,
    total: f64,
}

impl WeightedDistribution {
    /// Builds a distribution from `(key, weight)` pairs in any order.
    ///
    /// Duplicate keys are rejected, as are negative or non-finite weights and
    /// an all-zero total.
    pub fn new(mut entries: Vec<(Key, f64)>) -> Result<Self> {
        entries.sort_unstable_by_key(|&(k, _)| k);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::InvalidDistribution(format!(
                    "duplicate key {}",
                    pair[0].0
                )));
            }
        }
        let mut total = 0.0;
        for &(key, w) in &entries {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "weight {w} for key {key} is not a finite non-negative number"
                )));
            }
            total += w;
        }
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::InvalidDistribution(format!(
                "total weight must be positive and finite, got {total}"
            )));
        }
        Ok(Self { entries, total })
    }

    /// Weight 1 on every key.
    pub fn uniform(keys: impl IntoIterator<Item = Key>) -> Result<Self> {
        Self::new(keys.into_iter().map(|k| (k, 1.0)).collect())
    }

    /// Support entries sorted by key, including explicit zero weights.
    pub fn entries(&self) -> &[(Key, f64)] {
        &self.entries
    }

    /// `W`.
    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn weight(&self, key: Key) -> f64 {
        match self.entries.binary_search_by_key(&key, |&(k, _)| k) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0.0,
        }
    }

    pub fn probability(&self, key: Key) -> f64 {
        self.weight(key) / self.total
    }

    /// `(key, p_i)` for every support entry, in key order.
    pub fn probabilities(&self) -> impl Iterator<Item = (Key, f64)> + '_ {
        self.entries.iter().map(move |&(k, w)| (k, w / self.total))
    }

    /// Largest key in the support.
    pub fn max_key(&self) -> Option<Key> {
        self.entries.last().map(|&(k, _)| k)
    }
}

/// Shannon entropy in bits, `sum p_i log2(1/p_i)` with `0 log 0 = 0`.
pub fn entropy(dist: &WeightedDistribution) -> f64 {
    entropy_of(dist.probabilities().map(|(_, p)| p))
}

pub(crate) fn entropy_of(probabilities: impl Iterator<Item = f64>) -> f64 {
    let h: f64 = probabilities
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum();
    h.max(0.0)
}

/// Probability that each stored key is the answer to a query.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDistribution {
    keys: Vec<Key>,
    mass: Vec<f64>,
    bottom_mass: f64,
}

impl OutputDistribution {
    /// The stored keys, ascending.
    pub fn keys(&self) -> &[Key] {
        &self.keys
    }

    /// `p*` of the k-th stored key.
    pub fn masses(&self) -> &[f64] {
        &self.mass
    }

    /// `p*` of `key`; zero for keys not in the set.
    pub fn mass_of(&self, key: Key) -> f64 {
        match self.keys.binary_search(&key) {
            Ok(i) => self.mass[i],
            Err(_) => 0.0,
        }
    }

    /// Mass of queries that have no predecessor.
    pub fn bottom_mass(&self) -> f64 {
        self.bottom_mass
    }

    /// Entropy of the answer distribution, counting "no predecessor" as an
    /// outcome.
    pub fn entropy(&self) -> f64 {
        entropy_of(self.mass.iter().copied().chain(Some(self.bottom_mass)))
    }
}

/// Accumulates each gap `[s_k, s_{k+1} - 1]` of query mass onto `s_k` with a
/// single merge over the support.
pub fn output_distribution(keys: &KeySet, dist: &WeightedDistribution) -> OutputDistribution {
    let stored = keys.keys();
    let mut mass = vec![0.0; stored.len()];
    let mut bottom = 0.0;
    // Index of the first stored key strictly greater than the current query.
    let mut next = 0;
    for &(q, w) in dist.entries() {
        while next < stored.len() && stored[next] <= q {
            next += 1;
        }
        match next.checked_sub(1) {
            Some(k) => mass[k] += w,
            None => bottom += w,
        }
    }
    let total = dist.total();
    mass.iter_mut().for_each(|m| *m /= total);
    OutputDistribution {
        keys: stored.to_vec(),
        mass,
        bottom_mass: bottom / total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::UniverseSpec;

    #[test]
    fn rejects_bad_weights() {
        assert!(WeightedDistribution::new(vec![]).is_err());
        assert!(WeightedDistribution::new(vec![(1, 0.0)]).is_err());
        assert!(WeightedDistribution::new(vec![(1, -1.0), (2, 3.0)]).is_err());
        assert!(WeightedDistribution::new(vec![(1, f64::NAN)]).is_err());
        assert!(WeightedDistribution::new(vec![(1, 1.0), (1, 2.0)]).is_err());
        // Explicit zeros are fine as long as something carries mass.
        let d = WeightedDistribution::new(vec![(5, 0.0), (1, 2.0)]).unwrap();
        assert_eq!(d.entries(), &[(1, 2.0), (5, 0.0)]);
        assert_eq!(d.probability(1), 1.0);
        assert_eq!(d.probability(7), 0.0);
    }

    #[test]
    fn entropy_basics() {
        assert_eq!(entropy(&WeightedDistribution::uniform(0..8).unwrap()), 3.0);
        assert_eq!(entropy(&WeightedDistribution::uniform([42]).unwrap()), 0.0);
        let d = WeightedDistribution::new(vec![(0, 4.0), (1, 2.0), (2, 1.0), (3, 1.0)]).unwrap();
        assert!((entropy(&d) - 1.75).abs() < 1e-12);
    }

    #[test]
    fn output_distribution_small() {
        let u = UniverseSpec::new(3).unwrap();
        let s = KeySet::new(vec![2, 5], u).unwrap();
        let out = output_distribution(&s, &WeightedDistribution::uniform(0..8).unwrap());
        assert_eq!(out.masses(), &[3.0 / 8.0, 3.0 / 8.0]);
        assert_eq!(out.bottom_mass(), 2.0 / 8.0);
        assert_eq!(out.mass_of(3), 0.0);

        let s = KeySet::new(vec![0], u).unwrap();
        let d = WeightedDistribution::new(vec![(0, 1.0), (3, 5.0), (7, 2.0)]).unwrap();
        let out = output_distribution(&s, &d);
        assert_eq!(out.masses(), &[1.0]);
        assert_eq!(out.bottom_mass(), 0.0);
    }

    #[test]
    fn support_on_keys_is_identity() {
        let u = UniverseSpec::new(8).unwrap();
        let s = KeySet::new(vec![3, 10, 200], u).unwrap();
        let d = WeightedDistribution::new(vec![(1, 1.0), (3, 2.0), (10, 3.0), (200, 4.0)]).unwrap();
        let out = output_distribution(&s, &d);
        for (&k, &m) in out.keys().iter().zip(out.masses()) {
            assert_eq!(m, d.probability(k));
        }
        assert_eq!(out.bottom_mass(), 0.1);
    }

    #[test]
    fn threshold_is_inclusive() {
        assert!(meets_threshold(0.25, 0.25));
        assert!(meets_threshold(0.25 * (1.0 - 1e-13), 0.25));
        assert!(!meets_threshold(0.2499, 0.25));
    }
}
