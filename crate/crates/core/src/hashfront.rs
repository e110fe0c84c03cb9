//! Hash front: precomputed answers for high-probability queries, with a y-fast
//! trie behind it for everything else.
//!
//! Every support element whose probability reaches the threshold is stored in
//! a hash table together with its weak predecessor. A query looks in the table
//! once; on a miss it runs a y-fast search. Two threshold rules are offered:
//!
//! - [`ThresholdMode::PowerOfUniverse`]: `(1/U)^eps`, table size `<= U^eps`,
//!   expected `O(log(H/eps))` time.
//! - [`ThresholdMode::PowerOfLogUniverse`]: `2^-(log2 U)^eps`, table size
//!   `<= 2^((log2 U)^eps)`, expected `O((1/eps) log H)` time.
//!
//! With general weights `w_i` (probabilities `w_i / W`) the second rule gives
//! an individual bound of `O((1/eps) log log (W / w_i))` per query, which
//! [`expected_probe_bound`] tabulates.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::distribution::{meets_threshold, padded_log2, WeightedDistribution};
use crate::error::{Error, Result};
use crate::oracle;
use crate::structure::PredecessorStructure;
use crate::universe::{Key, KeySet, UniverseSpec};
use crate::yfast::YFastTrie;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", content = "epsilon")]
pub enum ThresholdMode {
    /// Threshold `(1/U)^eps`, `eps` in `(0, 1]`.
    #[serde(rename = "A")]
    PowerOfUniverse(f64),
    /// Threshold `2^-(log2 U)^eps`, `eps` in `(0, 1)`.
    #[serde(rename = "B")]
    PowerOfLogUniverse(f64),
}

impl ThresholdMode {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ThresholdMode::PowerOfUniverse(eps) if eps > 0.0 && eps <= 1.0 => Ok(()),
            ThresholdMode::PowerOfLogUniverse(eps) if eps > 0.0 && eps < 1.0 => Ok(()),
            ThresholdMode::PowerOfUniverse(eps) => Err(Error::InvalidParameter(format!(
                "mode A needs epsilon in (0, 1], got {eps}"
            ))),
            ThresholdMode::PowerOfLogUniverse(eps) => Err(Error::InvalidParameter(format!(
                "mode B needs epsilon in (0, 1), got {eps}"
            ))),
        }
    }

    pub fn epsilon(&self) -> f64 {
        match *self {
            ThresholdMode::PowerOfUniverse(e) | ThresholdMode::PowerOfLogUniverse(e) => e,
        }
    }

    /// Base-2 logarithm of the inverse threshold.
    fn neg_log2_threshold(&self, universe: UniverseSpec) -> f64 {
        let bits = universe.bits() as f64;
        match *self {
            ThresholdMode::PowerOfUniverse(eps) => bits * eps,
            ThresholdMode::PowerOfLogUniverse(eps) => bits.powf(eps),
        }
    }

    /// Smallest probability admitted into the table.
    pub fn threshold(&self, universe: UniverseSpec) -> f64 {
        (-self.neg_log2_threshold(universe)).exp2()
    }

    /// Counting bound on the table size: at most `1 / threshold` elements can
    /// reach the threshold.
    pub fn capacity_bound(&self, universe: UniverseSpec) -> f64 {
        self.neg_log2_threshold(universe).exp2()
    }
}

/// Outcome of one hash-front query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrontTrace {
    pub answer: Option<Key>,
    pub hit: bool,
    pub table_probes: u32,
    /// Level probes spent in the y-fast fallback; zero on a hit.
    pub level_probes: u32,
}

#[derive(Debug, Clone)]
pub struct HashFront {
    mode: ThresholdMode,
    threshold: f64,
    universe: UniverseSpec,
    table: FxHashMap<Key, Option<Key>>,
    fallback: YFastTrie,
}

impl HashFront {
    /// `dist` may be any non-negative weighting; probabilities are
    /// `w_i / W`. Only the support of `dist` is scanned.
    pub fn build(keys: &KeySet, dist: &WeightedDistribution, mode: ThresholdMode) -> Result<Self> {
        mode.validate()?;
        let universe = keys.universe();
        if let Some(max) = dist.max_key() {
            universe.check(max)?;
        }
        let threshold = mode.threshold(universe);
        let table = dist
            .probabilities()
            .filter(|&(_, p)| meets_threshold(p, threshold))
            .map(|(q, _)| (q, oracle::predecessor(keys, q)))
            .collect();
        Ok(Self {
            mode,
            threshold,
            universe,
            table,
            fallback: YFastTrie::build(keys),
        })
    }

    pub fn mode(&self) -> ThresholdMode {
        self.mode
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    pub fn capacity_bound(&self) -> f64 {
        self.mode.capacity_bound(self.universe)
    }

    pub fn contains(&self, q: Key) -> bool {
        self.table.contains_key(&q)
    }

    /// Stored `(element, answer)` pairs, ascending by element.
    pub fn table_entries(&self) -> Vec<(Key, Option<Key>)> {
        let mut v: Vec<_> = self.table.iter().map(|(&k, &a)| (k, a)).collect();
        v.sort_unstable();
        v
    }

    pub fn fallback(&self) -> &YFastTrie {
        &self.fallback
    }

    pub fn predecessor_traced(&self, q: Key) -> FrontTrace {
        if let Some(&answer) = self.table.get(&q) {
            return FrontTrace {
                answer,
                hit: true,
                table_probes: 1,
                level_probes: 0,
            };
        }
        let fallback = self.fallback.predecessor_traced(q);
        FrontTrace {
            answer: fallback.answer,
            hit: false,
            table_probes: 1,
            level_probes: fallback.level_probes,
        }
    }
}

impl PredecessorStructure for HashFront {
    fn predecessor(&self, q: Key) -> Option<Key> {
        self.predecessor_traced(q).answer
    }

    fn len(&self) -> usize {
        self.fallback.len()
    }

    fn universe(&self) -> UniverseSpec {
        self.universe
    }

    fn stored_entries(&self) -> usize {
        self.table.len() + self.fallback.stored_entries()
    }

    fn keys(&self) -> Vec<Key> {
        self.fallback.keys()
    }
}

/// Per-element individual bound `log log (W / w_i)` (padded logarithms).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElementBound {
    pub key: Key,
    pub probability: f64,
    pub in_table: bool,
    /// Infinite for zero-weight support entries.
    pub log_log_inverse_weight: f64,
}

/// Analytic view of how a distribution splits across the table and the
/// fallback for a given threshold rule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeBoundReport {
    pub threshold: f64,
    pub capacity_bound: f64,
    /// Probability that a query is answered by the table.
    pub hit_probability: f64,
    /// Probability that a query falls through to the y-fast trie.
    pub miss_probability: f64,
    /// `sum over misses of p_i log log (1/p_i)`, the quantity the expected
    /// fallback cost is bounded by.
    pub miss_weighted_log_log: f64,
    pub elements: Vec<ElementBound>,
}

pub fn expected_probe_bound(
    dist: &WeightedDistribution,
    mode: ThresholdMode,
    universe: UniverseSpec,
) -> Result<ProbeBoundReport> {
    mode.validate()?;
    let threshold = mode.threshold(universe);
    let mut hit = 0.0;
    let mut miss = 0.0;
    let mut miss_weighted = 0.0;
    let elements: Vec<ElementBound> = dist
        .probabilities()
        .map(|(key, p)| {
            let in_table = meets_threshold(p, threshold);
            let log_log = if p > 0.0 {
                padded_log2(padded_log2(1.0 / p))
            } else {
                f64::INFINITY
            };
            if in_table {
                hit += p;
            } else if p > 0.0 {
                miss += p;
                miss_weighted += p * log_log;
            }
            ElementBound {
                key,
                probability: p,
                in_table,
                log_log_inverse_weight: log_log,
            }
        })
        .collect();
    Ok(ProbeBoundReport {
        threshold,
        capacity_bound: mode.capacity_bound(universe),
        hit_probability: hit,
        miss_probability: miss,
        miss_weighted_log_log: miss_weighted,
        elements,
    })
}
