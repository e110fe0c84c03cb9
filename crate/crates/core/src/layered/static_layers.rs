use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use super::{layer_sizes, search, successor_pointers, LayeredAnswer};
use crate::distribution::{output_distribution, OutputDistribution, WeightedDistribution};
use crate::error::Result;
use crate::structure::{PredecessorStructure, StaticBuild};
use crate::universe::{Key, KeySet, UniverseSpec};
use crate::yfast::YFastTrie;

/// Layers ranked by output probability `p*`, highest first.
///
/// Ties in `p*` are broken by ascending key. A query answered in layer
/// `j >= 2` has `p*(answer) <= 2^-(2^(j-1))`, because all of layer `j - 1` is
/// at least as likely.
///
/// Weighted inputs work unchanged: probabilities are `w_i / W`.
#[derive(Debug, Clone)]
pub struct LayeredStructure<L = YFastTrie> {
    universe: UniverseSpec,
    layers: Vec<L>,
    successors: FxHashMap<Key, Option<Key>>,
    output: OutputDistribution,
    ranking: Vec<Key>,
}

impl<L: PredecessorStructure + StaticBuild> LayeredStructure<L> {
    pub fn build(keys: &KeySet, dist: &WeightedDistribution) -> Result<Self> {
        let output = output_distribution(keys, dist);
        let mut ranked: Vec<(Key, f64)> = output
            .keys()
            .iter()
            .copied()
            .zip(output.masses().iter().copied())
            .collect();
        ranked.sort_by(|a, b| {
            b.1.partial_cmp(&a.1)
                .unwrap_or(Ordering::Equal)
                .then(a.0.cmp(&b.0))
        });
        let ranking: Vec<Key> = ranked.into_iter().map(|(k, _)| k).collect();

        let mut layers = Vec::new();
        let mut start = 0;
        for size in layer_sizes(keys.len()) {
            let members = KeySet::from_unsorted(ranking[start..start + size].to_vec(), keys.universe())?;
            layers.push(L::build(&members)?);
            start += size;
        }
        Ok(Self {
            universe: keys.universe(),
            layers,
            successors: successor_pointers(keys),
            output,
            ranking,
        })
    }
}

impl<L: PredecessorStructure> LayeredStructure<L> {
    pub fn query(&self, q: Key) -> LayeredAnswer {
        search(&self.layers, &self.successors, q)
    }

    pub fn layers(&self) -> &[L] {
        &self.layers
    }

    pub fn layer_lens(&self) -> Vec<usize> {
        self.layers.iter().map(PredecessorStructure::len).collect()
    }

    pub fn output_distribution(&self) -> &OutputDistribution {
        &self.output
    }

    /// Keys in layer order: descending `p*`, ties by ascending key.
    pub fn ranking(&self) -> &[Key] {
        &self.ranking
    }

    /// Checks layer sizes, the partition of the key set, the `p*` ordering
    /// between consecutive layers and the successor pointers.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let n = self.successors.len();
        let expected = layer_sizes(n);
        if self.layer_lens() != expected {
            return Err(format!("layer sizes {:?}, expected {expected:?}", self.layer_lens()));
        }
        let mut all: Vec<Key> = self.layers.iter().flat_map(|l| l.keys()).collect();
        all.sort_unstable();
        if all != self.output.keys() {
            return Err("layers do not partition the key set".into());
        }
        for pair in self.layers.windows(2) {
            let lowest = pair[0]
                .keys()
                .iter()
                .map(|&k| self.output.mass_of(k))
                .fold(f64::INFINITY, f64::min);
            let highest = pair[1]
                .keys()
                .iter()
                .map(|&k| self.output.mass_of(k))
                .fold(f64::NEG_INFINITY, f64::max);
            if lowest < highest {
                return Err(format!("layer ordering violated: {lowest} < {highest}"));
            }
        }
        for (i, &k) in all.iter().enumerate() {
            if self.successors.get(&k) != Some(&all.get(i + 1).copied()) {
                return Err(format!("successor pointer of {k} is wrong"));
            }
        }
        Ok(())
    }
}

impl<L: PredecessorStructure> PredecessorStructure for LayeredStructure<L> {
    fn predecessor(&self, q: Key) -> Option<Key> {
        self.query(q).answer
    }

    fn len(&self) -> usize {
        self.successors.len()
    }

    fn universe(&self) -> UniverseSpec {
        self.universe
    }

    fn stored_entries(&self) -> usize {
        self.layers.iter().map(PredecessorStructure::stored_entries).sum::<usize>() + self.successors.len()
    }

    fn keys(&self) -> Vec<Key> {
        self.output.keys().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::xfast::XFastTrie;

    fn u16() -> UniverseSpec {
        UniverseSpec::new(16).unwrap()
    }

    #[test]
    fn twenty_five_keys() {
        let s = KeySet::new((0..25).map(|i| i * 100).collect(), u16()).unwrap();
        let d = WeightedDistribution::uniform((0..25).map(|i| i * 100)).unwrap();
        let l: LayeredStructure = LayeredStructure::build(&s, &d).unwrap();
        assert_eq!(l.layer_lens(), vec![4, 16, 5]);
        l.audit().unwrap();
        // Uniform p*: ties resolve to ascending key.
        assert_eq!(l.layers()[0].keys(), vec![0, 100, 200, 300]);
    }

    #[test]
    fn four_keys_one_layer() {
        let s = KeySet::new(vec![1, 2, 3, 4], u16()).unwrap();
        let d = WeightedDistribution::uniform([0, 1, 2]).unwrap();
        let l: LayeredStructure = LayeredStructure::build(&s, &d).unwrap();
        assert_eq!(l.layer_lens(), vec![4]);
        assert_eq!(l.query(0).answer, None);
        assert_eq!(l.query(0).layers_probed, 1);
    }

    #[test]
    fn below_minimum_probes_every_layer() {
        let s = KeySet::new((10..40).collect(), u16()).unwrap();
        let d = WeightedDistribution::uniform(10..40).unwrap();
        let l: LayeredStructure = LayeredStructure::build(&s, &d).unwrap();
        let a = l.query(3);
        assert_eq!(a.answer, None);
        assert_eq!(a.layers_probed, 3);
    }

    #[test]
    fn pluggable_layer_structure() {
        let keys: Vec<Key> = (0..300).map(|i| i * 211 % 65536).collect();
        let s = KeySet::from_unsorted(keys, u16()).unwrap();
        let d = WeightedDistribution::new(s.iter().enumerate().map(|(i, &k)| (k, 1.0 / (i + 1) as f64)).collect())
            .unwrap();
        let l: LayeredStructure<XFastTrie> = LayeredStructure::build(&s, &d).unwrap();
        l.audit().unwrap();
        for q in (0..65536).step_by(7) {
            assert_eq!(l.predecessor(q), oracle::predecessor(&s, q));
        }
    }
}
