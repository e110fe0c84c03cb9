use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::{layer_sizes, search, successor_pointers, LayeredAnswer};
use crate::error::Result;
use crate::structure::{DynamicStructure, PredecessorStructure, StaticBuild};
use crate::universe::{Key, KeySet, UniverseSpec};
use crate::yfast::YFastTrie;

/// Recency stamp; larger is more recent. Keys never reported carry negative
/// stamps so that they rank behind every reported key.
type Stamp = i64;

#[derive(Debug, Clone)]
struct RecencyLayer<L> {
    structure: L,
    /// `(stamp, key)`, least recent first.
    recency: BTreeSet<(Stamp, Key)>,
}

/// Layers ranked by recency of report.
///
/// Reporting a key from layer `j` moves it to the front layer and pushes the
/// least recent key of each layer `k < j` down into layer `k + 1`, so every
/// layer stays at capacity and every key in layer `k` was reported more
/// recently than every key in layer `k + 1`. Initially keys are ranked by
/// ascending value.
///
/// Every query mutates the structure.
#[derive(Debug, Clone)]
pub struct WorkingSetStructure<L = YFastTrie> {
    universe: UniverseSpec,
    layers: Vec<RecencyLayer<L>>,
    successors: FxHashMap<Key, Option<Key>>,
    /// Current layer and stamp of every key.
    placement: FxHashMap<Key, (usize, Stamp)>,
    clock: Stamp,
}

impl<L: DynamicStructure + StaticBuild> WorkingSetStructure<L> {
    pub fn build(keys: &KeySet) -> Result<Self> {
        let mut layers = Vec::new();
        let mut placement = FxHashMap::default();
        let mut start = 0;
        for size in layer_sizes(keys.len()) {
            let slice = &keys[start..start + size];
            let members = KeySet::new(slice.to_vec(), keys.universe())?;
            let recency = slice
                .iter()
                .enumerate()
                .map(|(offset, &k)| {
                    let stamp = -((start + offset) as Stamp) - 1;
                    placement.insert(k, (layers.len(), stamp));
                    (stamp, k)
                })
                .collect();
            layers.push(RecencyLayer {
                structure: L::build(&members)?,
                recency,
            });
            start += size;
        }
        Ok(Self {
            universe: keys.universe(),
            layers,
            successors: successor_pointers(keys),
            placement,
            clock: 0,
        })
    }

    /// Searches like the static structure, then promotes the answer.
    pub fn query(&mut self, q: Key) -> Result<LayeredAnswer> {
        let answer = search(self.layers.iter().map(|l| &l.structure), &self.successors, q);
        if let (Some(x), Some(j)) = (answer.answer, answer.layer) {
            self.promote(x, j)?;
        }
        Ok(answer)
    }

    fn promote(&mut self, x: Key, j: usize) -> Result<()> {
        let stamp = self.clock;
        self.clock += 1;
        let (_, old) = self.placement[&x];
        self.layers[j].recency.remove(&(old, x));
        if j > 0 {
            self.layers[j].structure.delete(x)?;
            self.layers[0].structure.insert(x)?;
        }
        self.layers[0].recency.insert((stamp, x));
        self.placement.insert(x, (0, stamp));
        for k in 0..j {
            let (s, y) = self.layers[k]
                .recency
                .pop_first()
                .expect("layer above a hit is nonempty");
            self.layers[k].structure.delete(y)?;
            self.layers[k + 1].structure.insert(y)?;
            self.layers[k + 1].recency.insert((s, y));
            self.placement.insert(y, (k + 1, s));
        }
        Ok(())
    }
}

impl<L: PredecessorStructure> WorkingSetStructure<L> {
    /// Search without promotion.
    pub fn peek(&self, q: Key) -> LayeredAnswer {
        search(self.layers.iter().map(|l| &l.structure), &self.successors, q)
    }

    pub fn layer_lens(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.structure.len()).collect()
    }

    /// 0-based layer currently holding `key`.
    pub fn layer_of(&self, key: Key) -> Option<usize> {
        self.placement.get(&key).map(|&(j, _)| j)
    }

    pub fn layer_keys(&self, j: usize) -> Vec<Key> {
        self.layers[j].structure.keys()
    }

    /// Checks capacities, the partition of the key set, agreement between the
    /// layer structures and the recency queues, and the recency ordering
    /// between consecutive layers.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let expected = layer_sizes(self.successors.len());
        if self.layer_lens() != expected {
            return Err(format!("layer sizes {:?}, expected {expected:?}", self.layer_lens()));
        }
        let mut total = 0;
        for (j, layer) in self.layers.iter().enumerate() {
            let mut queued: Vec<Key> = layer.recency.iter().map(|&(_, k)| k).collect();
            queued.sort_unstable();
            if queued != layer.structure.keys() {
                return Err(format!("layer {j} recency queue disagrees with its structure"));
            }
            for &(s, k) in &layer.recency {
                if self.placement.get(&k) != Some(&(j, s)) {
                    return Err(format!("placement of {k} is stale"));
                }
            }
            total += queued.len();
        }
        if total != self.successors.len() || self.placement.len() != total {
            return Err("layers do not partition the key set".into());
        }
        for pair in self.layers.windows(2) {
            let (Some(&(oldest, _)), Some(&(newest, _))) = (pair[0].recency.first(), pair[1].recency.last())
            else {
                continue;
            };
            if oldest <= newest {
                return Err("recency ordering between layers violated".into());
            }
        }
        Ok(())
    }
}

impl<L: PredecessorStructure> WorkingSetStructure<L> {
    pub fn universe(&self) -> UniverseSpec {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.successors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successors.is_empty()
    }

    pub fn stored_entries(&self) -> usize {
        self.layers
            .iter()
            .map(|l| l.structure.stored_entries() + l.recency.len())
            .sum::<usize>()
            + self.successors.len()
            + self.placement.len()
    }
}
