//! Static x-fast trie.
//!
//! Level `l` (for `l` in `0..=w`) holds a hash table keyed by the top `l` bits
//! of every stored key. Each present prefix records the positions of the
//! smallest and largest stored key beneath it. A query binary-searches the
//! levels for the longest present prefix of `q` and then needs at most one
//! step along the sorted leaf array.

use std::cell::Cell;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::structure::{PredecessorStructure, StaticBuild};
use crate::universe::{Key, KeySet, UniverseSpec};

/// Leaf positions of the extreme descendants of a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    min: u32,
    max: u32,
}

#[derive(Debug, Clone)]
pub struct XFastTrie {
    universe: UniverseSpec,
    /// `levels[l]` maps an `l`-bit prefix to its span.
    levels: Vec<FxHashMap<Key, Span>>,
    /// Sorted leaves; neighbours in the leaf list are adjacent positions.
    leaves: Vec<Key>,
}

/// A query answer together with the number of prefix-table lookups it cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XFastTrace {
    pub answer: Option<Key>,
    pub position: Option<usize>,
    pub level_probes: u32,
}

impl XFastTrie {
    pub fn build(keys: &KeySet) -> Self {
        let universe = keys.universe();
        let w = universe.bits();
        let leaves = keys.keys().to_vec();
        assert!(leaves.len() <= u32::MAX as usize);
        let mut levels: Vec<FxHashMap<Key, Span>> = (0..=w).map(|_| FxHashMap::default()).collect();
        for (level, table) in levels.iter_mut().enumerate() {
            let level = level as u32;
            // Sorted keys share each prefix in one contiguous run.
            for (pos, &key) in leaves.iter().enumerate() {
                let pos = pos as u32;
                table
                    .entry(prefix(key, level, w))
                    .and_modify(|s| s.max = pos)
                    .or_insert(Span { min: pos, max: pos });
            }
        }
        Self {
            universe,
            levels,
            leaves,
        }
    }

    /// Prefixes present at `level`, ascending.
    pub fn level_prefixes(&self, level: u32) -> Vec<Key> {
        let mut p: Vec<Key> = self.levels[level as usize].keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn leaves(&self) -> &[Key] {
        &self.leaves
    }

    /// Total number of prefix entries over all levels.
    pub fn prefix_entries(&self) -> usize {
        self.levels.iter().map(FxHashMap::len).sum()
    }

    pub fn predecessor_traced(&self, q: Key) -> XFastTrace {
        debug_assert!(self.universe.contains(q));
        let w = self.universe.bits();
        let probes = Cell::new(0u32);
        let lookup = |level: u32| {
            probes.set(probes.get() + 1);
            self.levels[level as usize].get(&prefix(q, level, w)).copied()
        };

        // Invariant: the prefix of q at level `lo` is present (`found`), and
        // no level above `hi` is.
        let (mut lo, mut hi) = (0u32, w);
        let mut found: Option<Span> = None;
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match lookup(mid) {
                Some(span) => {
                    lo = mid;
                    found = Some(span);
                }
                None => hi = mid - 1,
            }
        }
        let span = match found {
            Some(span) => span,
            // Level 0 is the root and always present.
            None => lookup(0).expect("root prefix present in nonempty trie"),
        };

        let position = if lo == w {
            Some(span.min as usize)
        } else {
            // The child of this node on q's side is absent, so every leaf
            // below it sits on the other side of q.
            let next_bit = (q >> (w - lo - 1)) & 1;
            if next_bit == 1 {
                Some(span.max as usize)
            } else {
                (span.min as usize).checked_sub(1)
            }
        };
        XFastTrace {
            answer: position.map(|p| self.leaves[p]),
            position,
            level_probes: probes.get(),
        }
    }

    /// Position in [`leaves`](Self::leaves) of the weak predecessor.
    pub fn predecessor_position(&self, q: Key) -> Option<usize> {
        self.predecessor_traced(q).position
    }
}

/// Level probes allowed for one search over `bits`-bit keys:
/// `ceil(log2(w + 1)) + 2`.
pub fn level_probe_bound(bits: u32) -> u32 {
    ceil_log2(bits + 1) + 2
}

fn prefix(key: Key, level: u32, bits: u32) -> Key {
    key.checked_shr(bits - level).unwrap_or(0)
}

pub(crate) fn ceil_log2(x: u32) -> u32 {
    if x <= 1 {
        0
    } else {
        32 - (x - 1).leading_zeros()
    }
}

impl PredecessorStructure for XFastTrie {
    fn predecessor(&self, q: Key) -> Option<Key> {
        self.predecessor_traced(q).answer
    }

    fn len(&self) -> usize {
        self.leaves.len()
    }

    fn universe(&self) -> UniverseSpec {
        self.universe
    }

    fn stored_entries(&self) -> usize {
        self.prefix_entries() + self.leaves.len()
    }

    fn keys(&self) -> Vec<Key> {
        self.leaves.clone()
    }
}

impl StaticBuild for XFastTrie {
    fn build(keys: &KeySet) -> Result<Self> {
        Ok(XFastTrie::build(keys))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn trie(keys: &[Key], bits: u32) -> (KeySet, XFastTrie) {
        let s = KeySet::new(keys.to_vec(), UniverseSpec::new(bits).unwrap()).unwrap();
        let t = XFastTrie::build(&s);
        (s, t)
    }

    #[test]
    fn prefix_tables() {
        let (_, t) = trie(&[2, 5], 3);
        // 2 = 0b010, 5 = 0b101.
        assert_eq!(t.level_prefixes(1), vec![0b0, 0b1]);
        assert_eq!(t.level_prefixes(2), vec![0b01, 0b10]);
        assert_eq!(t.leaves(), &[2, 5]);

        let (_, t) = trie(&[0], 1);
        assert_eq!(t.level_prefixes(0).len(), 1);
        assert_eq!(t.level_prefixes(1).len(), 1);

        let all: Vec<Key> = (0..16).collect();
        let (_, t) = trie(&all, 4);
        for level in 0..=4 {
            assert_eq!(t.level_prefixes(level).len(), 1 << level);
        }
    }

    #[test]
    fn small_queries() {
        let (_, t) = trie(&[2, 5], 3);
        assert_eq!(t.predecessor(7), Some(5));
        assert_eq!(t.predecessor(2), Some(2));
        assert_eq!(t.predecessor(4), Some(2));
        assert_eq!(t.predecessor(1), None);
    }

    #[test]
    fn full_width_keys() {
        let keys = [0, 1, u64::MAX / 2, u64::MAX - 1, u64::MAX];
        let (s, t) = trie(&keys, 64);
        for q in [0, 1, 2, u64::MAX / 2, u64::MAX / 2 + 1, u64::MAX - 1, u64::MAX] {
            assert_eq!(t.predecessor(q), oracle::predecessor(&s, q));
        }
        let (_, t) = trie(&[u64::MAX], 64);
        assert_eq!(t.predecessor(u64::MAX - 1), None);
    }

    #[test]
    fn probe_limit_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(17), 5);
        assert_eq!(ceil_log2(65), 7);
        assert_eq!(level_probe_bound(16), 7);
    }

    #[test]
    fn space_bound() {
        let keys: Vec<Key> = (0..300).map(|i| i * 97 % 4096).collect();
        let s = KeySet::from_unsorted(keys, UniverseSpec::new(12).unwrap()).unwrap();
        let t = XFastTrie::build(&s);
        assert!(t.prefix_entries() <= s.len() * 13);
    }
}
