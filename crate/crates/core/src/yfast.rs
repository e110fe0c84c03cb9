//! y-fast trie: an x-fast trie over bucket representatives, with the keys
//! themselves held in sorted buckets of `Θ(w)` size.
//!
//! Bucket sizes are kept in `[ceil(w/4), 2w]` (a lone bucket may be smaller).
//! A bucket's representative is its minimum when the bucket is formed;
//! deleting that minimum leaves the old value behind as a lower bound, so a
//! query may have to fall back to the maximum of the bucket to its left.

use crate::error::{Error, Result};
use crate::structure::{DynamicStructure, PredecessorStructure, StaticBuild};
use crate::universe::{Key, KeySet, UniverseSpec};
use crate::xfast::XFastTrie;

#[derive(Debug, Clone)]
pub struct YFastTrie {
    universe: UniverseSpec,
    /// Trie over `reps`; `None` only when the structure holds no keys.
    rep_trie: Option<XFastTrie>,
    /// Ascending. `reps[i] <= buckets[i][0]` and `reps[i+1] > buckets[i].last()`.
    reps: Vec<Key>,
    buckets: Vec<Vec<Key>>,
    len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YFastTrace {
    pub answer: Option<Key>,
    /// Prefix-table lookups in the representative trie.
    pub level_probes: u32,
    /// Buckets binary-searched (at most two).
    pub buckets_searched: u32,
}

impl YFastTrie {
    pub fn build(keys: &KeySet) -> Self {
        let universe = keys.universe();
        let (min_size, _) = size_band(universe.bits());
        let target = universe.bits() as usize;
        let mut buckets: Vec<Vec<Key>> = keys.chunks(target).map(<[Key]>::to_vec).collect();
        if buckets.len() > 1 && buckets.last().unwrap().len() < min_size {
            let tail = buckets.pop().unwrap();
            buckets.last_mut().unwrap().extend(tail);
        }
        let reps = buckets.iter().map(|b| b[0]).collect();
        let mut trie = Self {
            universe,
            rep_trie: None,
            reps,
            buckets,
            len: keys.len(),
        };
        trie.rebuild_reps();
        trie
    }

    /// The size band `[ceil(w/4), 2w]` that buckets are kept in.
    pub fn bucket_size_band(&self) -> (usize, usize) {
        size_band(self.universe.bits())
    }

    pub fn representatives(&self) -> &[Key] {
        &self.reps
    }

    pub fn buckets(&self) -> &[Vec<Key>] {
        &self.buckets
    }

    pub fn predecessor_traced(&self, q: Key) -> YFastTrace {
        let Some(trie) = &self.rep_trie else {
            return YFastTrace {
                answer: None,
                level_probes: 0,
                buckets_searched: 0,
            };
        };
        let rep = trie.predecessor_traced(q);
        let mut trace = YFastTrace {
            answer: None,
            level_probes: rep.level_probes,
            buckets_searched: 0,
        };
        let Some(i) = rep.position else {
            return trace;
        };
        trace.buckets_searched = 1;
        let bucket = &self.buckets[i];
        trace.answer = match bucket.partition_point(|&k| k <= q).checked_sub(1) {
            Some(j) => Some(bucket[j]),
            // q lies between a stale representative and the bucket minimum.
            None if i > 0 => {
                trace.buckets_searched = 2;
                self.buckets[i - 1].last().copied()
            }
            None => None,
        };
        trace
    }

    /// Checks the ordering, partition and size-band invariants.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let (min_size, max_size) = self.bucket_size_band();
        if self.reps.len() != self.buckets.len() {
            return Err("representative and bucket counts differ".into());
        }
        let mut prev: Option<Key> = None;
        let mut count = 0;
        for (i, (rep, bucket)) in self.reps.iter().zip(&self.buckets).enumerate() {
            if bucket.is_empty() {
                return Err(format!("bucket {i} is empty"));
            }
            if self.buckets.len() > 1 && !(min_size..=max_size).contains(&bucket.len()) {
                return Err(format!(
                    "bucket {i} has {} keys, outside [{min_size}, {max_size}]",
                    bucket.len()
                ));
            }
            if bucket.len() > max_size {
                return Err(format!("lone bucket has {} keys", bucket.len()));
            }
            if *rep > bucket[0] {
                return Err(format!("representative {rep} exceeds bucket minimum"));
            }
            if let Some(p) = prev {
                if *rep <= p {
                    return Err(format!("representative {rep} not above previous key {p}"));
                }
            }
            for pair in bucket.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("bucket {i} is not strictly increasing"));
                }
            }
            prev = bucket.last().copied();
            count += bucket.len();
        }
        if count != self.len {
            return Err(format!("length {} but buckets hold {count}", self.len));
        }
        match &self.rep_trie {
            Some(t) if t.leaves() == self.reps.as_slice() => Ok(()),
            None if self.reps.is_empty() => Ok(()),
            _ => Err("representative trie out of sync".into()),
        }
    }

    fn rebuild_reps(&mut self) {
        self.rep_trie = if self.reps.is_empty() {
            None
        } else {
            let reps = KeySet::new(self.reps.clone(), self.universe)
                .expect("representatives are strictly increasing");
            Some(XFastTrie::build(&reps))
        };
    }

    /// Bucket whose range covers `key`, if any representative is `<= key`.
    fn bucket_index(&self, key: Key) -> Option<usize> {
        self.rep_trie.as_ref()?.predecessor_position(key)
    }

    fn split_if_oversized(&mut self, i: usize) -> bool {
        let (_, max_size) = self.bucket_size_band();
        if self.buckets[i].len() <= max_size {
            return false;
        }
        let half = self.buckets[i].len() / 2;
        let upper = self.buckets[i].split_off(half);
        self.reps.insert(i + 1, upper[0]);
        self.buckets.insert(i + 1, upper);
        true
    }
}

fn size_band(bits: u32) -> (usize, usize) {
    let w = bits as usize;
    (w.div_ceil(4), 2 * w)
}

impl DynamicStructure for YFastTrie {
    fn insert(&mut self, key: Key) -> Result<bool> {
        self.universe.check(key)?;
        let mut reps_changed = false;
        let i = match self.bucket_index(key) {
            Some(i) => i,
            None if self.buckets.is_empty() => {
                self.reps.push(key);
                self.buckets.push(Vec::new());
                reps_changed = true;
                0
            }
            None => {
                // Below every representative: lower the first one.
                self.reps[0] = key;
                reps_changed = true;
                0
            }
        };
        let bucket = &mut self.buckets[i];
        match bucket.binary_search(&key) {
            Ok(_) => return Ok(false),
            Err(pos) => bucket.insert(pos, key),
        }
        self.len += 1;
        reps_changed |= self.split_if_oversized(i);
        if reps_changed {
            self.rebuild_reps();
        }
        Ok(true)
    }

    fn delete(&mut self, key: Key) -> Result<()> {
        let i = self.bucket_index(key).ok_or(Error::NotFound(key))?;
        let pos = self.buckets[i]
            .binary_search(&key)
            .map_err(|_| Error::NotFound(key))?;
        self.buckets[i].remove(pos);
        self.len -= 1;

        let (min_size, _) = self.bucket_size_band();
        if self.buckets.len() == 1 {
            if self.buckets[0].is_empty() {
                self.buckets.clear();
                self.reps.clear();
                self.rebuild_reps();
            }
            return Ok(());
        }
        if self.buckets[i].len() >= min_size {
            return Ok(());
        }
        // Merge with a neighbour, keeping the left representative.
        let left = if i + 1 < self.buckets.len() { i } else { i - 1 };
        let right = self.buckets.remove(left + 1);
        self.reps.remove(left + 1);
        self.buckets[left].extend(right);
        self.split_if_oversized(left);
        self.rebuild_reps();
        Ok(())
    }
}

impl PredecessorStructure for YFastTrie {
    fn predecessor(&self, q: Key) -> Option<Key> {
        self.predecessor_traced(q).answer
    }

    fn len(&self) -> usize {
        self.len
    }

    fn universe(&self) -> UniverseSpec {
        self.universe
    }

    fn stored_entries(&self) -> usize {
        self.len + self.rep_trie.as_ref().map_or(0, |t| t.stored_entries())
    }

    fn keys(&self) -> Vec<Key> {
        self.buckets.concat()
    }
}

impl StaticBuild for YFastTrie {
    fn build(keys: &KeySet) -> Result<Self> {
        Ok(YFastTrie::build(keys))
    }
}
