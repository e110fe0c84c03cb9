//! Reference answers that every structure is checked against.

use rustc_hash::FxHashMap;

use crate::universe::{Key, KeySet};

/// Weak predecessor `max{s in S : s <= q}` by binary search over the sorted
/// keys.
pub fn predecessor(keys: &KeySet, q: Key) -> Option<Key> {
    keys.predecessor_index(q).map(|i| keys[i])
}

/// Tracks working-set numbers by replaying reported predecessors.
///
/// `w(x)` is the number of distinct keys reported since `x` was last
/// reported, or `n` when `x` has never been reported. Queries with no
/// predecessor report nothing.
#[derive(Debug, Clone)]
pub struct WorkingSetOracle {
    n: usize,
    clock: u64,
    last_report: FxHashMap<Key, u64>,
}

impl WorkingSetOracle {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            clock: 0,
            last_report: FxHashMap::default(),
        }
    }

    /// `w(x)` as of now, before `x` is reported again.
    pub fn working_set_number(&self, x: Key) -> usize {
        match self.last_report.get(&x) {
            None => self.n,
            Some(&t) => self.last_report.values().filter(|&&u| u > t).count(),
        }
    }

    pub fn was_reported(&self, x: Key) -> bool {
        self.last_report.contains_key(&x)
    }

    pub fn report(&mut self, answer: Option<Key>) {
        if let Some(x) = answer {
            self.clock += 1;
            self.last_report.insert(x, self.clock);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::UniverseSpec;
    use proptest::prelude::*;

    #[test]
    fn weak_semantics() {
        let s = KeySet::new(vec![2, 5], UniverseSpec::new(3).unwrap()).unwrap();
        assert_eq!(predecessor(&s, 5), Some(5));
        assert_eq!(predecessor(&s, 4), Some(2));
        assert_eq!(predecessor(&s, 1), None);
        assert_eq!(predecessor(&s, 7), Some(5));
    }

    #[test]
    fn working_set_numbers() {
        let mut ws = WorkingSetOracle::new(10);
        assert_eq!(ws.working_set_number(3), 10);
        for x in [3, 4, 5, 4, 6] {
            ws.report(Some(x));
        }
        ws.report(None);
        // Since 3: {4, 5, 6}.
        assert_eq!(ws.working_set_number(3), 3);
        assert_eq!(ws.working_set_number(4), 1);
        assert_eq!(ws.working_set_number(6), 0);
    }

    proptest! {
        #[test]
        fn matches_linear_scan(
            mut keys in proptest::collection::vec(0u64..4096, 1..200),
            queries in proptest::collection::vec(0u64..4096, 1..64),
        ) {
            keys.sort_unstable();
            keys.dedup();
            let s = KeySet::new(keys.clone(), UniverseSpec::new(12).unwrap()).unwrap();
            for q in queries {
                let scan = keys.iter().copied().filter(|&k| k <= q).max();
                prop_assert_eq!(predecessor(&s, q), scan);
            }
        }
    }
}
