mod common;

use std::collections::BTreeSet;

use biased_pred::oracle;
use biased_pred::xfast::level_probe_bound;
use biased_pred::{DynamicStructure, Key, KeySet, PredecessorStructure, UniverseSpec, XFastTrie, YFastTrie};
use common::{random_keys, rng};
use rand::Rng;

#[test]
fn xfast_exhaustive_16_bits() {
    let mut r = rng(1);
    let keys = random_keys(16, 256, &mut r);
    let trie = XFastTrie::build(&keys);
    let limit = level_probe_bound(16);
    for q in 0..=u16::MAX as Key {
        let t = trie.predecessor_traced(q);
        assert_eq!(t.answer, common::scan_predecessor(&keys, q), "q={q}");
        assert!(t.level_probes <= limit);
    }
    assert!(trie.prefix_entries() <= keys.len() * 17);
}

#[test]
fn xfast_small_universes() {
    let mut r = rng(2);
    for bits in 1..=10 {
        for n in [1usize, 2, 3, 7] {
            let n = n.min(1 << bits);
            let keys = random_keys(bits, n, &mut r);
            let trie = XFastTrie::build(&keys);
            for q in 0..(1u64 << bits) {
                assert_eq!(trie.predecessor(q), common::scan_predecessor(&keys, q));
            }
        }
    }
}

#[test]
fn yfast_exhaustive_and_sampled() {
    let mut r = rng(3);
    for (bits, n) in [(12, 1), (12, 5), (12, 300), (16, 2000)] {
        let keys = random_keys(bits, n, &mut r);
        let trie = YFastTrie::build(&keys);
        trie.audit().unwrap();
        assert_eq!(trie.keys(), keys.keys());
        for q in 0..(1u64 << bits) {
            assert_eq!(trie.predecessor(q), oracle::predecessor(&keys, q));
        }
    }
    let keys = random_keys(20, 1000, &mut r);
    let trie = YFastTrie::build(&keys);
    for _ in 0..100_000 {
        let q = r.random_range(0..1u64 << 20);
        assert_eq!(trie.predecessor(q), oracle::predecessor(&keys, q));
    }
    assert_eq!(trie.predecessor(keys.min() - 1), None);
    assert_eq!(trie.predecessor((1 << 20) - 1), Some(keys.max()));
}

#[test]
fn yfast_64_bit_keys() {
    let mut r = rng(4);
    let keys = random_keys(64, 3000, &mut r);
    let trie = YFastTrie::build(&keys);
    for _ in 0..20_000 {
        let q: u64 = r.random();
        assert_eq!(trie.predecessor(q), oracle::predecessor(&keys, q));
    }
    for &k in keys.iter().take(100) {
        assert_eq!(trie.predecessor(k), Some(k));
    }
}

#[test]
fn yfast_update_interleaving_against_sorted_set() {
    let mut r = rng(5);
    let u = UniverseSpec::new(14).unwrap();
    let keys = random_keys(14, 200, &mut r);
    let mut trie = YFastTrie::build(&keys);
    let mut model: BTreeSet<Key> = keys.iter().copied().collect();
    for step in 0..10_000 {
        if model.is_empty() || r.random_bool(0.55) {
            let k = r.random_range(0..=u.max_key());
            assert_eq!(trie.insert(k).unwrap(), model.insert(k));
        } else {
            let idx = r.random_range(0..model.len());
            let k = *model.iter().nth(idx).unwrap();
            trie.delete(k).unwrap();
            model.remove(&k);
            assert!(trie.delete(k).is_err());
        }
        trie.audit().unwrap_or_else(|e| panic!("step {step}: {e}"));
        for _ in 0..8 {
            let q = r.random_range(0..=u.max_key());
            assert_eq!(trie.predecessor(q), model.range(..=q).next_back().copied(), "step {step} q={q}");
        }
    }
    assert_eq!(trie.len(), model.len());
    assert_eq!(trie.keys(), model.iter().copied().collect::<Vec<_>>());
}

#[test]
fn yfast_drain_and_rebuild_with_tiny_words() {
    let mut r = rng(6);
    let u = UniverseSpec::new(3).unwrap();
    let mut trie = YFastTrie::build(&KeySet::new((0..8).collect(), u).unwrap());
    let mut model: BTreeSet<Key> = (0..8).collect();
    for _ in 0..2000 {
        let k = r.random_range(0..8);
        if model.contains(&k) {
            trie.delete(k).unwrap();
            model.remove(&k);
        } else {
            trie.insert(k).unwrap();
            model.insert(k);
        }
        trie.audit().unwrap();
        for q in 0..8 {
            assert_eq!(trie.predecessor(q), model.range(..=q).next_back().copied());
        }
    }
}

#[test]
fn yfast_space_is_linear() {
    let mut r = rng(7);
    let ratios: Vec<f64> = [1usize << 8, 1 << 10, 1 << 12]
        .iter()
        .map(|&n| {
            let keys = random_keys(32, n, &mut r);
            YFastTrie::build(&keys).stored_entries() as f64 / n as f64
        })
        .collect();
    for w in ratios.windows(2) {
        assert!(w[1] / w[0] < 1.5 && w[0] / w[1] < 1.5, "{ratios:?}");
    }
    assert!(ratios.iter().all(|&c| c < 4.0), "{ratios:?}");
}
