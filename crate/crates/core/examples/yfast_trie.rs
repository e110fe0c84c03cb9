//! A y-fast trie under inserts and deletes.

use biased_pred::workload::{random_keys, stream, streams};
use biased_pred::{DynamicStructure, PredecessorStructure, UniverseSpec, YFastTrie};

fn main() -> biased_pred::Result<()> {
    let universe = UniverseSpec::new(32)?;
    let keys = random_keys(universe, 10_000, &mut stream(1, streams::KEYS))?;
    let mut trie = YFastTrie::build(&keys);
    let (lo, hi) = trie.bucket_size_band();
    println!(
        "{} keys in {} buckets (band [{lo}, {hi}]), {} stored entries",
        trie.len(),
        trie.buckets().len(),
        trie.stored_entries()
    );

    let q = keys[5000] + 1;
    let t = trie.predecessor_traced(q);
    println!("pred({q}) = {:?}: {} level probes, {} buckets", t.answer, t.level_probes, t.buckets_searched);

    // Remove every other key and check the structure still holds together.
    for &k in keys.iter().step_by(2) {
        trie.delete(k)?;
    }
    trie.audit().expect("invariants hold");
    println!("after deletes: {} keys in {} buckets", trie.len(), trie.buckets().len());
    println!("pred({q}) = {:?}", trie.predecessor(q));

    trie.insert(q)?;
    println!("after insert: pred({q}) = {:?}", trie.predecessor(q));
    Ok(())
}
