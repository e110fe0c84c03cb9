//! Level tables of a small x-fast trie and the probe count of each query.

use biased_pred::xfast::level_probe_bound;
use biased_pred::{KeySet, UniverseSpec, XFastTrie};

fn main() -> biased_pred::Result<()> {
    let keys = KeySet::new(vec![2, 5, 11, 12], UniverseSpec::new(4)?)?;
    let trie = XFastTrie::build(&keys);
    for level in 0..=4 {
        let prefixes: Vec<String> = trie
            .level_prefixes(level)
            .iter()
            .map(|p| format!("{p:0width$b}", width = level.max(1) as usize))
            .collect();
        println!("level {level}: {}", prefixes.join(" "));
    }
    println!("probe bound for 4-bit keys: {}", level_probe_bound(4));
    for q in [0, 2, 7, 11, 13, 15] {
        let t = trie.predecessor_traced(q);
        println!("pred({q:>2}) = {:?} after {} level probes", t.answer, t.level_probes);
    }
    Ok(())
}
