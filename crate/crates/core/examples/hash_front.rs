//! Hash table of likely queries in front of a y-fast trie, in both threshold
//! modes.

use biased_pred::hashfront::expected_probe_bound;
use biased_pred::workload::{generate_distribution, random_keys, sample_queries, stream, streams, WorkloadKind};
use biased_pred::{HashFront, ThresholdMode, UniverseSpec};

fn main() -> biased_pred::Result<()> {
    let universe = UniverseSpec::new(24)?;
    let keys = random_keys(universe, 5000, &mut stream(7, streams::KEYS))?;
    let support = random_keys(universe, 20_000, &mut stream(7, streams::SUPPORT))?;
    let dist = generate_distribution(&WorkloadKind::Zipf { s: 1.1 }, support.keys())?;
    let queries = sample_queries(&dist, &mut stream(7, streams::QUERIES), 50_000);

    for mode in [ThresholdMode::PowerOfUniverse(0.5), ThresholdMode::PowerOfLogUniverse(0.5)] {
        let front = HashFront::build(&keys, &dist, mode)?;
        let mut hits = 0;
        let mut level_probes = 0u64;
        for &q in &queries {
            let t = front.predecessor_traced(q);
            hits += t.hit as usize;
            level_probes += t.level_probes as u64;
        }
        let report = expected_probe_bound(&dist, mode, universe)?;
        println!("{mode:?}");
        println!("  threshold {:.3e}, table {} of at most {:.1}", front.threshold(), front.table_len(), front.capacity_bound());
        println!("  hit rate {:.3} (analytic {:.3})", hits as f64 / queries.len() as f64, report.hit_probability);
        println!("  mean level probes {:.3}", level_probes as f64 / queries.len() as f64);
    }
    Ok(())
}
