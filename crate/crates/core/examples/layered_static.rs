//! Layers ranked by answer probability. Skewed workloads stop in the first
//! layers.

use biased_pred::workload::{generate_distribution, random_keys, sample_queries, stream, streams, WorkloadKind};
use biased_pred::{LayeredStructure, UniverseSpec};

fn main() -> biased_pred::Result<()> {
    let universe = UniverseSpec::new(20)?;
    let keys = random_keys(universe, 4096, &mut stream(3, streams::KEYS))?;

    for kind in [
        WorkloadKind::PointMass,
        WorkloadKind::Geometric { ratio: 0.5 },
        WorkloadKind::Zipf { s: 1.0 },
        WorkloadKind::Uniform,
    ] {
        let dist = generate_distribution(&kind, keys.keys())?;
        let layered: LayeredStructure = LayeredStructure::build(&keys, &dist)?;
        let queries = sample_queries(&dist, &mut stream(3, streams::QUERIES), 20_000);
        let mut depth = vec![0usize; layered.layers().len() + 1];
        for &q in &queries {
            depth[layered.query(q).layers_probed] += 1;
        }
        let mean: f64 = depth.iter().enumerate().map(|(d, c)| (d * c) as f64).sum::<f64>() / queries.len() as f64;
        println!(
            "{kind:?}: H* = {:.2}, layers {:?}, mean probed {mean:.3}",
            layered.output_distribution().entropy(),
            layered.layer_lens()
        );
    }
    Ok(())
}
