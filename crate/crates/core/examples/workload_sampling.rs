//! Seeded workload generation: the same seed gives the same keys and queries.

use biased_pred::workload::{random_keys, stream, streams, WorkloadKind, WorkloadSpec};
use biased_pred::{entropy, UniverseSpec};

fn main() -> biased_pred::Result<()> {
    let universe = UniverseSpec::new(16)?;
    let support = random_keys(universe, 1000, &mut stream(11, streams::SUPPORT))?;
    for kind in [WorkloadKind::Uniform, WorkloadKind::Geometric { ratio: 0.8 }, WorkloadKind::Zipf { s: 1.5 }] {
        let spec = WorkloadSpec {
            kind,
            support: support.keys().to_vec(),
            seed: 11,
            num_queries: 8,
        };
        let dist = spec.distribution()?;
        let queries = spec.queries()?;
        assert_eq!(queries, spec.queries()?);
        println!("{:?}: H = {:.3} bits, first queries {:?}", spec.kind, entropy(&dist), queries);
    }
    Ok(())
}
