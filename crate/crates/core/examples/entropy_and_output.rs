//! Entropy of a query distribution and of the induced answer distribution.
//!
//! Run with `cargo run --example entropy_and_output`.

use biased_pred::{entropy, output_distribution, KeySet, UniverseSpec, WeightedDistribution};

fn main() -> biased_pred::Result<()> {
    let universe = UniverseSpec::new(8)?;
    let keys = KeySet::new(vec![10, 40, 200], universe)?;

    // Queries cluster just above 40, with a little mass below the first key.
    let dist = WeightedDistribution::new(vec![(3, 1.0), (41, 6.0), (42, 6.0), (55, 2.0), (230, 1.0)])?;

    println!("input entropy:  {:.4} bits", entropy(&dist));
    let out = output_distribution(&keys, &dist);
    for (k, m) in out.keys().iter().zip(out.masses()) {
        println!("  p*({k:>3}) = {m:.4}");
    }
    println!("  below min = {:.4}", out.bottom_mass());
    println!("output entropy: {:.4} bits", out.entropy());
    Ok(())
}
