//! Self-adjusting layers: recently reported keys move to the front.

use biased_pred::oracle::WorkingSetOracle;
use biased_pred::{KeySet, UniverseSpec, WorkingSetStructure};

fn main() -> biased_pred::Result<()> {
    let keys = KeySet::new((0..1000).map(|i| i * 64).collect(), UniverseSpec::new(16)?)?;
    let mut ws: WorkingSetStructure = WorkingSetStructure::build(&keys)?;
    let mut tracker = WorkingSetOracle::new(keys.len());
    println!("layers {:?}", ws.layer_lens());

    // Four hot keys queried in rotation, then a cold key.
    let hot = [64_000, 32_010, 20_000, 50_050];
    for round in 0..3 {
        let probes: Vec<usize> = hot
            .iter()
            .map(|&q| {
                let a = ws.query(q).unwrap();
                tracker.report(a.answer);
                a.layers_probed
            })
            .collect();
        println!("round {round}: layers probed {probes:?}");
    }
    let a = ws.query(40_000)?;
    println!(
        "cold query: answer {:?} from layer {:?}, {} probed, w = {}",
        a.answer,
        a.layer.map(|j| j + 1),
        a.layers_probed,
        tracker.working_set_number(a.answer.unwrap())
    );
    ws.audit().expect("capacities hold");
    Ok(())
}
