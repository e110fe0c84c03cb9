use clap::ValueEnum;

use super::{CliError, DistKind, InstanceArgs, WeightArgs};
use crate::distribution::WeightedDistribution;
use crate::hashfront::{HashFront, ThresholdMode};
use crate::io;
use crate::layered::{LayeredStructure, WorkingSetStructure};
use crate::structure::PredecessorStructure;
use crate::universe::{Key, KeySet, UniverseSpec};
use crate::workload::{self, streams, WorkloadKind};
use crate::xfast::XFastTrie;
use crate::yfast::YFastTrie;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    Xfast,
    Yfast,
    #[value(name = "hashfront-a")]
    HashfrontA,
    #[value(name = "hashfront-b")]
    HashfrontB,
    Layered,
    #[value(name = "layered-ws")]
    LayeredWs,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Xfast => "xfast",
            StructureKind::Yfast => "yfast",
            StructureKind::HashfrontA => "hashfront-a",
            StructureKind::HashfrontB => "hashfront-b",
            StructureKind::Layered => "layered",
            StructureKind::LayeredWs => "layered-ws",
        }
    }

    pub fn mode(self, epsilon: f64) -> Option<ThresholdMode> {
        match self {
            StructureKind::HashfrontA => Some(ThresholdMode::PowerOfUniverse(epsilon)),
            StructureKind::HashfrontB => Some(ThresholdMode::PowerOfLogUniverse(epsilon)),
            _ => None,
        }
    }
}

pub(crate) fn workload_kind(kind: DistKind, weights: &WeightArgs) -> WorkloadKind {
    match kind {
        DistKind::Uniform => WorkloadKind::Uniform,
        DistKind::Geometric => WorkloadKind::Geometric { ratio: weights.ratio },
        DistKind::Zipf => WorkloadKind::Zipf { s: weights.s },
        DistKind::Pointmass => WorkloadKind::PointMass,
    }
}

/// Keys and distribution resolved from the instance flags.
pub(crate) struct Instance {
    pub universe: UniverseSpec,
    pub keys: KeySet,
    pub dist: WeightedDistribution,
}

impl Instance {
    pub fn load(args: &InstanceArgs) -> Result<Self, CliError> {
        let universe = UniverseSpec::new(args.universe_bits)?;
        let keys = match &args.keys {
            Some(path) => io::read_keys(path, universe)?,
            None => workload::random_keys(universe, args.n, &mut workload::stream(args.seed, streams::KEYS))?,
        };
        let dist = match &args.dist {
            Some(path) => io::read_weights(path)?,
            None => {
                let kind = workload_kind(args.dist_kind.unwrap_or(DistKind::Uniform), &args.weights);
                let support: Vec<Key> = match (&args.support, args.support_size) {
                    (Some(path), _) => io::read_queries(path, universe)?,
                    (None, Some(size)) => workload::random_keys(
                        universe,
                        size,
                        &mut workload::stream(args.seed, streams::SUPPORT),
                    )?
                    .into_keys(),
                    (None, None) => keys.keys().to_vec(),
                };
                workload::generate_distribution(&kind, &support)?
            }
        };
        if let Some(max) = dist.max_key() {
            universe.check(max)?;
        }
        Ok(Self { universe, keys, dist })
    }
}

/// What one query observed, beyond its answer.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Observation {
    pub answer: Option<Key>,
    pub layers_probed: Option<usize>,
    pub layer: Option<usize>,
    pub level_probes: Option<u32>,
    pub hit: Option<bool>,
}

pub(crate) enum Built {
    XFast(XFastTrie),
    YFast(YFastTrie),
    Front(HashFront),
    Layered(LayeredStructure),
    WorkingSet(WorkingSetStructure),
}

impl Built {
    pub fn build(kind: StructureKind, epsilon: f64, instance: &Instance) -> Result<Self, CliError> {
        let keys = &instance.keys;
        Ok(match kind {
            StructureKind::Xfast => Built::XFast(XFastTrie::build(keys)),
            StructureKind::Yfast => Built::YFast(YFastTrie::build(keys)),
            StructureKind::HashfrontA | StructureKind::HashfrontB => Built::Front(HashFront::build(
                keys,
                &instance.dist,
                kind.mode(epsilon).unwrap(),
            )?),
            StructureKind::Layered => Built::Layered(LayeredStructure::build(keys, &instance.dist)?),
            StructureKind::LayeredWs => Built::WorkingSet(WorkingSetStructure::build(keys)?),
        })
    }

    pub fn query(&mut self, q: Key) -> Result<Observation, CliError> {
        Ok(match self {
            Built::XFast(t) => {
                let r = t.predecessor_traced(q);
                Observation {
                    answer: r.answer,
                    level_probes: Some(r.level_probes),
                    ..Default::default()
                }
            }
            Built::YFast(t) => {
                let r = t.predecessor_traced(q);
                Observation {
                    answer: r.answer,
                    level_probes: Some(r.level_probes),
                    ..Default::default()
                }
            }
            Built::Front(f) => {
                let r = f.predecessor_traced(q);
                Observation {
                    answer: r.answer,
                    level_probes: Some(r.level_probes),
                    hit: Some(r.hit),
                    ..Default::default()
                }
            }
            Built::Layered(l) => {
                let r = l.query(q);
                Observation {
                    answer: r.answer,
                    layers_probed: Some(r.layers_probed),
                    layer: r.layer,
                    ..Default::default()
                }
            }
            Built::WorkingSet(ws) => {
                let r = ws.query(q)?;
                Observation {
                    answer: r.answer,
                    layers_probed: Some(r.layers_probed),
                    layer: r.layer,
                    ..Default::default()
                }
            }
        })
    }

    pub fn audit(&self) -> Result<(), String> {
        match self {
            Built::XFast(_) => Ok(()),
            Built::YFast(t) => t.audit(),
            Built::Front(f) => {
                if (f.table_len() as f64) > f.capacity_bound() {
                    return Err(format!(
                        "table holds {} entries, bound {}",
                        f.table_len(),
                        f.capacity_bound()
                    ));
                }
                f.fallback().audit()
            }
            Built::Layered(l) => l.audit(),
            Built::WorkingSet(ws) => ws.audit(),
        }
    }

    pub fn stored_entries(&self) -> usize {
        match self {
            Built::XFast(t) => t.stored_entries(),
            Built::YFast(t) => t.stored_entries(),
            Built::Front(f) => f.stored_entries(),
            Built::Layered(l) => l.stored_entries(),
            Built::WorkingSet(ws) => ws.stored_entries(),
        }
    }

    pub fn table_size(&self) -> Option<usize> {
        match self {
            Built::Front(f) => Some(f.table_len()),
            _ => None,
        }
    }
}

/// Per-query checks of the probe-count bounds each structure promises.
pub(crate) struct BoundCheck {
    level_limit: u32,
    front_threshold: Option<f64>,
    working_set: Option<crate::oracle::WorkingSetOracle>,
}

impl BoundCheck {
    pub fn new(built: &Built, instance: &Instance) -> Self {
        Self {
            level_limit: crate::xfast::level_probe_bound(instance.universe.bits()),
            front_threshold: match built {
                Built::Front(f) => Some(f.threshold()),
                _ => None,
            },
            working_set: match built {
                Built::WorkingSet(_) => Some(crate::oracle::WorkingSetOracle::new(instance.keys.len())),
                _ => None,
            },
        }
    }

    /// Checks one observation for query `q`; must be called for every query
    /// in order so the working-set replay stays in step.
    pub fn check(&mut self, built: &Built, instance: &Instance, q: Key, obs: &Observation) -> Result<(), String> {
        if let Some(probes) = obs.level_probes {
            if probes > self.level_limit {
                return Err(format!("{probes} level probes exceed {}", self.level_limit));
            }
        }
        if let (Some(threshold), Some(hit)) = (self.front_threshold, obs.hit) {
            let expected = crate::distribution::meets_threshold(instance.dist.probability(q), threshold);
            if hit != expected {
                return Err(format!("table membership of {q} is {hit}, threshold rule says {expected}"));
            }
            if hit && obs.level_probes != Some(0) {
                return Err("table hit still searched the trie".into());
            }
        }
        let (Some(answer), Some(layer)) = (obs.answer, obs.layer.map(|j| j + 1)) else {
            if let Some(ws) = &mut self.working_set {
                ws.report(obs.answer);
            }
            return Ok(());
        };
        match built {
            Built::Layered(l) if layer >= 2 => {
                let mass = l.output_distribution().mass_of(answer);
                let bound = crate::layered::layer_mass_bound(layer);
                if mass > bound * (1.0 + crate::distribution::THRESHOLD_REL_TOLERANCE) {
                    return Err(format!("answer {answer} in layer {layer} has p* {mass} > {bound}"));
                }
            }
            Built::WorkingSet(_) => {
                let ws = self.working_set.as_mut().unwrap();
                if layer >= 2 && ws.was_reported(answer) {
                    let needed = crate::layered::layer_capacity(layer - 1);
                    let got = ws.working_set_number(answer);
                    if got < needed {
                        return Err(format!(
                            "answer {answer} found in layer {layer} with working-set number {got} < {needed}"
                        ));
                    }
                }
                ws.report(Some(answer));
            }
            _ => {}
        }
        Ok(())
    }
}
