use std::fs;

use super::harness::workload_kind;
use super::{CliError, GenArgs};
use crate::io;
use crate::universe::UniverseSpec;
use crate::workload::{self, streams};

pub(super) fn run(args: &GenArgs) -> Result<(), CliError> {
    let text = match args.dist {
        Some(kind) => {
            let path = args
                .support
                .as_ref()
                .ok_or_else(|| CliError::Usage("--dist requires --support FILE".into()))?;
            // Support order is rank order, so it is read as a plain key list.
            let support = io::read_queries(path, UniverseSpec::new(64)?)?;
            let dist = workload::generate_distribution(&workload_kind(kind, &args.weights), &support)?;
            io::format_weights(&dist)
        }
        None => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("gen needs --n (keys) or --dist (weights)".into()))?;
            let universe = UniverseSpec::new(args.universe_bits)?;
            let keys = workload::random_keys(universe, n, &mut workload::stream(args.seed, streams::KEYS))?;
            io::format_keys(&keys)
        }
    };
    fs::write(&args.out, text).map_err(|e| CliError::Usage(format!("{}: {e}", args.out.display())))
}
