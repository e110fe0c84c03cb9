use super::harness::{BoundCheck, Built, Instance, StructureKind};
use super::{CliError, VerifyArgs};
use crate::io;
use crate::oracle;
use crate::universe::Key;

/// Largest universe an exhaustive sweep is allowed on.
pub const MAX_VERIFY_BITS: u32 = 16;

pub(super) fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let inst = &args.instance;
    if inst.universe_bits > MAX_VERIFY_BITS {
        return Err(CliError::Usage(format!(
            "exhaustive verify limited to {MAX_VERIFY_BITS} bits (got {})",
            inst.universe_bits
        )));
    }
    let instance = Instance::load(inst)?;
    let mut built = Built::build(inst.structure, inst.epsilon, &instance)?;
    let reproducer = |q: Key, what: String| {
        CliError::Verification(format!(
            "{what}; reproduce with: verify --structure {} --epsilon {} --universe-bits {} --n {} --seed {}{} (q={q})",
            inst.structure.name(),
            inst.epsilon,
            inst.universe_bits,
            instance.keys.len(),
            inst.seed,
            inst.keys
                .as_ref()
                .map(|p| format!(" --keys {}", p.display()))
                .unwrap_or_default(),
        ))
    };
    built
        .audit()
        .map_err(|e| CliError::Verification(format!("audit after build failed: {e}")))?;

    let sweep: Vec<Key> = match (&args.query_file, inst.structure) {
        (Some(path), _) => io::read_queries(path, instance.universe)?,
        (None, _) => (0..=instance.universe.max_key()).collect(),
    };
    let audit_each = inst.structure == StructureKind::LayeredWs;
    let mut bounds = BoundCheck::new(&built, &instance);
    for &q in &sweep {
        let obs = built.query(q)?;
        let expected = oracle::predecessor(&instance.keys, q);
        if obs.answer != expected {
            return Err(reproducer(q, format!("expected {expected:?}, got {:?}", obs.answer)));
        }
        bounds
            .check(&built, &instance, q, &obs)
            .map_err(|e| reproducer(q, format!("bound violated: {e}")))?;
        if audit_each {
            built
                .audit()
                .map_err(|e| reproducer(q, format!("audit failed: {e}")))?;
        }
    }
    eprintln!(
        "ok: {} agreed with the oracle on {} queries",
        inst.structure.name(),
        sweep.len()
    );
    Ok(())
}
