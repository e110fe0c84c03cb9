//! Plain-text file formats.
//!
//! - keys: one decimal key per line, strictly ascending;
//! - weights: `key<TAB>weight` per line, weight a non-negative decimal;
//! - queries: one decimal key per line, any order.
//!
//! Blank lines are ignored. Errors carry 1-based line numbers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::distribution::WeightedDistribution;
use crate::error::{Error, Result};
use crate::universe::{Key, KeySet, UniverseSpec};

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_key(line: usize, field: &str, universe: Option<UniverseSpec>) -> Result<Key> {
    let key: Key = field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected an unsigned decimal key, got {field:?}"),
    })?;
    if let Some(u) = universe {
        if !u.contains(key) {
            return Err(Error::Parse {
                line,
                message: format!("key {key} outside a {}-bit universe", u.bits()),
            });
        }
    }
    Ok(key)
}

pub fn parse_keys(text: &str, universe: UniverseSpec) -> Result<KeySet> {
    let mut keys: Vec<Key> = Vec::new();
    for (line, field) in lines(text) {
        let key = parse_key(line, field, Some(universe))?;
        if let Some(&prev) = keys.last() {
            if key <= prev {
                return Err(Error::Parse {
                    line,
                    message: format!("key {key} does not exceed previous key {prev}"),
                });
            }
        }
        keys.push(key);
    }
    KeySet::new(keys, universe)
}

pub fn format_keys(keys: &[Key]) -> String {
    let mut out = String::with_capacity(keys.len() * 8);
    for k in keys {
        writeln!(out, "{k}").unwrap();
    }
    out
}

pub fn parse_weights(text: &str) -> Result<WeightedDistribution> {
    let mut entries = Vec::new();
    for (line, row) in lines(text) {
        let (key, weight) = row.split_once('\t').ok_or_else(|| Error::Parse {
            line,
            message: "expected key<TAB>weight".into(),
        })?;
        let key = parse_key(line, key.trim(), None)?;
        let weight: f64 = weight.trim().parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad weight {weight:?}"),
        })?;
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(Error::Parse {
                line,
                message: format!("weight must be finite and non-negative, got {weight}"),
            });
        }
        entries.push((key, weight));
    }
    WeightedDistribution::new(entries)
}

pub fn format_weights(dist: &WeightedDistribution) -> String {
    let mut out = String::new();
    for (k, w) in dist.entries() {
        writeln!(out, "{k}\t{w}").unwrap();
    }
    out
}

pub fn parse_queries(text: &str, universe: UniverseSpec) -> Result<Vec<Key>> {
    lines(text)
        .map(|(line, field)| parse_key(line, field, Some(universe)))
        .collect()
}

pub fn read_keys(path: &Path, universe: UniverseSpec) -> Result<KeySet> {
    parse_keys(&fs::read_to_string(path)?, universe)
}

pub fn read_weights(path: &Path) -> Result<WeightedDistribution> {
    parse_weights(&fs::read_to_string(path)?)
}

pub fn read_queries(path: &Path, universe: UniverseSpec) -> Result<Vec<Key>> {
    parse_queries(&fs::read_to_string(path)?, universe)
}
