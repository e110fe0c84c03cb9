//! Universe and key-set types.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A universe element. Every structure in the crate works on machine words.
pub type Key = u64;

/// The universe `{0, .., 2^bits - 1}`.
///
/// The universe is never materialized; only its width is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniverseSpec {
    bits: u32,
}

impl UniverseSpec {
    pub fn new(bits: u32) -> Result<Self> {
        if (1..=64).contains(&bits) {
            Ok(Self { bits })
        } else {
            Err(Error::InvalidUniverse(bits))
        }
    }

    /// Word width `w`.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `U = 2^w`, exact.
    pub fn size(&self) -> u128 {
        1u128 << self.bits
    }

    /// `U - 1`.
    pub fn max_key(&self) -> Key {
        if self.bits == 64 {
            Key::MAX
        } else {
            (1 << self.bits) - 1
        }
    }

    pub fn contains(&self, key: Key) -> bool {
        key <= self.max_key()
    }

    pub fn check(&self, key: Key) -> Result<()> {
        if self.contains(key) {
            Ok(())
        } else {
            Err(Error::KeyOutOfUniverse {
                key,
                bits: self.bits,
            })
        }
    }
}

/// A nonempty, strictly increasing sequence of keys inside a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeySet {
    keys: Vec<Key>,
    universe: UniverseSpec,
}

impl KeySet {
    /// Validates an already sorted sequence.
    pub fn new(keys: Vec<Key>, universe: UniverseSpec) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::EmptyKeySet);
        }
        for (index, pair) in keys.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(Error::NotStrictlyIncreasing {
                    index: index + 1,
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        universe.check(*keys.last().unwrap())?;
        Ok(Self { keys, universe })
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut keys: Vec<Key>, universe: UniverseSpec) -> Result<Self> {
        keys.sort_unstable();
        keys.dedup();
        Self::new(keys, universe)
    }

    pub fn universe(&self) -> UniverseSpec {
        self.universe
    }

    pub fn keys(&self) -> &[Key] {
        &self.keys
    }

    pub fn into_keys(self) -> Vec<Key> {
        self.keys
    }

    pub fn min(&self) -> Key {
        self.keys[0]
    }

    pub fn max(&self) -> Key {
        self.keys[self.keys.len() - 1]
    }

    /// Position of the weak predecessor of `q`, if any.
    pub fn predecessor_index(&self, q: Key) -> Option<usize> {
        self.keys.partition_point(|&k| k <= q).checked_sub(1)
    }
}

impl Deref for KeySet {
    type Target = [Key];

    fn deref(&self) -> &[Key] {
        &self.keys
    }
}
