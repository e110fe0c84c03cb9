use crate::error::Result;
use crate::universe::{Key, KeySet, UniverseSpec};

/// Weak predecessor search over a set of keys.
pub trait PredecessorStructure {
    /// Largest stored key `<= q`.
    fn predecessor(&self, q: Key) -> Option<Key>;

    /// Number of stored keys.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn universe(&self) -> UniverseSpec;

    /// Count of stored table entries, keys and pointers, for space audits.
    fn stored_entries(&self) -> usize;

    /// All stored keys, ascending.
    fn keys(&self) -> Vec<Key>;
}

/// Structures that can be built from a key set alone. Layers of
/// [`LayeredStructure`](crate::LayeredStructure) are built through this.
pub trait StaticBuild: Sized {
    fn build(keys: &KeySet) -> Result<Self>;
}

/// Structures that accept updates; required by the working-set layers.
pub trait DynamicStructure: PredecessorStructure {
    /// Returns `false` when `key` was already present.
    fn insert(&mut self, key: Key) -> Result<bool>;

    fn delete(&mut self, key: Key) -> Result<()>;
}
