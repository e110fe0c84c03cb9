//! Layered predecessor structures.
//!
//! The key set is split into layers `D_1, D_2, ..` holding `2^(2^j)` keys
//! each (4, 16, 256, 65536, ..; the last layer takes the remainder). Every
//! layer is an independent predecessor structure over the whole universe, and
//! every key remembers its successor in the full set. A query walks the layers
//! in order and stops as soon as the best candidate seen so far is followed in
//! the full set by a key larger than the query.
//!
//! [`LayeredStructure`] ranks keys by how likely they are to be the answer;
//! [`WorkingSetStructure`] ranks them by how recently they were reported and
//! re-ranks after every query.

mod static_layers;
mod working_set;

pub use static_layers::LayeredStructure;
pub use working_set::WorkingSetStructure;

use rustc_hash::FxHashMap;

use crate::structure::PredecessorStructure;
use crate::universe::{Key, KeySet};

/// Capacity `2^(2^j)` of layer `j` (1-based), saturating at `usize::MAX`.
pub fn layer_capacity(j: usize) -> usize {
    match 1u32.checked_shl(j as u32) {
        Some(exp) if exp < usize::BITS => 1usize << exp,
        _ => usize::MAX,
    }
}

/// `2^-(2^(j-1))`: the largest output probability a key answered in layer
/// `j >= 2` (1-based) can have, since layer `j - 1` is full of keys at least
/// as likely.
pub fn layer_mass_bound(j: usize) -> f64 {
    (-(2f64.powi(j as i32 - 1))).exp2()
}

/// Layer sizes for `n` keys: full layers and one partial remainder.
pub fn layer_sizes(n: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut left = n;
    let mut j = 1;
    while left > 0 {
        let take = left.min(layer_capacity(j));
        sizes.push(take);
        left -= take;
        j += 1;
    }
    sizes
}

/// Answer of a layered query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayeredAnswer {
    pub answer: Option<Key>,
    pub layers_probed: usize,
    /// 0-based index of the layer that holds the answer.
    pub layer: Option<usize>,
}

pub(crate) fn successor_pointers(keys: &KeySet) -> FxHashMap<Key, Option<Key>> {
    keys.iter()
        .enumerate()
        .map(|(i, &k)| (k, keys.get(i + 1).copied()))
        .collect()
}

/// Front-to-back search with early stopping on the best candidate so far.
pub(crate) fn search<'a, L, I>(layers: I, successors: &FxHashMap<Key, Option<Key>>, q: Key) -> LayeredAnswer
where
    L: PredecessorStructure + 'a,
    I: IntoIterator<Item = &'a L>,
{
    let mut best: Option<(Key, usize)> = None;
    let mut probed = 0;
    for (j, layer) in layers.into_iter().enumerate() {
        probed += 1;
        if let Some(candidate) = layer.predecessor(q) {
            if best.is_none_or(|(b, _)| candidate > b) {
                best = Some((candidate, j));
            }
        }
        if let Some((b, _)) = best {
            match successors[&b] {
                Some(next) if next <= q => {}
                _ => break,
            }
        }
    }
    LayeredAnswer {
        answer: best.map(|(b, _)| b),
        layers_probed: probed,
        layer: best.map(|(_, j)| j),
    }
}
