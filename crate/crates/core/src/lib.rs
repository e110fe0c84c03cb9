//! Distribution-sensitive predecessor search over bounded integer universes.
//!
//! Keys are unsigned integers drawn from a universe `{0, .., 2^w - 1}`. For a
//! static key set and a (known or unknown) query distribution the crate
//! offers:
//!
//! - [`XFastTrie`] and [`YFastTrie`], the unbiased `O(log log U)` building
//!   blocks;
//! - [`HashFront`], a hash table of high-probability queries with their
//!   precomputed answers in front of a y-fast trie, with two threshold rules
//!   ([`ThresholdMode`]);
//! - [`LayeredStructure`], layers of doubly-exponential size ranked by output
//!   probability, searched front to back with successor-pointer early stop;
//! - [`WorkingSetStructure`], the same layering driven by recency, with
//!   promotion on every reported predecessor.
//!
//! Every structure answers *weak* predecessor queries: the largest stored key
//! `<= q`. [`oracle::predecessor`] is the brute-force reference they are all
//! tested against.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory
//! (`cargo run --example <name>`); the `biased-pred` binary wraps the
//! generate/bench/verify harness in [`cli`].

pub mod cli;
pub mod distribution;
mod error;
pub mod hashfront;
pub mod io;
pub mod layered;
pub mod oracle;
mod structure;
pub mod universe;
pub mod workload;
pub mod xfast;
pub mod yfast;

pub use distribution::{entropy, output_distribution, OutputDistribution, WeightedDistribution};
pub use error::{Error, Result};
pub use hashfront::{HashFront, ThresholdMode};
pub use layered::{LayeredStructure, WorkingSetStructure};
pub use structure::{DynamicStructure, PredecessorStructure, StaticBuild};
pub use universe::{Key, KeySet, UniverseSpec};
pub use xfast::XFastTrie;
pub use yfast::YFastTrie;
