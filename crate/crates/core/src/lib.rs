//! Counting perfect matchings, permanents and 2-factors, with closed-form
//! bounds, extremal constructions and exhaustive isomorph-free searches.
//!
//! Strategies that come in several variants (bounds, constructions,
//! counters, sweeps) are trait objects collected in name-keyed
//! [`registry::Registry`] values, so callers pick them at runtime.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod count;
pub mod counters;
pub mod error;
pub mod format;
pub mod graph;
pub mod permanent;
pub mod registry;
pub mod search;

pub use count::Count;
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Digraph, Graph, ZeroOneMatrix};
