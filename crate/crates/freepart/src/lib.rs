//! Constructive partitions for graphs that exclude star forests, matchings,
//! unions of cliques and their complements, with verifiers and brute-force
//! oracles for every guarantee.

pub mod error;
pub mod formats;
pub mod bounds;
pub mod encoding;
pub mod enumerate;
pub mod graph;
pub mod matching;
pub mod partition;
pub mod patterns;
pub mod stars;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{relation, BipartiteGraph, Graph, Relation, Side, VertexSet};
pub use partition::{Block, BlockKind, Guarantee, LabelledPartition};
pub use patterns::{Embedding, Family, Orientation, PatternSpec};
