//! Hypertree decompositions of bounded width.
//!
//! [`engine::Decomposer`] runs the det-k-decomp backtracking search with its
//! failure and success memo tables. [`validate::validate`] independently
//! checks a decomposition, and [`gyo::gyo_reduce`] decides α-acyclicity
//! (hypertree width 1).

pub mod cli;
pub mod cover;
pub mod engine;
pub mod format;
pub mod gyo;
pub mod hypergraph;
pub mod set;
pub mod validate;

pub use cover::{covers, CoverMode};
pub use engine::{
    cache_key, det_k_decomp, Config, Decomposer, EmptyComponents, EngineError, HTNode, SepCompKey, Stats,
};
pub use format::{parse_hypergraph, serialize_decomposition, Format};
pub use gyo::gyo_reduce;
pub use hypergraph::{Hypergraph, HypergraphError, Separation};
pub use set::{EdgeId, EdgeSet, VertexId, VertexSet};
pub use validate::{validate, ValidationReport};
