//! Generalized Mycielskian graphs and their symmetry invariants.
//!
//! The crate builds `μ^(t)(G)` with full level bookkeeping, enumerates
//! automorphism groups exactly, computes determining numbers, distinguishing
//! numbers and the cost of 2-distinguishing with witnesses, implements the
//! twin-class quotient machinery, and checks the structural results relating
//! these quantities on concrete instances ([`harness`]).

pub mod automorphism;
pub mod error;
pub mod family;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod iso;
pub mod mycielskian;
pub mod search;
pub mod twins;

pub use automorphism::{
    automorphism_group, is_automorphism, pointwise_stabilizer, setwise_stabilizer_is_trivial,
    AutGroup, Permutation, DEFAULT_GROUP_CAP,
};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Graph, VertexSet};
pub use invariants::{
    binary_level_coloring, cost_of_2_distinguishing, determining_number, diagonal_coloring,
    distinguishing_number, is_determining_set, is_distinguishing_coloring, Coloring,
    InvariantResult, InvariantValue, Witness,
};
pub use iso::{find_isomorphism, is_isomorphic};
pub use mycielskian::{mycielskian_t, LayeredGraph, VertexLabel};
pub use search::DEFAULT_SUBSET_BUDGET;
pub use twins::{
    minimum_twin_cover, quotient_graph, twin_partition, QuotientGraph, TwinCover, TwinPartition,
};

/// Schema tag carried by every JSON report.
pub const SCHEMA: &str = "myc-sym/1";
