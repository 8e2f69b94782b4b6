//! Generalized Mycielskian `μ^(t)(G)` with level bookkeeping.
//!
//! Vertex `u_i^s` (level `s`, original index `i`) has id `s * n + i`; the
//! shadow master `w` has id `(t + 1) * n`. Level 0 is a copy of the base graph.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Layer { level: usize, index: usize },
    ShadowMaster,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Layer { level, index } => write!(f, "u{index}^{level}"),
            VertexLabel::ShadowMaster => f.write_str("w"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    graph: Graph,
    base_n: usize,
    levels: usize,
}

/// Builds `μ^(t)(g)` for `t >= 1`.
pub fn mycielskian_t(g: &Graph, t: usize) -> Result<LayeredGraph> {
    if t < 1 {
        return Err(Error::input(
            "the Mycielskian needs at least one shadow level (t >= 1)",
        ));
    }
    if g.vertex_count() == 0 {
        return Err(Error::input("the base graph must have at least one vertex"));
    }
    let n = g.vertex_count();
    let id = |s: usize, i: usize| s * n + i;
    let w = (t + 1) * n;

    let mut edges = Vec::with_capacity((2 * t + 1) * g.edge_count() + n);
    for (i, j) in g.edges() {
        edges.push((id(0, i), id(0, j)));
        for s in 0..t {
            edges.push((id(s, i), id(s + 1, j)));
            edges.push((id(s, j), id(s + 1, i)));
        }
    }
    edges.extend((0..n).map(|i| (id(t, i), w)));

    let graph = Graph::from_edges(w + 1, edges)?;
    debug_assert_eq!(graph.edge_count(), (2 * t + 1) * g.edge_count() + n);
    Ok(LayeredGraph {
        graph,
        base_n: n,
        levels: t,
    })
}

impl LayeredGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// Number of shadow levels `t`.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn shadow_master(&self) -> usize {
        (self.levels + 1) * self.base_n
    }

    /// Id of `u_index^level`.
    pub fn vertex(&self, level: usize, index: usize) -> usize {
        assert!(
            level <= self.levels && index < self.base_n,
            "u{index}^{level} out of range"
        );
        level * self.base_n + index
    }

    /// Tag of vertex `v`. Panics if `v` is out of range.
    pub fn level_of(&self, v: usize) -> VertexLabel {
        assert!(v < self.graph.vertex_count(), "vertex {v} out of range");
        if v == self.shadow_master() {
            VertexLabel::ShadowMaster
        } else {
            VertexLabel::Layer {
                level: v / self.base_n,
                index: v % self.base_n,
            }
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.level_of(v).to_string()
    }

    /// All ids at level `s`, in index order.
    pub fn level_vertices(&self, s: usize) -> std::ops::Range<usize> {
        s * self.base_n..(s + 1) * self.base_n
    }

    /// The copy of the base graph sitting at level 0.
    pub fn base_copy(&self) -> Graph {
        let ids: Vec<usize> = self.level_vertices(0).collect();
        self.graph.induced_subgraph(&ids)
    }
}
