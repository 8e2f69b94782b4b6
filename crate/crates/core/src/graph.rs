//! Immutable simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Set of vertices backed by a bitset of length `n`.
pub type VertexSet = FixedBitSet;

/// A finite simple graph. Adjacency is stored as one bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::input(format!(
                    "edge ({i}, {j}) has an endpoint outside 0..{n}"
                )));
            }
            if i == j {
                return Err(Error::input(format!("self-loop at vertex {i}")));
            }
            if !g.adj[i].contains(j) {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
                g.edge_count += 1;
            }
        }
        debug_assert!(g.is_well_formed());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |i| {
            self.adj[i]
                .ones()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// True iff some vertex has an empty neighborhood.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|nb| nb.is_clear())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for u in self.adj[v].ones() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (a, &x) in vertices.iter().enumerate() {
            for (b, &y) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(x, y) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    pub(crate) fn is_well_formed(&self) -> bool {
        let symmetric = self.vertices().all(|i| {
            self.adj[i]
                .ones()
                .all(|j| j < self.n && self.adj[j].contains(i))
        });
        let irreflexive = self.vertices().all(|i| !self.adj[i].contains(i));
        let total: usize = self.adj.iter().map(|nb| nb.count_ones(..)).sum();
        symmetric && irreflexive && total == 2 * self.edge_count
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `i j`.
    /// Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, line)| (no + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

        let (header_no, header) = lines
            .next()
            .ok_or_else(|| Error::input("edge list is empty; expected header \"n m\""))?;
        let [n, m] = parse_pair(header, header_no)?;

        let mut edges = Vec::with_capacity(m);
        for (no, line) in lines {
            edges.push(parse_pair(line, no)?);
        }
        if edges.len() != m {
            return Err(Error::input(format!(
                "header announces {m} edges but {} edge lines follow",
                edges.len()
            )));
        }
        Graph::from_edges(n, edges.into_iter().map(|[i, j]| (i, j)))
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edge_count);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::input(format!(
            "line {line_no}: expected two integers, found {:?}",
            line
        )));
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| {
            Error::input(format!(
                "line {line_no}: {s:?} is not a non-negative integer"
            ))
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_has_one_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(!g.has_isolated_vertex());
    }

    #[test]
    fn c5_is_two_regular() {
        let g = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_well_formed());
    }

    #[test]
    fn rejects_self_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn isolated_vertex_detection() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(g.has_isolated_vertex());
        assert!(!g.is_connected());
    }

    #[test]
    fn edge_list_round_trip_with_comments() {
        let text = "# a path\n4 3\n\n0 1\n# middle\n1 2\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n2 2\n").is_err());
    }

    #[test]
    fn bfs_on_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![Some(0), Some(1), Some(2), Some(3)]);
    }
}
