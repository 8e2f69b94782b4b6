//! Colour refinement and backtracking search for structure-preserving bijections.
//!
//! Both the isomorphism test and automorphism enumeration run the same search:
//! vertices of the source graph are assigned in index order, candidates are
//! tried in increasing order among the target vertices of the same refined
//! colour, and every new pair is checked for adjacency consistency against all
//! earlier pairs. Solutions therefore come out in lexicographic order of their
//! image sequence.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// Iterated degree / neighbour-colour refinement run jointly over `graphs`, so
/// colour ids are comparable between them. Returns one colour vector per graph.
pub fn refine_colors(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| g.vertices().map(|v| g.degree(v)).collect())
        .collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        for (g, col) in graphs.iter().zip(&colors) {
            sigs.push(
                g.vertices()
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).ones().map(|u| col[u]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect(),
            );
        }
        let mut ids = BTreeMap::new();
        for sig in sigs.iter().flatten() {
            ids.entry(sig.clone()).or_insert(0);
        }
        for (k, id) in ids.values_mut().enumerate() {
            *id = k;
        }
        colors = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| ids[s]).collect())
            .collect();
        let next = count_classes(&colors);
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Enumerates bijections `source -> target` preserving adjacency and
/// non-adjacency, passing each to `visit` in lexicographic order.
/// `node_cap` bounds the number of partial assignments explored.
pub(crate) fn for_each_isomorphism<F>(
    source: &Graph,
    target: &Graph,
    node_cap: u64,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = source.vertex_count();
    if n != target.vertex_count() || source.edge_count() != target.edge_count() {
        return Ok(());
    }
    let colors = refine_colors(&[source, target]);
    let (cs, ct) = (&colors[0], &colors[1]);
    let mut hist_s = cs.clone();
    let mut hist_t = ct.clone();
    hist_s.sort_unstable();
    hist_t.sort_unstable();
    if hist_s != hist_t {
        return Ok(());
    }

    let mut search = Search {
        source,
        target,
        cs,
        ct,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        node_cap,
    };
    let _ = search.extend(0, &mut visit)?;
    Ok(())
}

struct Search<'a> {
    source: &'a Graph,
    target: &'a Graph,
    cs: &'a [usize],
    ct: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    node_cap: u64,
}

impl Search<'_> {
    fn extend<F>(&mut self, v: usize, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.image.len();
        if v == n {
            return Ok(visit(&self.image));
        }
        for x in 0..n {
            if self.used[x] || self.ct[x] != self.cs[v] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_cap {
                return Err(Error::Resource {
                    what: "backtrack nodes",
                    cap: self.node_cap,
                    partial: self.nodes,
                });
            }
            let consistent = (0..v)
                .all(|u| self.source.has_edge(u, v) == self.target.has_edge(self.image[u], x));
            if !consistent {
                continue;
            }
            self.image[v] = x;
            self.used[x] = true;
            let flow = self.extend(v + 1, visit)?;
            self.used[x] = false;
            self.image[v] = usize::MAX;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Returns the lexicographically smallest isomorphism `g -> h`, if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_capped(g, h, DEFAULT_NODE_CAP)
}

pub fn find_isomorphism_capped(g: &Graph, h: &Graph, node_cap: u64) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_isomorphism(g, h, node_cap, |phi| {
        found = Some(phi.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}
