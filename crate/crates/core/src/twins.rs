//! Twin classes (identical open neighbourhoods), the quotient graph, minimum
//! twin covers, and the maps between automorphisms of a graph, its quotient
//! and its Mycielskians.

use std::collections::HashMap;

use serde::Serialize;

use crate::automorphism::{automorphism_group, is_automorphism, Permutation, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::is_determining_set;
use crate::mycielskian::mycielskian_t;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    /// Classes ordered by their minimum vertex; each class sorted.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn non_singleton_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(|&c| self.classes[c].len() > 1)
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut index: HashMap<&VertexSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let c = *index.entry(g.neighbors(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of.push(c);
    }
    TwinPartition { classes, class_of }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub partition: TwinPartition,
    /// vertex -> class index
    pub projection: Vec<usize>,
    /// class index -> minimum vertex of the class
    pub representative: Vec<usize>,
}

pub fn quotient_graph(g: &Graph) -> QuotientGraph {
    let partition = twin_partition(g);
    let representative: Vec<usize> = partition.classes.iter().map(|c| c[0]).collect();
    let k = representative.len();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(representative[a], representative[b]) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges(k, edges).expect("quotient of a simple graph is simple");
    QuotientGraph {
        graph,
        projection: partition.class_of.clone(),
        representative,
        partition,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinCover {
    /// Sorted vertices of the cover.
    pub vertices: Vec<usize>,
    /// Indices of the non-singleton twin classes (the image of the cover in the quotient).
    pub image_classes: Vec<usize>,
}

impl TwinCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Canonical minimum twin cover: every vertex except the minimum of its class.
pub fn minimum_twin_cover(g: &Graph) -> TwinCover {
    let partition = twin_partition(g);
    let mut vertices: Vec<usize> = partition
        .classes
        .iter()
        .flat_map(|c| c[1..].iter().copied())
        .collect();
    vertices.sort_unstable();
    TwinCover {
        vertices,
        image_classes: partition.non_singleton_classes().collect(),
    }
}

/// True iff `set` holds exactly all but one vertex of every twin class.
pub fn is_minimum_twin_cover(g: &Graph, set: &[usize]) -> bool {
    let partition = twin_partition(g);
    let mut hits = vec![0usize; partition.classes.len()];
    for &v in set {
        hits[partition.class_of[v]] += 1;
    }
    let covers = partition
        .classes
        .iter()
        .zip(&hits)
        .all(|(c, &h)| h + 1 == c.len() || (c.len() == 1 && h == 0));
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    covers && sorted.len() == set.len()
}

/// Lifts an automorphism of the quotient fixing every non-singleton class to
/// the automorphism of `g` that fixes those classes pointwise and follows
/// `class_perm` on singleton classes.
pub fn lift_quotient_automorphism(
    g: &Graph,
    q: &QuotientGraph,
    class_perm: &Permutation,
) -> Result<Permutation> {
    if class_perm.len() != q.graph.vertex_count() {
        return Err(Error::input(
            "class permutation length differs from the quotient size",
        ));
    }
    if !is_automorphism(&q.graph, class_perm)? {
        return Err(Error::input(
            "class permutation is not an automorphism of the quotient",
        ));
    }
    if let Some(c) = q
        .partition
        .non_singleton_classes()
        .find(|&c| class_perm.apply(c) != c)
    {
        return Err(Error::input(format!(
            "class permutation moves the non-singleton class {c}; it need not lift"
        )));
    }
    let image = g
        .vertices()
        .map(|v| {
            let c = q.projection[v];
            if q.partition.classes[c].len() > 1 {
                v
            } else {
                q.partition.classes[class_perm.apply(c)][0]
            }
        })
        .collect();
    let lifted = Permutation::from_images(image)?;
    debug_assert!(is_automorphism(g, &lifted).unwrap_or(false));
    Ok(lifted)
}

/// The class permutation `[x] -> [a(x)]` induced by an automorphism `a` of `g`.
pub fn induced_quotient_automorphism(
    g: &Graph,
    q: &QuotientGraph,
    a: &Permutation,
) -> Result<Permutation> {
    if !is_automorphism(g, a)? {
        return Err(Error::input(
            "permutation is not an automorphism of the graph",
        ));
    }
    let image = q
        .representative
        .iter()
        .map(|&r| q.projection[a.apply(r)])
        .collect();
    Permutation::from_images(image)
}

/// Extends an automorphism of `g` to `μ^(t)(g)` by repeating it on every
/// level and fixing the shadow master.
pub fn lift_to_mycielskian(g: &Graph, t: usize, a: &Permutation) -> Result<Permutation> {
    if !is_automorphism(g, a)? {
        return Err(Error::input(
            "permutation is not an automorphism of the graph",
        ));
    }
    if t < 1 {
        return Err(Error::input("t must be at least 1"));
    }
    let n = g.vertex_count();
    let mut image: Vec<usize> = (0..=t)
        .flat_map(|s| (0..n).map(move |i| s * n + a.apply(i)))
        .collect();
    image.push((t + 1) * n);
    Permutation::from_images(image)
}

/// `T^(t)`: the cover `T` together with all its shadows in `μ^(t)(g)`.
pub fn twin_cover_shadows(g: &Graph, t: usize, cover: &TwinCover) -> Result<Vec<usize>> {
    if g.has_isolated_vertex() {
        return Err(Error::Scope("the graph has isolated vertices".into()));
    }
    if t < 1 {
        return Err(Error::input("t must be at least 1"));
    }
    let n = g.vertex_count();
    let mut out: Vec<usize> = (0..=t)
        .flat_map(|s| cover.vertices.iter().map(move |&i| s * n + i))
        .collect();
    out.sort_unstable();
    debug_assert!(is_minimum_twin_cover(mycielskian_t(g, t)?.graph(), &out));
    Ok(out)
}

/// `S = T ∪ {x : [x] ∈ S̃ \ T̃}` for a determining set `S̃` of the quotient containing `T̃`.
///
/// Only validates that `S̃` contains `T̃` and is determining for the quotient;
/// minimality is the caller's responsibility.
pub fn determining_set_from_quotient(
    g: &Graph,
    q: &QuotientGraph,
    quotient_set: &[usize],
) -> Result<Vec<usize>> {
    let k = q.graph.vertex_count();
    if quotient_set.iter().any(|&c| c >= k) {
        return Err(Error::input("class index out of range"));
    }
    let cover = minimum_twin_cover(g);
    if let Some(c) = cover
        .image_classes
        .iter()
        .find(|c| !quotient_set.contains(c))
    {
        return Err(Error::input(format!(
            "quotient set misses the non-singleton class {c}"
        )));
    }
    let quotient_group = automorphism_group(&q.graph, DEFAULT_GROUP_CAP)?;
    if !is_determining_set(&q.graph, quotient_set, &quotient_group)? {
        return Err(Error::input(
            "quotient set is not determining for the quotient graph",
        ));
    }
    let mut s = cover.vertices.clone();
    s.extend(
        quotient_set
            .iter()
            .filter(|&&c| q.partition.classes[c].len() == 1)
            .map(|&c| q.partition.classes[c][0]),
    );
    s.sort_unstable();
    Ok(s)
}
