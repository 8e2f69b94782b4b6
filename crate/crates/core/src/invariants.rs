//! Determining number, distinguishing number and cost of 2-distinguishing.
//!
//! All three are exact searches over the enumerated automorphism group:
//!
//! * a set `S` is determining iff it meets the support of every nontrivial
//!   automorphism, so the determining number is a minimum hitting set;
//! * a 2-colouring distinguishes iff its red class has a trivial setwise
//!   stabilizer;
//! * colourings with three or more colours are found by backtracking.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::automorphism::{automorphism_group, AutGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mycielskian::LayeredGraph;
use crate::search::{first_subset, DEFAULT_SUBSET_BUDGET};
use crate::twins::minimum_twin_cover;

/// A total vertex colouring with colours `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(Error::input(format!("colour {c} outside 0..{num_colors}")));
        }
        Ok(Coloring { colors, num_colors })
    }

    /// Two colours: vertices of `red` get colour 1, all others colour 0.
    pub fn two_coloring(n: usize, red: &[usize]) -> Result<Self> {
        let mut colors = vec![0; n];
        for &v in red {
            if v >= n {
                return Err(Error::input(format!("vertex {v} outside 0..{n}")));
            }
            colors[v] = 1;
        }
        Coloring::new(colors, 2)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Sorted vertices with colour `c`.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantValue {
    Exact(usize),
    /// No witness with at most this many colours exists.
    ExceedsCap(usize),
    /// The invariant is not defined for this graph (ρ when dist ≠ 2).
    Undefined,
}

impl InvariantValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            InvariantValue::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Exact(v) => write!(f, "{v}"),
            InvariantValue::ExceedsCap(cap) => write!(f, ">{cap}"),
            InvariantValue::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for InvariantValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            InvariantValue::Exact(v) => s.serialize_u64(*v as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(Vec<usize>),
    Coloring(Coloring),
    None,
}

impl Witness {
    pub fn as_set(&self) -> Option<&[usize]> {
        match self {
            Witness::Set(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_coloring(&self) -> Option<&Coloring> {
        match self {
            Witness::Coloring(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidates examined in sequential search order (subsets or partial colourings).
    pub nodes: u64,
    pub group_order: usize,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: InvariantValue,
    pub witness: Witness,
    pub stats: SearchStats,
}

/// Search limits shared by the invariant computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub group_cap: usize,
    pub subset_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_cap: DEFAULT_GROUP_CAP,
            subset_budget: DEFAULT_SUBSET_BUDGET,
        }
    }
}

fn check_vertices(g: &Graph, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= g.vertex_count()) {
        Some(v) => Err(Error::input(format!(
            "vertex {v} outside 0..{}",
            g.vertex_count()
        ))),
        None => Ok(()),
    }
}

/// True iff only the identity fixes every vertex of `set`.
pub fn is_determining_set(g: &Graph, set: &[usize], group: &AutGroup) -> Result<bool> {
    check_vertices(g, set)?;
    Ok(group.nontrivial().all(|p| !p.fixes_pointwise(set)))
}

/// Minimum determining set of `g`, seeded with the canonical minimum twin cover.
pub fn determining_number(g: &Graph) -> Result<InvariantResult> {
    let limits = Limits::default();
    let group = automorphism_group(g, limits.group_cap)?;
    determining_number_with(g, &group, true, limits.subset_budget)
}

/// Minimum determining set.
///
/// With `seed_twin_cover` the search only visits supersets of the canonical
/// minimum twin cover: every determining set contains all but one vertex of
/// each twin class, and swapping a vertex for a twin keeps it determining.
/// Without it, all subsets are scanned.
pub fn determining_number_with(
    g: &Graph,
    group: &AutGroup,
    seed_twin_cover: bool,
    budget: u64,
) -> Result<InvariantResult> {
    let seed = if seed_twin_cover {
        minimum_twin_cover(g).vertices
    } else {
        Vec::new()
    };
    minimum_determining_superset(g, group, &seed, budget)
}

/// Smallest determining set containing `seed` (lexicographically first among
/// those of minimum size).
pub fn minimum_determining_superset(
    g: &Graph,
    group: &AutGroup,
    seed: &[usize],
    budget: u64,
) -> Result<InvariantResult> {
    check_vertices(g, seed)?;
    let started = Instant::now();
    let n = g.vertex_count();
    let mut in_seed = VertexSet::with_capacity(n);
    in_seed.extend(seed.iter().copied());
    // supports of the elements the seed does not already pin down
    let supports: Vec<VertexSet> = group
        .nontrivial()
        .map(Permutation::support)
        .filter(|s| s.is_disjoint(&in_seed))
        .collect();
    let candidates: Vec<usize> = g.vertices().filter(|&v| !in_seed.contains(v)).collect();
    let scan = first_subset(&candidates, 0..=candidates.len(), budget, |extra| {
        supports
            .iter()
            .all(|s| extra.iter().any(|&v| s.contains(v)))
    })?;
    let extra = scan
        .found
        .expect("the full vertex set is always determining");
    let mut witness: Vec<usize> = in_seed.ones().chain(extra).collect();
    witness.sort_unstable();
    Ok(InvariantResult {
        value: InvariantValue::Exact(witness.len()),
        witness: Witness::Set(witness),
        stats: SearchStats {
            nodes: scan.examined,
            group_order: group.order(),
            elapsed: started.elapsed(),
        },
    })
}

/// True iff no nontrivial element of `group` preserves every colour class.
pub fn is_distinguishing_coloring(g: &Graph, c: &Coloring, group: &AutGroup) -> Result<bool> {
    if c.colors.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "colouring covers {} vertices, graph has {}",
            c.colors.len(),
            g.vertex_count()
        )));
    }
    Ok(group
        .nontrivial()
        .all(|p| g.vertices().any(|v| c.colors[p.apply(v)] != c.colors[v])))
}

/// First set (by size from `min_size`, then lexicographically) with a trivial
/// setwise stabilizer, scanning sizes up to `n / 2`.
fn first_asymmetric_set(
    g: &Graph,
    group: &AutGroup,
    min_size: usize,
    budget: u64,
) -> Result<(Option<Vec<usize>>, u64)> {
    let n = g.vertex_count();
    let elements: Vec<&Permutation> = group.nontrivial().collect();
    let candidates: Vec<usize> = g.vertices().collect();
    let scan = first_subset(&candidates, min_size..=n / 2, budget, |set| {
        let mut bits = VertexSet::with_capacity(n);
        bits.extend(set.iter().copied());
        elements.iter().all(|p| !p.preserves_setwise(&bits))
    })?;
    Ok((scan.found, scan.examined))
}

pub fn distinguishing_number(g: &Graph, max_d: usize) -> Result<InvariantResult> {
    let limits = Limits::default();
    let group = automorphism_group(g, limits.group_cap)?;
    distinguishing_number_with(g, &group, max_d, limits.subset_budget)
}

/// Smallest `d <= max_d` admitting a distinguishing colouring.
pub fn distinguishing_number_with(
    g: &Graph,
    group: &AutGroup,
    max_d: usize,
    budget: u64,
) -> Result<InvariantResult> {
    let started = Instant::now();
    let n = g.vertex_count();
    let stats = |nodes| SearchStats {
        nodes,
        group_order: group.order(),
        elapsed: started.elapsed(),
    };
    if max_d == 0 {
        return Ok(InvariantResult {
            value: InvariantValue::ExceedsCap(0),
            witness: Witness::None,
            stats: stats(0),
        });
    }
    if group.is_trivial() {
        return Ok(InvariantResult {
            value: InvariantValue::Exact(1),
            witness: Witness::Coloring(Coloring::new(vec![0; n], 1)?),
            stats: stats(0),
        });
    }
    if max_d < 2 {
        return Ok(InvariantResult {
            value: InvariantValue::ExceedsCap(max_d),
            witness: Witness::None,
            stats: stats(0),
        });
    }
    let (red, mut nodes) = first_asymmetric_set(g, group, 1, budget)?;
    if let Some(red) = red {
        return Ok(InvariantResult {
            value: InvariantValue::Exact(2),
            witness: Witness::Coloring(Coloring::two_coloring(n, &red)?),
            stats: stats(nodes),
        });
    }
    for d in 3..=max_d {
        let mut search = ColoringSearch::new(g, group, d, budget.saturating_sub(nodes));
        let found = search.run()?;
        nodes += search.nodes;
        if let Some(colors) = found {
            return Ok(InvariantResult {
                value: InvariantValue::Exact(d),
                witness: Witness::Coloring(Coloring::new(colors, d)?),
                stats: stats(nodes),
            });
        }
    }
    Ok(InvariantResult {
        value: InvariantValue::ExceedsCap(max_d),
        witness: Witness::None,
        stats: stats(nodes),
    })
}

/// Backtracking over `d`-colourings.
///
/// Vertices are coloured one orbit representative per orbit first, then the
/// rest in index order. Colour permutations are factored out by only opening
/// a new colour one above the largest used so far. An automorphism dies once
/// some coloured vertex and its coloured image differ in colour; a branch is
/// cut as soon as a live automorphism has its whole support coloured.
struct ColoringSearch<'a> {
    d: usize,
    order: Vec<usize>,
    elements: Vec<&'a Permutation>,
    inverses: Vec<Permutation>,
    /// position in `order` after which an element's support is fully coloured
    last_pos: Vec<usize>,
    colors: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl<'a> ColoringSearch<'a> {
    fn new(g: &Graph, group: &'a AutGroup, d: usize, budget: u64) -> Self {
        let n = g.vertex_count();
        let orbits = group.orbits();
        let mut order: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
        let mut placed = vec![false; n];
        for &v in &order {
            placed[v] = true;
        }
        order.extend((0..n).filter(|&v| !placed[v]));
        let mut pos_of = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let elements: Vec<&Permutation> = group.nontrivial().collect();
        let inverses = elements.iter().map(|p| p.inverse()).collect();
        let last_pos = elements
            .iter()
            .map(|p| p.support().ones().map(|v| pos_of[v]).max().unwrap_or(0))
            .collect();
        ColoringSearch {
            d,
            order,
            elements,
            inverses,
            last_pos,
            colors: vec![None; n],
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        let alive: Vec<usize> = (0..self.elements.len()).collect();
        if self.extend(0, 0, &alive)? {
            Ok(Some(self.colors.iter().map(|c| c.unwrap_or(0)).collect()))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, pos: usize, used: usize, alive: &[usize]) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(alive.is_empty());
        }
        let v = self.order[pos];
        let top = (used + 1).min(self.d);
        for c in 0..top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Resource {
                    what: "colouring search nodes",
                    cap: self.budget,
                    partial: self.nodes,
                });
            }
            self.colors[v] = Some(c);
            let still: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&e| !self.kills(e, v, c))
                .collect();
            let blocked = still.iter().any(|&e| self.last_pos[e] <= pos);
            if !blocked && self.extend(pos + 1, used.max(c + 1), &still)? {
                return Ok(true);
            }
            self.colors[v] = None;
        }
        Ok(false)
    }

    fn kills(&self, e: usize, v: usize, c: usize) -> bool {
        let forward = self.colors[self.elements[e].apply(v)];
        let backward = self.colors[self.inverses[e].apply(v)];
        forward.is_some_and(|x| x != c) || backward.is_some_and(|x| x != c)
    }
}

pub fn cost_of_2_distinguishing(g: &Graph) -> Result<InvariantResult> {
    let limits = Limits::default();
    let group = automorphism_group(g, limits.group_cap)?;
    cost_of_2_distinguishing_with(g, &group, limits.subset_budget)
}

/// Minimum size of a set with trivial setwise stabilizer; `Undefined` when
/// the graph is not 2-distinguishable or is asymmetric (distinguishing number 1).
pub fn cost_of_2_distinguishing_with(
    g: &Graph,
    group: &AutGroup,
    budget: u64,
) -> Result<InvariantResult> {
    let started = Instant::now();
    if group.is_trivial() {
        return Ok(InvariantResult {
            value: InvariantValue::Undefined,
            witness: Witness::None,
            stats: SearchStats {
                nodes: 0,
                group_order: 1,
                elapsed: started.elapsed(),
            },
        });
    }
    // every colour class of a 2-distinguishing colouring is determining
    let det = determining_number_with(g, group, true, budget)?;
    let start = det.value.exact().unwrap_or(1);
    let (found, nodes) = first_asymmetric_set(g, group, start, budget)?;
    let (value, witness) = match found {
        Some(set) => (InvariantValue::Exact(set.len()), Witness::Set(set)),
        None => (InvariantValue::Undefined, Witness::None),
    };
    Ok(InvariantResult {
        value,
        witness,
        stats: SearchStats {
            nodes: det.stats.nodes + nodes,
            group_order: group.order(),
            elapsed: started.elapsed(),
        },
    })
}

fn check_detset(lg: &LayeredGraph, detset: &[usize]) -> Result<()> {
    let mut seen = vec![false; lg.base_n()];
    for &v in detset {
        if v >= lg.base_n() {
            return Err(Error::input(format!(
                "vertex {v} is not a base-graph vertex"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::input(format!(
                "vertex {v} repeated in the determining list"
            )));
        }
    }
    Ok(())
}

/// `⌈log₂(k + 1)⌉`
pub fn code_length(k: usize) -> usize {
    (usize::BITS - k.leading_zeros()) as usize
}

/// 2-colouring of `μ^(t)(G)` from an ordered determining set `v_1..v_k` of
/// `G`: with `r = ⌈log₂(k+1)⌉`, `u_i^j` is red iff bit `j` (most significant
/// first) of the `r`-bit binary form of `i` is 1. Everything else is blue.
pub fn binary_level_coloring(lg: &LayeredGraph, detset: &[usize]) -> Result<Coloring> {
    check_detset(lg, detset)?;
    let k = detset.len();
    let r = code_length(k);
    if r > lg.levels() + 1 {
        return Err(Error::input(format!(
            "{k} determining vertices need {r} levels of code but only {} are available",
            lg.levels() + 1
        )));
    }
    let mut red = Vec::new();
    for (idx, &v) in detset.iter().enumerate() {
        let i = idx + 1;
        for j in 0..r {
            if (i >> (r - 1 - j)) & 1 == 1 {
                red.push(lg.vertex(j, v));
            }
        }
    }
    Coloring::two_coloring(lg.graph().vertex_count(), &red)
}

/// 2-colouring of `μ^(t)(G)` whose red class is the diagonal
/// `{u_{v_1}^0, u_{v_2}^1, ..., u_{v_k}^(k-1)}`.
pub fn diagonal_coloring(lg: &LayeredGraph, detset: &[usize]) -> Result<Coloring> {
    check_detset(lg, detset)?;
    let k = detset.len();
    if k > lg.levels() + 1 {
        return Err(Error::input(format!(
            "a diagonal of {k} vertices needs {k} levels but only {} are available",
            lg.levels() + 1
        )));
    }
    let red: Vec<usize> = detset
        .iter()
        .enumerate()
        .map(|(level, &v)| lg.vertex(level, v))
        .collect();
    Coloring::two_coloring(lg.graph().vertex_count(), &red)
}
