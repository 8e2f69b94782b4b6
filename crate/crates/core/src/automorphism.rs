//! Permutations, full automorphism-group enumeration and stabilizer queries.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{for_each_isomorphism, DEFAULT_NODE_CAP};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::input(format!(
                    "{image:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::input(format!("cycle entry outside 0..{n}")));
                }
                image[a] = b;
            }
        }
        Self::from_images(image)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// Vertices moved by the permutation.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::with_capacity(self.len());
        for (i, &x) in self.image.iter().enumerate() {
            if i != x {
                s.insert(i);
            }
        }
        s
    }

    pub fn fixes_pointwise(&self, set: &[usize]) -> bool {
        set.iter().all(|&v| self.image[v] == v)
    }

    pub fn preserves_setwise(&self, set: &VertexSet) -> bool {
        set.ones().all(|v| set.contains(self.image[v]))
    }
}

/// True iff `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "permutation has length {} but the graph has {} vertices",
            p.len(),
            g.vertex_count()
        )));
    }
    let edges_ok = g.edges().all(|(i, j)| g.has_edge(p.apply(i), p.apply(j)));
    // A bijection sending every edge to an edge also preserves non-edges.
    Ok(edges_ok)
}

/// The complete automorphism group, identity first, elements in
/// lexicographic order of their image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    /// Non-identity elements.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Orbit of `v`, sorted.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements.iter().map(|p| p.apply(v)).collect();
        set.into_iter().collect()
    }

    /// Partition of the points into orbits, each sorted, ordered by minimum element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if !seen[v] {
                let orbit = self.orbit(v);
                for &u in &orbit {
                    seen[u] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Closure under composition and inverses, checked exhaustively.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }

    /// A generating set chosen greedily in element order: an element is kept
    /// when it is not already in the subgroup generated by the earlier picks.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut generated: HashSet<Permutation> = HashSet::new();
        generated.insert(Permutation::identity(self.degree));
        for p in self.nontrivial() {
            if generated.contains(p) {
                continue;
            }
            gens.push(p.clone());
            let mut queue: VecDeque<Permutation> = generated.iter().cloned().collect();
            while let Some(q) = queue.pop_front() {
                for g in &gens {
                    let r = g.compose(&q);
                    if generated.insert(r.clone()) {
                        queue.push_back(r);
                    }
                }
            }
            if generated.len() == self.order() {
                break;
            }
        }
        gens
    }

    fn sublist<F: Fn(&Permutation) -> bool>(&self, keep: F) -> AutGroup {
        AutGroup {
            degree: self.degree,
            elements: self.elements.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }
}

/// Enumerates every automorphism of `g`; fails with a resource error
/// carrying the partial count once more than `cap` elements are found.
pub fn automorphism_group(g: &Graph, cap: usize) -> Result<AutGroup> {
    let mut elements = Vec::new();
    let mut overflow = false;
    for_each_isomorphism(g, g, DEFAULT_NODE_CAP, |image| {
        if elements.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        elements.push(Permutation {
            image: image.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    if overflow {
        return Err(Error::Resource {
            what: "automorphism group order",
            cap: cap as u64,
            partial: cap as u64 + 1,
        });
    }
    debug_assert!(elements.first().is_some_and(Permutation::is_identity));
    Ok(AutGroup {
        degree: g.vertex_count(),
        elements,
    })
}

fn check_subset(g: &Graph, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= g.vertex_count()) {
        Some(v) => Err(Error::input(format!(
            "vertex {v} outside 0..{}",
            g.vertex_count()
        ))),
        None => Ok(()),
    }
}

/// Elements of `group` fixing every vertex of `set`.
pub fn pointwise_stabilizer(g: &Graph, set: &[usize], group: &AutGroup) -> Result<AutGroup> {
    check_subset(g, set)?;
    Ok(group.sublist(|p| p.fixes_pointwise(set)))
}

/// True iff the only element of `group` mapping `set` onto itself is the identity.
pub fn setwise_stabilizer_is_trivial(g: &Graph, set: &[usize], group: &AutGroup) -> Result<bool> {
    check_subset(g, set)?;
    let mut bits = VertexSet::with_capacity(g.vertex_count());
    bits.extend(set.iter().copied());
    Ok(group.nontrivial().all(|p| !p.preserves_setwise(&bits)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec::*;
    use crate::mycielskian::mycielskian_t;

    fn aut(g: &Graph) -> AutGroup {
        automorphism_group(g, DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn automorphism_checks() {
        let c5 = Cycle(5).build().unwrap();
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(is_automorphism(&c5, &rot).unwrap());

        let p4 = Path(4).build().unwrap();
        let rev = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert!(is_automorphism(&p4, &rev).unwrap());
        let swap = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(!is_automorphism(&p4, &swap).unwrap());

        assert!(matches!(is_automorphism(&p4, &rot), Err(Error::Input(_))));
    }

    #[test]
    fn permutation_validation_and_algebra() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        let p = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.support().ones().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(aut(&Complete(4).build().unwrap()).order(), 24);
        assert_eq!(aut(&Petersen.build().unwrap()).order(), 120);
        assert_eq!(aut(&Cycle(5).build().unwrap()).order(), 10);
    }

    #[test]
    fn mu_k5_fixes_master() {
        let lg = mycielskian_t(&Complete(5).build().unwrap(), 1).unwrap();
        let group = aut(lg.graph());
        assert_eq!(group.order(), 120);
        let w = lg.shadow_master();
        assert!(group.iter().all(|p| p.apply(w) == w));
    }

    #[test]
    fn group_is_closed_and_sorted() {
        let group = aut(&Petersen.build().unwrap());
        assert!(group.elements()[0].is_identity());
        assert!(group.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(group.is_closed());
    }

    #[test]
    fn cap_reports_partial_count() {
        let err = automorphism_group(&Complete(5).build().unwrap(), 10).unwrap_err();
        assert_eq!(
            err,
            Error::Resource {
                what: "automorphism group order",
                cap: 10,
                partial: 11
            }
        );
    }

    #[test]
    fn stabilizers_on_c5() {
        let g = Cycle(5).build().unwrap();
        let group = aut(&g);
        assert!(pointwise_stabilizer(&g, &[0, 1], &group)
            .unwrap()
            .is_trivial());
        assert_eq!(pointwise_stabilizer(&g, &[0], &group).unwrap().order(), 2);
        assert_eq!(pointwise_stabilizer(&g, &[], &group).unwrap(), group);
        assert!(!setwise_stabilizer_is_trivial(&g, &[0, 1], &group).unwrap());
        // the reflection i -> 6 - i (mod 5) preserves {0, 1, 3}
        assert!(!setwise_stabilizer_is_trivial(&g, &[0, 1, 3], &group).unwrap());
        assert!(!setwise_stabilizer_is_trivial(&g, &[0, 1, 2, 3, 4], &group).unwrap());
        assert!(pointwise_stabilizer(&g, &[7], &group).is_err());

        let c6 = Cycle(6).build().unwrap();
        let group = aut(&c6);
        assert!(setwise_stabilizer_is_trivial(&c6, &[0, 1, 3], &group).unwrap());
    }

    #[test]
    fn generators_generate() {
        let group = aut(&Petersen.build().unwrap());
        let gens = group.generators();
        assert!(gens.len() <= 4);
        let mut seen: HashSet<Permutation> = HashSet::from([Permutation::identity(10)]);
        let mut frontier = vec![Permutation::identity(10)];
        while let Some(q) = frontier.pop() {
            for g in &gens {
                let r = g.compose(&q);
                if seen.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn orbits_of_fig3() {
        let group = aut(&Fig3.build().unwrap());
        assert_eq!(group.orbits(), vec![vec![0], vec![1], vec![2], vec![3, 4]]);
    }
}
