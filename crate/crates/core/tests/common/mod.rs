//! Brute-force reference implementations. These deliberately share nothing
//! with the library beyond `Graph` itself: plain adjacency matrices, naive
//! permutation enumeration and bitmask subset loops.

#![allow(dead_code)]

use myc_sym::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

/// Every automorphism, as image vectors in lexicographic order.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let a = matrix(g);
    let n = a.len();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(a: &[Vec<bool>], image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = a.len();
        let v = image.len();
        if v == n {
            out.push(image.clone());
            return;
        }
        for x in 0..n {
            if used[x] || !(0..v).all(|u| a[u][v] == a[image[u]][x]) {
                continue;
            }
            used[x] = true;
            image.push(x);
            go(a, image, used, out);
            image.pop();
            used[x] = false;
        }
    }
    go(&a, &mut image, &mut used, &mut out);
    out
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Masks of `0..n` ordered by popcount.
fn masks_by_size(n: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks
}

pub fn is_determining(auts: &[Vec<usize>], set: &[usize]) -> bool {
    auts.iter()
        .filter(|p| !is_identity(p))
        .all(|p| set.iter().any(|&v| p[v] != v))
}

/// Minimum determining set size, scanning every subset.
pub fn det(g: &Graph) -> usize {
    let n = g.vertex_count();
    let auts = automorphisms(g);
    masks_by_size(n)
        .into_iter()
        .find(|&m| is_determining(&auts, &members(m, n)))
        .map(|m| m.count_ones() as usize)
        .expect("V(G) is determining")
}

pub fn preserved_by_nontrivial(auts: &[Vec<usize>], mask: u64) -> bool {
    auts.iter().filter(|p| !is_identity(p)).any(|p| {
        p.iter()
            .enumerate()
            .all(|(v, &x)| (mask >> v & 1) == (mask >> x & 1))
    })
}

/// Number of vertex subsets whose setwise stabilizer is trivial.
pub fn asymmetric_subsets(g: &Graph) -> usize {
    let n = g.vertex_count();
    let auts = automorphisms(g);
    (0..1u64 << n)
        .filter(|&m| !preserved_by_nontrivial(&auts, m))
        .count()
}

/// Cost of 2-distinguishing; `None` when no 2-distinguishing colouring
/// exists or the graph is asymmetric.
pub fn rho(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let auts = automorphisms(g);
    if auts.len() == 1 {
        return None;
    }
    masks_by_size(n)
        .into_iter()
        .find(|&m| !preserved_by_nontrivial(&auts, m))
        .map(|m| m.count_ones() as usize)
}

/// Distinguishing number if at most `max_d`, by enumerating all colourings.
pub fn dist(g: &Graph, max_d: usize) -> Option<usize> {
    let n = g.vertex_count();
    let auts = automorphisms(g);
    let nontrivial: Vec<&Vec<usize>> = auts.iter().filter(|p| !is_identity(p)).collect();
    for d in 1..=max_d {
        let total = (d as u64).pow(n as u32);
        let found = (0..total).any(|code| {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = (x % d as u64) as usize;
                x /= d as u64;
            }
            nontrivial.iter().all(|p| (0..n).any(|v| c[p[v]] != c[v]))
        });
        if found {
            return Some(d);
        }
    }
    None
}

/// Classes of vertices with equal open neighbourhoods, each sorted, ordered by minimum.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let a = matrix(g);
    let n = a.len();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match classes.iter_mut().find(|c| a[c[0]] == a[v]) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// `μ^(t)(g)` straight from the definition: `u_i^s = s n + i`, `w = (t + 1) n`.
pub fn mycielskian(g: &Graph, t: usize) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for (i, j) in g.edges() {
        edges.push((i, j));
        for s in 0..t {
            edges.push((s * n + i, (s + 1) * n + j));
            edges.push((s * n + j, (s + 1) * n + i));
        }
    }
    let w = (t + 1) * n;
    for i in 0..n {
        edges.push((w, t * n + i));
    }
    Graph::from_edges(w + 1, edges).unwrap()
}

pub fn bfs(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let a = matrix(g);
    let mut d = vec![None; a.len()];
    d[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for x in 0..a.len() {
            if a[v][x] && d[x].is_none() {
                d[x] = Some(d[v].unwrap() + 1);
                queue.push_back(x);
            }
        }
    }
    d
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected graphs on 2..=`max_n` vertices, drawn from the given seeds.
pub fn connected_graphs(seeds: std::ops::Range<u64>, max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for seed in seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            if bfs(&g, 0).iter().all(Option::is_some) {
                out.push(g);
                break;
            }
        }
    }
    out
}

/// Arbitrary simple graphs on `min_n..=max_n` vertices.
pub fn graphs(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
}

/// Same as [`graphs`] but without isolated vertices (at least two vertices).
pub fn graphs_without_isolated(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    graphs(2, max_n).prop_filter("isolated vertex", |g| {
        matrix(g).iter().all(|row| row.iter().any(|&b| b))
    })
}

pub fn family(s: &str) -> Graph {
    s.parse::<myc_sym::FamilySpec>().unwrap().build().unwrap()
}
