//! Executable checks of the structural results on concrete instances.
//!
//! Every check recomputes both sides of its claim from scratch through the
//! invariant modules and records the intermediate values in `details`.
//! Hypotheses are tested first; an instance outside a result's scope is
//! reported as skipped with the violated hypothesis named, never as a failure.
//! Resource exhaustion is also reported as a skip.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::automorphism::{automorphism_group, is_automorphism, AutGroup, Permutation};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::invariants::{
    binary_level_coloring, code_length, cost_of_2_distinguishing_with, determining_number_with,
    diagonal_coloring, distinguishing_number_with, is_determining_set, is_distinguishing_coloring,
    minimum_determining_superset, InvariantResult, InvariantValue, Limits,
};
use crate::iso::is_isomorphic;
use crate::mycielskian::{mycielskian_t, LayeredGraph, VertexLabel};
use crate::search::{binomial, for_each_subset};
use crate::twins::{
    determining_set_from_quotient, induced_quotient_automorphism, is_minimum_twin_cover,
    lift_quotient_automorphism, minimum_twin_cover, quotient_graph, twin_cover_shadows,
    twin_partition, QuotientGraph,
};

const DEFAULT_SUITE: &str = include_str!("../suites/default.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    L5i,
    L5ii,
    L5iii,
    L6,
    T7i,
    T7ii,
    T8,
    T9,
    C10,
    L11,
    C12,
    T13,
    C14,
    L15,
    L16,
    L17,
    T18,
    T19,
    /// No 2-distinguishing colouring below the level threshold (complete graphs).
    #[serde(rename = "T8-sharp-t")]
    T8SharpT,
    /// The cost bound is attained (complete graphs on `2^m` vertices, `t = m - 1`).
    #[serde(rename = "T8-sharp-rho")]
    T8SharpRho,
    /// The upper bound on the determining number is attained.
    #[serde(rename = "T19-sharp")]
    T19Sharp,
}

impl CheckId {
    pub const ALL: [CheckId; 21] = [
        CheckId::L5i,
        CheckId::L5ii,
        CheckId::L5iii,
        CheckId::L6,
        CheckId::T7i,
        CheckId::T7ii,
        CheckId::T8,
        CheckId::T9,
        CheckId::C10,
        CheckId::L11,
        CheckId::C12,
        CheckId::T13,
        CheckId::C14,
        CheckId::L15,
        CheckId::L16,
        CheckId::L17,
        CheckId::T18,
        CheckId::T19,
        CheckId::T8SharpT,
        CheckId::T8SharpRho,
        CheckId::T19Sharp,
    ];

    pub fn as_str(self) -> &'static str {
        use CheckId::*;
        match self {
            L5i => "L5i",
            L5ii => "L5ii",
            L5iii => "L5iii",
            L6 => "L6",
            T7i => "T7i",
            T7ii => "T7ii",
            T8 => "T8",
            T9 => "T9",
            C10 => "C10",
            L11 => "L11",
            C12 => "C12",
            T13 => "T13",
            C14 => "C14",
            L15 => "L15",
            L16 => "L16",
            L17 => "L17",
            T18 => "T18",
            T19 => "T19",
            T8SharpT => "T8-sharp-t",
            T8SharpRho => "T8-sharp-rho",
            T19Sharp => "T19-sharp",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::input(format!("unknown check id '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: CheckId,
    pub instance: String,
    pub t: usize,
    pub verdict: Verdict,
    /// Why the check was skipped (or why it could not be evaluated).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Map<String, Value>,
}

/// Evaluation outcome before it is turned into a verdict: `Err` carries the
/// violated hypothesis.
type Outcome = std::result::Result<bool, String>;

macro_rules! require {
    ($cond:expr, $why:expr) => {
        if !$cond {
            return Ok(Err($why.to_string()));
        }
    };
}

fn put(d: &mut Map<String, Value>, key: &str, value: impl Serialize) {
    d.insert(key.to_string(), json!(value));
}

/// Checks result `id` on `g` with `t` shadow levels, using default limits.
pub fn verify(id: CheckId, g: &Graph, t: usize, instance: &str) -> TheoremCheck {
    verify_with(id, g, t, instance, Limits::default())
}

pub fn verify_with(
    id: CheckId,
    g: &Graph,
    t: usize,
    instance: &str,
    limits: Limits,
) -> TheoremCheck {
    let mut details = Map::new();
    let (verdict, reason) = match evaluate(id, g, t, limits, &mut details) {
        Ok(Ok(true)) => (Verdict::Pass, None),
        Ok(Ok(false)) => (Verdict::Fail, None),
        Ok(Err(why)) => (Verdict::Skipped, Some(why)),
        Err(Error::Resource { what, cap, .. }) => (
            Verdict::Skipped,
            Some(format!("resource: {what} exceeded cap {cap}")),
        ),
        Err(Error::Scope(why)) => (Verdict::Skipped, Some(why)),
        Err(Error::Input(why)) => (Verdict::Fail, Some(format!("evaluation error: {why}"))),
    };
    TheoremCheck {
        id,
        instance: instance.to_string(),
        t,
        verdict,
        reason,
        details,
    }
}

/// Builds the family graph and checks `id` on it.
pub fn verify_family(id: CheckId, family: &FamilySpec, t: usize, limits: Limits) -> TheoremCheck {
    match family.build() {
        Ok(g) => verify_with(id, &g, t, &family.to_string(), limits),
        Err(e) => TheoremCheck {
            id,
            instance: family.to_string(),
            t,
            verdict: Verdict::Fail,
            reason: Some(format!("invalid instance: {e}")),
            details: Map::new(),
        },
    }
}

fn evaluate(
    id: CheckId,
    g: &Graph,
    t: usize,
    limits: Limits,
    d: &mut Map<String, Value>,
) -> Result<Outcome> {
    put(d, "n", g.vertex_count());
    put(d, "m", g.edge_count());
    require!(g.vertex_count() > 0, "G has at least one vertex");
    require!(t >= 1, "t >= 1");
    require!(!g.has_isolated_vertex(), "G has no isolated vertices");
    let mut cx = Ctx { g, t, limits, d };
    use CheckId::*;
    match id {
        L5i => cx.shadow_master_k2(),
        L5ii => cx.shadow_master_star(),
        L5iii => cx.shadow_master_fixed(),
        L6 => cx.levels_preserved(),
        T7i => cx.det_k2(),
        T7ii => cx.det_twin_free(),
        T8 => cx.binary_coloring(),
        T9 => cx.diagonal(),
        C10 => cx.classic_mycielski(),
        L11 => cx.quotient_lifting(),
        C12 => cx.cover_image_determining(),
        T13 => cx.det_from_quotient(),
        C14 => cx.det_bounds_base(),
        L15 => cx.cover_shadows(),
        L16 => cx.quotient_commutes(),
        L17 => cx.quotient_det_equal(),
        T18 => cx.det_with_twins(),
        T19 => cx.det_bounds_mycielskian(),
        T8SharpT => cx.no_two_coloring_below_threshold(),
        T8SharpRho => cx.cost_bound_attained(),
        T19Sharp => cx.upper_bound_attained(),
    }
}

fn is_k2(g: &Graph) -> bool {
    g.vertex_count() == 2 && g.edge_count() == 1
}

/// Centre of `K_{1,m}` when `g` is one (the lower-numbered end for `K2`).
fn star_center(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 {
        return None;
    }
    g.vertices().find(|&v| g.degree(v) == n - 1)
}

/// `K_{l,m}` with `l, m >= 1` is exactly the case of a two-vertex quotient with an edge.
fn is_complete_bipartite(q: &QuotientGraph) -> bool {
    q.graph.vertex_count() == 2 && q.graph.edge_count() == 1
}

fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * (n - 1) / 2
}

fn level(lg: &LayeredGraph, v: usize) -> Option<usize> {
    match lg.level_of(v) {
        VertexLabel::Layer { level, .. } => Some(level),
        VertexLabel::ShadowMaster => None,
    }
}

fn names(lg: &LayeredGraph, set: &[usize]) -> Vec<String> {
    set.iter().map(|&v| lg.vertex_name(v)).collect()
}

struct Ctx<'a> {
    g: &'a Graph,
    t: usize,
    limits: Limits,
    d: &'a mut Map<String, Value>,
}

impl Ctx<'_> {
    fn put(&mut self, key: &str, value: impl Serialize) {
        put(self.d, key, value);
    }

    fn group(&self, g: &Graph) -> Result<AutGroup> {
        automorphism_group(g, self.limits.group_cap)
    }

    fn mycielskian(&mut self) -> Result<(LayeredGraph, AutGroup)> {
        let lg = mycielskian_t(self.g, self.t)?;
        let group = self.group(lg.graph())?;
        self.put("mu_n", lg.graph().vertex_count());
        self.put("mu_m", lg.graph().edge_count());
        self.put("mu_group_order", group.order());
        Ok((lg, group))
    }

    /// Minimum determining set, searched among supersets of the twin cover.
    fn det(&self, g: &Graph, group: &AutGroup) -> Result<InvariantResult> {
        determining_number_with(g, group, true, self.limits.subset_budget)
    }

    /// Minimum determining set over all subsets.
    fn det_unrestricted(&self, g: &Graph, group: &AutGroup) -> Result<InvariantResult> {
        determining_number_with(g, group, false, self.limits.subset_budget)
    }

    fn record_det(&mut self, key: &str, r: &InvariantResult) -> usize {
        let v = r.value.exact().expect("determining number is always exact");
        self.put(key, v);
        self.put(&format!("{key}_witness"), r.witness.as_set().unwrap_or(&[]));
        v
    }

    fn record_mu_det(&mut self, lg: &LayeredGraph, r: &InvariantResult) -> usize {
        let v = self.record_det("det_mu", r);
        let set = r.witness.as_set().unwrap_or(&[]).to_vec();
        self.put("det_mu_witness_names", names(lg, &set));
        v
    }

    fn dist_is_two(&mut self, g: &Graph, group: &AutGroup) -> Result<bool> {
        let r = distinguishing_number_with(g, group, 2, self.limits.subset_budget)?;
        self.put("dist_mu", r.value);
        Ok(r.value == InvariantValue::Exact(2))
    }

    fn rho(&mut self, lg: &LayeredGraph, group: &AutGroup) -> Result<InvariantValue> {
        let r = cost_of_2_distinguishing_with(lg.graph(), group, self.limits.subset_budget)?;
        self.put("rho_mu", r.value);
        if let Some(set) = r.witness.as_set() {
            self.put("rho_mu_witness", set);
            self.put("rho_mu_witness_names", names(lg, set));
        }
        Ok(r.value)
    }

    fn shadow_master_k2(&mut self) -> Result<Outcome> {
        require!(is_k2(self.g), "G is K2");
        let (lg, group) = self.mycielskian()?;
        let cycle = FamilySpec::Cycle(2 * self.t + 3).build()?;
        let iso = is_isomorphic(lg.graph(), &cycle)?;
        let orbit = group.orbit(lg.shadow_master());
        self.put("cycle_length", 2 * self.t + 3);
        self.put("isomorphic_to_cycle", iso);
        self.put("orbit_of_w_size", orbit.len());
        Ok(Ok(iso && orbit.len() == lg.graph().vertex_count()))
    }

    fn shadow_master_star(&mut self) -> Result<Outcome> {
        let center = star_center(self.g);
        require!(center.is_some(), "G is a star K_{1,m}");
        require!(
            self.g.vertex_count() >= 3,
            "G is a star K_{1,m} with m >= 2"
        );
        let c = center.unwrap_or(0);
        let (lg, group) = self.mycielskian()?;
        let w = lg.shadow_master();
        let orbit = group.orbit(w);
        let mut expected = vec![w, lg.vertex(self.t, c)];
        expected.sort_unstable();
        self.put("orbit_of_w", &orbit);
        self.put("orbit_of_w_names", names(&lg, &orbit));
        self.put("expected_names", names(&lg, &expected));
        Ok(Ok(orbit == expected))
    }

    fn shadow_master_fixed(&mut self) -> Result<Outcome> {
        require!(star_center(self.g).is_none(), "G is not a star K_{1,m}");
        let (lg, group) = self.mycielskian()?;
        let w = lg.shadow_master();
        let moving = group.iter().filter(|p| p.apply(w) != w).count();
        self.put("automorphisms_moving_w", moving);
        Ok(Ok(moving == 0))
    }

    fn levels_preserved(&mut self) -> Result<Outcome> {
        require!(star_center(self.g).is_none(), "G is not a star K_{1,m}");
        let (lg, group) = self.mycielskian()?;
        let n = self.g.vertex_count();
        let twin_free = twin_partition(self.g).is_twin_free();
        self.put("twin_free", twin_free);

        let dist = lg.graph().bfs_distances(lg.shadow_master());
        let distances_ok = lg.graph().vertices().all(|v| match lg.level_of(v) {
            VertexLabel::ShadowMaster => dist[v] == Some(0),
            VertexLabel::Layer { level, .. } => dist[v] == Some(self.t + 1 - level),
        });

        let (mut levels_ok, mut restriction_ok, mut shadows_ok) = (true, true, true);
        for p in group.iter() {
            levels_ok &= lg
                .graph()
                .vertices()
                .all(|v| level(&lg, p.apply(v)) == level(&lg, v));
            let base: Vec<usize> = (0..n).map(|i| p.apply(i)).collect();
            let alpha = match base.iter().all(|&x| x < n) {
                true => Permutation::from_images(base).ok(),
                false => None,
            };
            let Some(alpha) = alpha else {
                restriction_ok = false;
                continue;
            };
            restriction_ok &= is_automorphism(self.g, &alpha)?;
            if twin_free {
                shadows_ok &= (1..=self.t).all(|s| {
                    (0..n).all(|i| p.apply(lg.vertex(s, i)) == lg.vertex(s, alpha.apply(i)))
                });
            }
        }
        self.put("bfs_levels_match", distances_ok);
        self.put("levels_preserved", levels_ok);
        self.put("restriction_is_automorphism", restriction_ok);
        self.put("shadows_follow_restriction", shadows_ok);
        Ok(Ok(distances_ok
            && levels_ok
            && restriction_ok
            && shadows_ok))
    }

    fn det_k2(&mut self) -> Result<Outcome> {
        require!(is_k2(self.g), "G is K2");
        let group = self.group(self.g)?;
        let det_g = self.det(self.g, &group)?;
        let det_g = self.record_det("det_g", &det_g);
        let (lg, mu_group) = self.mycielskian()?;
        let det_mu = self.det(lg.graph(), &mu_group)?;
        let det_mu = self.record_mu_det(&lg, &det_mu);
        Ok(Ok(det_g == 1 && det_mu == 2))
    }

    fn twin_free_base(&mut self) -> Result<Outcome> {
        require!(twin_partition(self.g).is_twin_free(), "G is twin-free");
        Ok(Ok(true))
    }

    fn det_twin_free(&mut self) -> Result<Outcome> {
        if let Err(why) = self.twin_free_base()? {
            return Ok(Err(why));
        }
        require!(!is_k2(self.g), "G is not K2");
        let group = self.group(self.g)?;
        let r = self.det(self.g, &group)?;
        let k = self.record_det("det_g", &r);
        let (lg, mu_group) = self.mycielskian()?;
        let r = self.det(lg.graph(), &mu_group)?;
        let det_mu = self.record_mu_det(&lg, &r);

        let n = self.g.vertex_count();
        if binomial(n, k) > self.limits.subset_budget {
            return Err(Error::Resource {
                what: "minimum determining set enumeration",
                cap: self.limits.subset_budget,
                partial: 0,
            });
        }
        let vertices: Vec<usize> = self.g.vertices().collect();
        let (g, mu) = (self.g, lg.graph());
        let (mut minimum_sets, mut lifted) = (0usize, 0usize);
        let mut failure: Result<()> = Ok(());
        for_each_subset(&vertices, k, |set| {
            let both = is_determining_set(g, set, &group)
                .and_then(|in_g| Ok((in_g, in_g && is_determining_set(mu, set, &mu_group)?)));
            match both {
                Ok((in_g, in_mu)) => {
                    minimum_sets += usize::from(in_g);
                    lifted += usize::from(in_mu);
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    failure = Err(e);
                    ControlFlow::Break(())
                }
            }
        });
        failure?;
        self.put("minimum_sets_of_g", minimum_sets);
        self.put("minimum_sets_determining_in_mu", lifted);
        Ok(Ok(det_mu == k
            && minimum_sets == lifted
            && minimum_sets > 0))
    }

    /// Shared hypotheses of the colouring results; returns `det(G)` and a minimum determining set.
    fn colouring_base(&mut self) -> Result<std::result::Result<(usize, Vec<usize>), String>> {
        if let Err(why) = self.twin_free_base()? {
            return Ok(Err(why));
        }
        let group = self.group(self.g)?;
        let r = self.det(self.g, &group)?;
        let k = self.record_det("det_g", &r);
        if k < 2 {
            return Ok(Err("det(G) >= 2".into()));
        }
        Ok(Ok((k, r.witness.as_set().unwrap_or(&[]).to_vec())))
    }

    fn binary_coloring(&mut self) -> Result<Outcome> {
        let (k, detset) = match self.colouring_base()? {
            Ok(v) => v,
            Err(why) => return Ok(Err(why)),
        };
        let r = code_length(k);
        self.put("code_length", r);
        require!(self.t + 1 >= r, "t >= ceil(log2(det(G) + 1)) - 1");
        let (lg, group) = self.mycielskian()?;
        let det_mu = self.det(lg.graph(), &group)?;
        let det_mu = self.record_mu_det(&lg, &det_mu);
        let dist_two = self.dist_is_two(lg.graph(), &group)?;
        let rho = self.rho(&lg, &group)?;
        let rho_ok = matches!(rho, InvariantValue::Exact(x) if 2 * x <= (k + 1) * r);

        let coloring = binary_level_coloring(&lg, &detset)?;
        let red = coloring.class(1);
        let distinguishing = is_distinguishing_coloring(lg.graph(), &coloring, &group)?;
        let red_ok = 2 * red.len() <= (k + 1) * r;
        self.put("rho_bound_times_two", (k + 1) * r);
        self.put("binary_red", &red);
        self.put("binary_red_names", names(&lg, &red));
        self.put("binary_distinguishing", distinguishing);
        Ok(Ok(det_mu == k
            && dist_two
            && rho_ok
            && distinguishing
            && red_ok))
    }

    fn diagonal(&mut self) -> Result<Outcome> {
        let (k, detset) = match self.colouring_base()? {
            Ok(v) => v,
            Err(why) => return Ok(Err(why)),
        };
        require!(self.t + 1 >= k, "t >= det(G) - 1");
        let (lg, group) = self.mycielskian()?;
        let det_mu = self.det(lg.graph(), &group)?;
        let det_mu = self.record_mu_det(&lg, &det_mu);
        let dist_two = self.dist_is_two(lg.graph(), &group)?;
        let rho = self.rho(&lg, &group)?;

        let coloring = diagonal_coloring(&lg, &detset)?;
        let red = coloring.class(1);
        let distinguishing = is_distinguishing_coloring(lg.graph(), &coloring, &group)?;
        self.put("diagonal_red", &red);
        self.put("diagonal_red_names", names(&lg, &red));
        self.put("diagonal_distinguishing", distinguishing);
        Ok(Ok(det_mu == k
            && dist_two
            && rho == InvariantValue::Exact(k)
            && distinguishing
            && red.len() == k))
    }

    /// Evaluated on `G` itself, which must be a classic Mycielski graph `M_n` with `n >= 4`.
    fn classic_mycielski(&mut self) -> Result<Outcome> {
        let nv = self.g.vertex_count();
        let order = (4..=7).find(|&n| 3 * (1usize << (n - 2)) - 1 == nv);
        require!(
            order.is_some(),
            "G is a classic Mycielski graph M_n with n >= 4"
        );
        let order = order.unwrap_or(4);
        let reference = FamilySpec::ClassicMycielski(order).build()?;
        require!(
            is_isomorphic(self.g, &reference)?,
            "G is a classic Mycielski graph M_n with n >= 4"
        );
        self.put("mycielski_order", order);
        let group = self.group(self.g)?;
        self.put("group_order", group.order());
        let det = self.det(self.g, &group)?;
        let det = self.record_det("det", &det);
        let dist = distinguishing_number_with(self.g, &group, 2, self.limits.subset_budget)?;
        self.put("dist", dist.value);
        let rho = cost_of_2_distinguishing_with(self.g, &group, self.limits.subset_budget)?;
        self.put("rho", rho.value);
        if let Some(set) = rho.witness.as_set() {
            self.put("rho_witness", set);
        }
        Ok(Ok(det == 2
            && dist.value == InvariantValue::Exact(2)
            && rho.value == InvariantValue::Exact(2)))
    }

    fn quotient(&mut self) -> Result<(QuotientGraph, AutGroup)> {
        let q = quotient_graph(self.g);
        let qg = self.group(&q.graph)?;
        self.put("quotient_n", q.graph.vertex_count());
        self.put("quotient_group_order", qg.order());
        Ok((q, qg))
    }

    fn quotient_lifting(&mut self) -> Result<Outcome> {
        let (q, qgroup) = self.quotient()?;
        let cover = minimum_twin_cover(self.g);
        self.put("twin_cover", &cover.vertices);
        let fixing: Vec<&Permutation> = qgroup
            .iter()
            .filter(|p| p.fixes_pointwise(&cover.image_classes))
            .collect();
        let mut ok = true;
        for a in &fixing {
            let lifted = lift_quotient_automorphism(self.g, &q, a)?;
            ok &= is_automorphism(self.g, &lifted)?
                && lifted.fixes_pointwise(&cover.vertices)
                && induced_quotient_automorphism(self.g, &q, &lifted)? == **a;
        }
        self.put("quotient_automorphisms_fixing_cover_image", fixing.len());
        Ok(Ok(ok))
    }

    fn cover_is_determining(&mut self, group: &AutGroup) -> Result<bool> {
        let cover = minimum_twin_cover(self.g);
        self.put("twin_cover", &cover.vertices);
        let det = is_determining_set(self.g, &cover.vertices, group)?;
        self.put("twin_cover_determining", det);
        Ok(det)
    }

    fn cover_image_determining(&mut self) -> Result<Outcome> {
        let group = self.group(self.g)?;
        require!(
            self.cover_is_determining(&group)?,
            "the minimum twin cover is a determining set"
        );
        let (q, qgroup) = self.quotient()?;
        let image = minimum_twin_cover(self.g).image_classes;
        let det = is_determining_set(&q.graph, &image, &qgroup)?;
        self.put("cover_image", &image);
        self.put("cover_image_determining", det);
        Ok(Ok(det))
    }

    fn det_from_quotient(&mut self) -> Result<Outcome> {
        let group = self.group(self.g)?;
        let (q, qgroup) = self.quotient()?;
        let cover = minimum_twin_cover(self.g);
        let sq = minimum_determining_superset(
            &q.graph,
            &qgroup,
            &cover.image_classes,
            self.limits.subset_budget,
        )?;
        let sq = sq.witness.as_set().unwrap_or(&[]).to_vec();
        let s = determining_set_from_quotient(self.g, &q, &sq)?;
        let s_det = is_determining_set(self.g, &s, &group)?;
        let contains_cover = cover.vertices.iter().all(|v| s.contains(v));
        let r = self.det_unrestricted(self.g, &group)?;
        let det = self.record_det("det_g", &r);
        self.put("quotient_set", &sq);
        self.put("lifted_set", &s);
        self.put("lifted_set_determining", s_det);
        Ok(Ok(s_det && contains_cover && s.len() == det))
    }

    fn det_bounds_base(&mut self) -> Result<Outcome> {
        let group = self.group(self.g)?;
        let (q, qgroup) = self.quotient()?;
        let cover = minimum_twin_cover(self.g).len();
        let r = self.det_unrestricted(self.g, &group)?;
        let det = self.record_det("det_g", &r);
        let r = self.det_unrestricted(&q.graph, &qgroup)?;
        let det_q = self.record_det("det_quotient", &r);
        self.put("twin_cover_size", cover);
        Ok(Ok(cover <= det && det <= cover + det_q))
    }

    fn cover_shadows(&mut self) -> Result<Outcome> {
        let lg = mycielskian_t(self.g, self.t)?;
        let cover = minimum_twin_cover(self.g);
        let shadows = twin_cover_shadows(self.g, self.t, &cover)?;
        let is_cover = is_minimum_twin_cover(lg.graph(), &shadows);
        let recomputed = minimum_twin_cover(lg.graph()).len();
        self.put("twin_cover_size", cover.len());
        self.put("shadow_cover", &shadows);
        self.put("shadow_cover_names", names(&lg, &shadows));
        self.put("shadow_cover_is_minimum_twin_cover", is_cover);
        self.put("mu_twin_cover_size", recomputed);
        let size = (self.t + 1) * cover.len();
        Ok(Ok(is_cover && shadows.len() == size && recomputed == size))
    }

    fn quotient_commutes(&mut self) -> Result<Outcome> {
        let lg = mycielskian_t(self.g, self.t)?;
        let q_of_mu = quotient_graph(lg.graph()).graph;
        let mu_of_q = mycielskian_t(&quotient_graph(self.g).graph, self.t)?.into_graph();
        let iso = is_isomorphic(&q_of_mu, &mu_of_q)?;
        self.put("quotient_of_mu_n", q_of_mu.vertex_count());
        self.put("quotient_of_mu_m", q_of_mu.edge_count());
        self.put("mu_of_quotient_n", mu_of_q.vertex_count());
        self.put("mu_of_quotient_m", mu_of_q.edge_count());
        self.put("isomorphic", iso);
        Ok(Ok(iso))
    }

    fn quotient_det_equal(&mut self) -> Result<Outcome> {
        let (q, qgroup) = self.quotient()?;
        require!(!is_complete_bipartite(&q), "G is not complete bipartite");
        let r = self.det(&q.graph, &qgroup)?;
        let det_q = self.record_det("det_quotient", &r);
        let lg = mycielskian_t(self.g, self.t)?;
        let q_mu = quotient_graph(lg.graph()).graph;
        let q_mu_group = self.group(&q_mu)?;
        let r = self.det(&q_mu, &q_mu_group)?;
        let det_q_mu = self.record_det("det_quotient_of_mu", &r);
        Ok(Ok(det_q == det_q_mu))
    }

    fn has_twins(&mut self) -> bool {
        let free = twin_partition(self.g).is_twin_free();
        self.put("twin_free", free);
        !free
    }

    fn det_with_twins(&mut self) -> Result<Outcome> {
        require!(self.has_twins(), "G has twins");
        let group = self.group(self.g)?;
        require!(
            self.cover_is_determining(&group)?,
            "the minimum twin cover is a determining set"
        );
        let r = self.det(self.g, &group)?;
        let det = self.record_det("det_g", &r);
        let (lg, mu_group) = self.mycielskian()?;
        let r = self.det(lg.graph(), &mu_group)?;
        let det_mu = self.record_mu_det(&lg, &r);
        let shadows = twin_cover_shadows(self.g, self.t, &minimum_twin_cover(self.g))?;
        let shadows_det = is_determining_set(lg.graph(), &shadows, &mu_group)?;
        self.put("shadow_cover_determining", shadows_det);
        Ok(Ok(det_mu == (self.t + 1) * det && shadows_det))
    }

    /// Returns `(|T|, det(G̃), det(μ))` after checking the shared hypotheses.
    fn twin_bounds(&mut self) -> Result<std::result::Result<(usize, usize, usize), String>> {
        if !self.has_twins() {
            return Ok(Err("G has twins".into()));
        }
        let cover = minimum_twin_cover(self.g).len();
        self.put("twin_cover_size", cover);
        let (q, qgroup) = self.quotient()?;
        let r = self.det(&q.graph, &qgroup)?;
        let det_q = self.record_det("det_quotient", &r);
        let (lg, mu_group) = self.mycielskian()?;
        let r = self.det(lg.graph(), &mu_group)?;
        let det_mu = self.record_mu_det(&lg, &r);
        let lower = (self.t + 1) * cover;
        self.put("lower_bound", lower);
        self.put("upper_bound", lower + det_q);
        Ok(Ok((cover, det_q, det_mu)))
    }

    fn det_bounds_mycielskian(&mut self) -> Result<Outcome> {
        let (cover, det_q, det_mu) = match self.twin_bounds()? {
            Ok(v) => v,
            Err(why) => return Ok(Err(why)),
        };
        let lower = (self.t + 1) * cover;
        Ok(Ok(lower <= det_mu && det_mu <= lower + det_q))
    }

    fn no_two_coloring_below_threshold(&mut self) -> Result<Outcome> {
        let n = self.g.vertex_count();
        require!(
            is_complete(self.g) && n >= 3,
            "G is complete with at least 3 vertices"
        );
        let k = n - 1;
        require!(
            self.t + 1 < code_length(k),
            "t < ceil(log2(det(G) + 1)) - 1"
        );
        let (lg, group) = self.mycielskian()?;
        let rho = self.rho(&lg, &group)?;
        let dist = distinguishing_number_with(
            lg.graph(),
            &group,
            lg.graph().vertex_count(),
            self.limits.subset_budget,
        )?;
        self.put("dist_mu", dist.value);
        let dist_above_two = matches!(dist.value, InvariantValue::Exact(x) if x > 2);
        Ok(Ok(!group.is_trivial()
            && rho == InvariantValue::Undefined
            && dist_above_two))
    }

    fn cost_bound_attained(&mut self) -> Result<Outcome> {
        let n = self.g.vertex_count();
        require!(
            is_complete(self.g) && n >= 4,
            "G is complete with at least 4 vertices"
        );
        require!(n.is_power_of_two(), "|V(G)| is a power of two");
        let k = n - 1;
        let r = code_length(k);
        require!(self.t + 1 == r, "t = ceil(log2(det(G) + 1)) - 1");
        let (lg, group) = self.mycielskian()?;
        let rho = self.rho(&lg, &group)?;
        let bound = (k + 1) * r / 2;
        self.put("rho_bound", bound);
        Ok(Ok(rho == InvariantValue::Exact(bound)))
    }

    fn upper_bound_attained(&mut self) -> Result<Outcome> {
        let nv = self.g.vertex_count();
        let is_pendant_family =
            nv >= 6 && is_isomorphic(self.g, &FamilySpec::Fig4(nv - 4).build()?)?;
        require!(
            is_pendant_family,
            "G is the 4-cycle-with-pendants family graph"
        );
        let (cover, det_q, det_mu) = match self.twin_bounds()? {
            Ok(v) => v,
            Err(why) => return Ok(Err(why)),
        };
        Ok(Ok(det_mu == (self.t + 1) * cover + det_q))
    }
}

/// One line of an instance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixEntry {
    pub id: CheckId,
    pub family: FamilySpec,
    pub t: usize,
}

#[derive(Debug, Deserialize)]
struct SuiteFile {
    schema: String,
    #[serde(default)]
    check: Vec<SuiteLine>,
}

#[derive(Debug, Deserialize)]
struct SuiteLine {
    id: CheckId,
    families: Vec<String>,
    t: Vec<usize>,
}

/// Parses a suite file; each `[[check]]` table expands to the product of its
/// families and `t` values, in file order.
pub fn parse_suite(text: &str) -> Result<Vec<MatrixEntry>> {
    let file: SuiteFile =
        toml::from_str(text).map_err(|e| Error::input(format!("suite file: {e}")))?;
    if file.schema != crate::SCHEMA {
        return Err(Error::input(format!(
            "suite schema '{}' is not '{}'",
            file.schema,
            crate::SCHEMA
        )));
    }
    let mut out = Vec::new();
    for line in file.check {
        for fam in &line.families {
            let family: FamilySpec = fam.parse()?;
            for &t in &line.t {
                out.push(MatrixEntry {
                    id: line.id,
                    family,
                    t,
                });
            }
        }
    }
    Ok(out)
}

pub fn default_suite() -> Vec<MatrixEntry> {
    parse_suite(DEFAULT_SUITE).expect("bundled suite parses")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<TheoremCheck>,
}

impl Report {
    fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Verdict::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Verdict::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Verdict::Skipped)
    }

    /// True iff nothing failed; skips do not count against the suite.
    pub fn success(&self) -> bool {
        self.failed() == 0
    }
}

/// Runs every entry, concurrently; the report keeps matrix order.
pub fn run_suite(matrix: &[MatrixEntry], limits: Limits) -> Report {
    let checks = matrix
        .par_iter()
        .map(|e| verify_family(e.id, &e.family, e.t, limits))
        .collect();
    Report { checks }
}
