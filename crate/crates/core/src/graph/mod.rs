//! Metric-ball machinery over implicit graphs.
//!
//! A [`GraphView`] is a vertex universe plus a neighbour oracle. Everything
//! here works by breadth-first search from the vertices involved; no global
//! vertex numbering is needed, so factorial-size graphs such as `Sym_n(T)` are
//! handled as long as the balls being visited stay small.

mod automorphism;
mod bounds;
mod explicit;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use automorphism::{brute_automorphism_count, DEFAULT_AUTOMORPHISM_CAP};
pub use bounds::{lp_lower_bound, regular_upper_bound, LpBound, MultipartiteClass, RegularUpperBound};
pub use explicit::{complete_multipartite_shape, ExplicitGraph};

/// Default cap on the number of vertices materialised by sweeps that cannot
/// fix a base point.
pub const DEFAULT_PAIR_SWEEP_BUDGET: u64 = 6_000;

/// Default cap on `|B_{2r}(x)|` for sweeps around a base point.
pub const DEFAULT_BASE_POINT_BUDGET: u64 = 1_000_000;

/// An undirected, simple, connected graph given by a neighbour oracle.
pub trait GraphView: Sync {
    type Vertex: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    /// Membership test for the vertex universe.
    fn contains(&self, v: &Self::Vertex) -> bool;

    /// Number of vertices when known.
    fn order(&self) -> Option<BigInt>;

    /// Explicit enumeration of the universe, for graphs small enough to list.
    fn vertices(&self) -> Option<Vec<Self::Vertex>> {
        None
    }

    /// Lets sweeps fix one endpoint at [`GraphView::base_point`]. Never
    /// detected automatically.
    fn is_vertex_transitive(&self) -> bool {
        false
    }

    fn base_point(&self) -> Self::Vertex;

    /// Closed-form distance, when the graph has one.
    fn metric(&self, _x: &Self::Vertex, _y: &Self::Vertex) -> Option<usize> {
        None
    }

    fn format_vertex(&self, v: &Self::Vertex) -> String;

    fn parse_vertex(&self, s: &str) -> Result<Self::Vertex>;

    fn describe(&self) -> String;
}

fn check_vertex<G: GraphView>(g: &G, v: &G::Vertex) -> Result<()> {
    if g.contains(v) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{v:?} is not a vertex of {}",
            g.describe()
        )))
    }
}

/// Breadth-first layers `S_0(x), …` stopping after `max_depth` or when the
/// component is exhausted. Layer order follows neighbour order, so it is
/// deterministic.
fn bfs_layers<G: GraphView>(g: &G, x: &G::Vertex, max_depth: usize) -> Vec<Vec<G::Vertex>> {
    bfs_layers_capped(g, x, max_depth, usize::MAX).expect("uncapped")
}

/// As [`bfs_layers`], giving up with `None` once more than `cap` vertices
/// have been reached.
fn bfs_layers_capped<G: GraphView>(g: &G, x: &G::Vertex, max_depth: usize, cap: usize) -> Option<Vec<Vec<G::Vertex>>> {
    let mut seen: HashSet<G::Vertex> = HashSet::new();
    seen.insert(x.clone());
    let mut layers = vec![vec![x.clone()]];
    while layers.len() <= max_depth {
        let mut next = Vec::new();
        for v in layers.last().expect("nonempty") {
            for w in g.neighbors(v) {
                if seen.insert(w.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    Some(layers)
}

/// Length of a shortest path from `x` to `y`.
pub fn distance<G: GraphView>(g: &G, x: &G::Vertex, y: &G::Vertex) -> Result<usize> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Ok(0);
    }
    let mut seen: HashSet<G::Vertex> = HashSet::new();
    seen.insert(x.clone());
    let mut frontier = vec![x.clone()];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for w in g.neighbors(v) {
                if &w == y {
                    return Ok(depth);
                }
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Err(Error::Unreachable)
}

/// Spheres `S_0(x), …, S_r(x)`; spheres beyond the eccentricity of `x` are
/// empty.
pub fn spheres_up_to<G: GraphView>(g: &G, x: &G::Vertex, r: usize) -> Result<Vec<Vec<G::Vertex>>> {
    check_vertex(g, x)?;
    let mut layers = bfs_layers(g, x, r);
    layers.resize_with(r + 1, Vec::new);
    Ok(layers)
}

/// The ball `B_r(x)` as a set.
pub fn ball<G: GraphView>(g: &G, x: &G::Vertex, r: usize) -> Result<HashSet<G::Vertex>> {
    Ok(spheres_up_to(g, x, r)?.into_iter().flatten().collect())
}

/// `|B_r(x) ∩ B_r(y)|` for distinct `x`, `y`. The ball around `x` is streamed
/// and each member is tested against `y`, by the graph's metric when it has
/// one and by membership in `B_r(y)` otherwise.
pub fn intersection_size<G: GraphView>(g: &G, x: &G::Vertex, y: &G::Vertex, r: usize) -> Result<u64> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(Error::InvalidArgument(
            "intersection_size needs two distinct centres".into(),
        ));
    }
    let layers = bfs_layers(g, x, r);
    if let Some(d) = g.metric(x, y) {
        if d > 2 * r {
            return Ok(0);
        }
        let count = layers
            .iter()
            .flatten()
            .filter(|z| g.metric(z, y).expect("metric is total") <= r)
            .count();
        return Ok(count as u64);
    }
    let around_y = ball(g, y, r)?;
    Ok(layers.iter().flatten().filter(|z| around_y.contains(*z)).count() as u64)
}

/// Checks the annulus decomposition of `B_r(x) ∩ B_r(y)` as a set identity:
/// for `r >= s = d(x,y)` it equals `B_{r-s}(x) ∪ [(B_r(x) \ B_{r-s}(x)) ∩ B_r(y)]`,
/// for `r < s` it equals `B_r(y) ∩ [B_r(x) \ B_{s-r-1}(x)]`.
pub fn ball_decomposition_check<G: GraphView>(g: &G, x: &G::Vertex, y: &G::Vertex, r: usize) -> Result<bool> {
    if x == y {
        return Err(Error::InvalidArgument("centres must differ".into()));
    }
    let s = distance(g, x, y)?;
    let layers_x = spheres_up_to(g, x, r)?;
    let ball_x_upto =
        |radius: usize| -> HashSet<G::Vertex> { layers_x.iter().take(radius + 1).flatten().cloned().collect() };
    let bx = ball_x_upto(r);
    let by = ball(g, y, r)?;
    let lhs: HashSet<G::Vertex> = bx.intersection(&by).cloned().collect();
    let rhs: HashSet<G::Vertex> = if r >= s {
        let inner = ball_x_upto(r - s);
        let annulus_part = bx.difference(&inner).filter(|z| by.contains(*z)).cloned();
        inner.iter().cloned().chain(annulus_part).collect()
    } else {
        let hole: HashSet<G::Vertex> = if s > r { ball_x_upto(s - r - 1) } else { HashSet::new() };
        by.iter()
            .filter(|z| bx.contains(*z) && !hole.contains(*z))
            .cloned()
            .collect()
    };
    Ok(lhs == rhs)
}

/// Neighbour counts of `y ∈ S_i(x)` in `S_{i-1}(x)`, `S_i(x)`, `S_{i+1}(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    pub c: u64,
    pub a: u64,
    pub b: u64,
}

impl LocalProfile {
    pub fn degree(&self) -> u64 {
        self.c + self.a + self.b
    }
}

/// `(c_i, a_i, b_i)(x, y)` with `i = d(x, y)`.
pub fn local_profile<G: GraphView>(g: &G, x: &G::Vertex, y: &G::Vertex) -> Result<LocalProfile> {
    let i = distance(g, x, y)?;
    let layers = spheres_up_to(g, x, i + 1)?;
    let index = |v: &G::Vertex, k: usize| layers.get(k).is_some_and(|l| l.contains(v));
    let mut p = LocalProfile { c: 0, a: 0, b: 0 };
    for w in g.neighbors(y) {
        if i > 0 && index(&w, i - 1) {
            p.c += 1;
        } else if index(&w, i) {
            p.a += 1;
        } else {
            p.b += 1;
        }
    }
    Ok(p)
}

fn common_neighbors<G: GraphView>(g: &G, x: &G::Vertex, y: &G::Vertex) -> u64 {
    let nx: HashSet<G::Vertex> = g.neighbors(x).into_iter().collect();
    g.neighbors(y).iter().filter(|w| nx.contains(*w)).count() as u64
}

fn sweep_centres<G: GraphView>(g: &G, budget: u64) -> Result<Vec<G::Vertex>> {
    if g.is_vertex_transitive() {
        return Ok(vec![g.base_point()]);
    }
    let verts = g.vertices().ok_or_else(|| {
        Error::OutOfScope(format!(
            "{} is neither vertex-transitive nor explicitly enumerable",
            g.describe()
        ))
    })?;
    if verts.len() as u64 > budget {
        return Err(Error::infeasible(
            format!("pair sweep over {}", g.describe()),
            verts.len(),
            budget,
        ));
    }
    Ok(verts)
}

/// `λ` (most triangles over an edge) and `μ` (most common neighbours of a
/// pair at distance 2).
pub fn lambda_mu<G: GraphView>(g: &G) -> Result<(u64, u64)> {
    let centres = sweep_centres(g, DEFAULT_PAIR_SWEEP_BUDGET)?;
    let mut lambda = 0;
    let mut mu: Option<u64> = None;
    for x in &centres {
        let layers = bfs_layers(g, x, 2);
        if let Some(s1) = layers.get(1) {
            for y in s1 {
                lambda = lambda.max(common_neighbors(g, x, y));
            }
        }
        if let Some(s2) = layers.get(2) {
            for y in s2 {
                let c = common_neighbors(g, x, y);
                mu = Some(mu.map_or(c, |m| m.max(c)));
            }
        }
    }
    let mu = mu.ok_or_else(|| Error::InvalidArgument(format!("{} has diameter < 2, μ is undefined", g.describe())))?;
    Ok((lambda, mu))
}

/// Result of an `N(Γ, r)` computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NResult<V> {
    pub value: u64,
    /// `N_s(Γ, r)` for every `1 <= s <= 2r` realised by some pair.
    pub per_distance: BTreeMap<usize, u64>,
    /// A pair `(x, y)` with `|B_r(x) ∩ B_r(y)| = value`.
    pub witness: (V, V),
    /// `d(witness.0, witness.1)`.
    pub witness_distance: usize,
}

impl<V> NResult<V> {
    pub fn map_vertices<W>(self, f: impl Fn(V) -> W) -> NResult<W> {
        let (x, y) = self.witness;
        NResult {
            value: self.value,
            per_distance: self.per_distance,
            witness: (f(x), f(y)),
            witness_distance: self.witness_distance,
        }
    }
}

/// `N(Γ, r) = max_{x≠y} |B_r(x) ∩ B_r(y)|` by exhaustive search with the
/// default budget for the sweep used.
pub fn n_of_gamma<G: GraphView>(g: &G, r: usize) -> Result<NResult<G::Vertex>> {
    let budget = if g.is_vertex_transitive() {
        DEFAULT_BASE_POINT_BUDGET
    } else {
        DEFAULT_PAIR_SWEEP_BUDGET
    };
    n_of_gamma_with_budget(g, r, budget)
}

/// As [`n_of_gamma`]. Vertex-transitive views fix `x` at the base point and
/// range `y` over `B_{2r}(x) \ {x}`, which may hold at most `budget`
/// vertices; other graphs are materialised (at most `budget` vertices) and
/// every pair is compared with bitset balls.
pub fn n_of_gamma_with_budget<G: GraphView>(g: &G, r: usize, budget: u64) -> Result<NResult<G::Vertex>> {
    if r == 0 {
        return Err(Error::InvalidArgument("N(Γ, r) needs r >= 1".into()));
    }
    if g.is_vertex_transitive() {
        return n_of_gamma_transitive(g, r, budget);
    }
    let (explicit, labels) = ExplicitGraph::from_view(g, budget)?;
    let res = explicit.n_all_pairs(r)?;
    Ok(res.map_vertices(|id| labels[id].clone()))
}

fn n_of_gamma_transitive<G: GraphView>(g: &G, r: usize, budget: u64) -> Result<NResult<G::Vertex>> {
    let x = g.base_point();
    let cap = usize::try_from(budget).unwrap_or(usize::MAX);
    let layers = bfs_layers_capped(g, &x, 2 * r, cap).ok_or_else(|| {
        Error::infeasible(
            format!("base-point sweep of {} at r={r}", g.describe()),
            format!("more than {budget}"),
            budget,
        )
    })?;
    if layers.len() < 2 {
        return Err(Error::InvalidArgument(format!("{} has a single vertex", g.describe())));
    }
    let around_x: HashSet<G::Vertex> = layers.iter().take(r + 1).flatten().cloned().collect();
    let candidates: Vec<(usize, &G::Vertex)> = layers
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(s, layer)| layer.iter().map(move |y| (s, y)))
        .collect();
    let sizes: Vec<u64> = candidates
        .par_iter()
        .map(|(_, y)| {
            bfs_layers(g, y, r)
                .iter()
                .flatten()
                .filter(|z| around_x.contains(*z))
                .count() as u64
        })
        .collect();
    let mut per_distance = BTreeMap::new();
    let mut best: Option<(u64, usize)> = None;
    for (k, (&(s, _), &size)) in candidates.iter().zip(&sizes).enumerate() {
        let entry = per_distance.entry(s).or_insert(0);
        *entry = (*entry).max(size);
        if best.is_none_or(|(v, _)| size > v) {
            best = Some((size, k));
        }
    }
    let (value, k) = best.expect("at least one candidate");
    Ok(NResult {
        value,
        per_distance,
        witness: (x, candidates[k].1.clone()),
        witness_distance: candidates[k].0,
    })
}

#[cfg(test)]
mod tests;
