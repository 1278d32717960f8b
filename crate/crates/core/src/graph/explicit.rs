use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{GraphView, NResult};
use crate::error::{Error, Result};

/// A graph on vertices `0..v` stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGraph {
    adj: Vec<Vec<usize>>,
    transitive: bool,
    name: String,
}

const UNREACHED: u32 = u32::MAX;

impl ExplicitGraph {
    /// Builds a simple undirected graph; rejects loops and out-of-range ends,
    /// ignores repeated edges.
    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); v];
        for &(a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) outside 0..{v}")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(ExplicitGraph {
            adj,
            transitive: false,
            name: format!("graph on {v} vertices"),
        })
    }

    /// Graph on `0..v` with `a ~ b` iff `adjacent(a, b)` (called for `a < b`).
    pub fn from_fn(v: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); v];
        for a in 0..v {
            for b in a + 1..v {
                if adjacent(a, b) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        ExplicitGraph {
            adj,
            transitive: false,
            name: format!("graph on {v} vertices"),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Declares the graph vertex-transitive so sweeps may fix vertex 0.
    pub fn with_transitive_hint(mut self, transitive: bool) -> Self {
        self.transitive = transitive;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn complete(k: usize) -> Self {
        ExplicitGraph::from_fn(k, |_, _| true)
            .with_name(format!("K_{k}"))
            .with_transitive_hint(true)
    }

    pub fn cycle(k: usize) -> Self {
        ExplicitGraph::from_fn(k, |a, b| b - a == 1 || (a == 0 && b + 1 == k))
            .with_name(format!("C_{k}"))
            .with_transitive_hint(true)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        ExplicitGraph::from_fn(a + b, |x, y| (x < a) != (y < a)).with_name(format!("K_{{{a},{b}}}"))
    }

    pub fn petersen() -> Self {
        // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        ExplicitGraph::from_fn(10, |x, y| {
            let (a, b) = pairs[x];
            let (c, d) = pairs[y];
            a != c && a != d && b != c && b != d
        })
        .with_name("Petersen")
        .with_transitive_hint(true)
    }

    /// Materialises a view with an explicit universe of at most `budget`
    /// vertices; returns the graph and the label of each id.
    pub fn from_view<G: GraphView>(g: &G, budget: u64) -> Result<(Self, Vec<G::Vertex>)> {
        if let Some(order) = g.order() {
            if order > BigInt::from(budget) {
                return Err(Error::infeasible(
                    format!("materialising {}", g.describe()),
                    order,
                    budget,
                ));
            }
        }
        let verts = g
            .vertices()
            .ok_or_else(|| Error::OutOfScope(format!("{} cannot enumerate its vertices", g.describe())))?;
        if verts.len() as u64 > budget {
            return Err(Error::infeasible(
                format!("materialising {}", g.describe()),
                verts.len(),
                budget,
            ));
        }
        let index: HashMap<&G::Vertex, usize> = verts.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut adj = Vec::with_capacity(verts.len());
        for v in &verts {
            let mut list = Vec::new();
            for w in g.neighbors(v) {
                let id = *index
                    .get(&w)
                    .ok_or_else(|| Error::Internal(format!("neighbour {w:?} missing from the vertex list")))?;
                list.push(id);
            }
            list.sort_unstable();
            list.dedup();
            adj.push(list);
        }
        let graph = ExplicitGraph {
            adj,
            transitive: g.is_vertex_transitive(),
            name: g.describe(),
        };
        Ok((graph, verts))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn adjacency(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, |l| l.len());
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    /// The complement graph; the transitivity hint carries over.
    pub fn complement(&self) -> Self {
        let v = self.vertex_count();
        ExplicitGraph::from_fn(v, |a, b| !self.is_adjacent(a, b))
            .with_name(format!("complement of {}", self.name))
            .with_transitive_hint(self.transitive)
    }

    pub(crate) fn bfs_from(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.adj.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == UNREACHED {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances; `None` entries for unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.vertex_count())
            .into_par_iter()
            .map(|v| {
                self.bfs_from(v)
                    .into_iter()
                    .map(|d| (d != UNREACHED).then_some(d))
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.bfs_from(0).iter().all(|&d| d != UNREACHED)
    }

    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.bfs_from(v) {
                if d == UNREACHED {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// `N(Γ, r)` over every unordered pair, with balls held as bitsets.
    pub fn n_all_pairs(&self, r: usize) -> Result<NResult<usize>> {
        let v = self.vertex_count();
        if v < 2 {
            return Err(Error::InvalidArgument("need at least two vertices".into()));
        }
        if !self.is_connected() {
            return Err(Error::Unreachable);
        }
        let dist: Vec<Vec<u32>> = (0..v).into_par_iter().map(|x| self.bfs_from(x)).collect();
        let words = v.div_ceil(64);
        let balls: Vec<Vec<u64>> = dist
            .iter()
            .map(|row| {
                let mut bits = vec![0u64; words];
                for (z, &d) in row.iter().enumerate() {
                    if d as usize <= r {
                        bits[z / 64] |= 1 << (z % 64);
                    }
                }
                bits
            })
            .collect();
        // (size, x, y, s), best first by size then smallest (x, y)
        type Best = Option<(u64, usize, usize, usize)>;
        let rows: Vec<(BTreeMap<usize, u64>, Best)> = (0..v)
            .into_par_iter()
            .map(|x| {
                let mut per = BTreeMap::new();
                let mut best: Best = None;
                for y in x + 1..v {
                    let s = dist[x][y] as usize;
                    if s > 2 * r {
                        continue;
                    }
                    let size: u64 = balls[x]
                        .iter()
                        .zip(&balls[y])
                        .map(|(a, b)| (a & b).count_ones() as u64)
                        .sum();
                    let e = per.entry(s).or_insert(0);
                    *e = (*e).max(size);
                    if best.is_none_or(|b| size > b.0) {
                        best = Some((size, x, y, s));
                    }
                }
                (per, best)
            })
            .collect();
        let mut per_distance = BTreeMap::new();
        let mut best: Best = None;
        for (per, row_best) in rows {
            for (s, size) in per {
                let e = per_distance.entry(s).or_insert(0);
                *e = (*e).max(size);
            }
            if let Some(b) = row_best {
                if best.is_none_or(|cur| b.0 > cur.0) {
                    best = Some(b);
                }
            }
        }
        let (value, x, y, s) = best.expect("connected graph with two vertices has a pair");
        Ok(NResult {
            value,
            per_distance,
            witness: (x, y),
            witness_distance: s,
        })
    }

    /// Adjacency-list text: one line `id: n1 n2 …` per vertex.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for (v, list) in self.adj.iter().enumerate() {
            write!(out, "{v}:").expect("writing to a String");
            for w in list {
                write!(out, " {w}").expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the adjacency-list text format. Ids must be `0..v`; blank lines
    /// and `#` comments are skipped; the neighbour relation must be
    /// symmetric and loop-free.
    pub fn from_adjacency_text(text: &str) -> Result<Self> {
        let mut lists: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (id, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: missing `:`", lineno + 1)))?;
            let id: usize = id
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad id `{id}`", lineno + 1)))?;
            let nbrs = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("line {}: bad neighbour `{t}`", lineno + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            if lists.insert(id, nbrs).is_some() {
                return Err(Error::Parse(format!("line {}: vertex {id} listed twice", lineno + 1)));
            }
        }
        let v = lists.len();
        if lists.keys().enumerate().any(|(k, &id)| k != id) {
            return Err(Error::Parse(format!("vertex ids must be exactly 0..{v}")));
        }
        let mut adj: Vec<Vec<usize>> = lists.into_values().collect();
        for (a, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.iter().any(|&b| b >= v) {
                return Err(Error::Parse(format!("vertex {a} has a neighbour outside 0..{v}")));
            }
            if list.contains(&a) {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
        }
        for a in 0..v {
            for &b in &adj[a] {
                if adj[b].binary_search(&a).is_err() {
                    return Err(Error::Parse(format!("edge {a}-{b} is not symmetric")));
                }
            }
        }
        Ok(ExplicitGraph {
            adj,
            transitive: false,
            name: format!("graph on {v} vertices"),
        })
    }
}

impl GraphView for ExplicitGraph {
    type Vertex = usize;

    fn neighbors(&self, v: &usize) -> Vec<usize> {
        self.adj[*v].clone()
    }

    fn contains(&self, v: &usize) -> bool {
        *v < self.adj.len()
    }

    fn order(&self) -> Option<BigInt> {
        Some(BigInt::from(self.adj.len()))
    }

    fn vertices(&self) -> Option<Vec<usize>> {
        Some((0..self.adj.len()).collect())
    }

    fn is_vertex_transitive(&self) -> bool {
        self.transitive
    }

    fn base_point(&self) -> usize {
        0
    }

    fn format_vertex(&self, v: &usize) -> String {
        v.to_string()
    }

    fn parse_vertex(&self, s: &str) -> Result<usize> {
        let v: usize = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id `{s}`")))?;
        if v >= self.adj.len() {
            return Err(Error::Parse(format!("vertex {v} outside 0..{}", self.adj.len())));
        }
        Ok(v)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// `Some((m, t))` when the graph is the complete `t`-partite graph with parts
/// of size `m` (non-adjacency is an equivalence relation with classes of
/// size `m`).
pub fn complete_multipartite_shape(g: &ExplicitGraph) -> Option<(usize, usize)> {
    let v = g.vertex_count();
    if v == 0 {
        return None;
    }
    let mut class_of = vec![usize::MAX; v];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..v {
        if class_of[a] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..v).filter(|&b| b == a || !g.is_adjacent(a, b)).collect();
        for &b in &members {
            if class_of[b] != usize::MAX {
                return None;
            }
            class_of[b] = classes.len();
        }
        classes.push(members);
    }
    // within a class nobody is adjacent, across classes everybody is
    for a in 0..v {
        for b in a + 1..v {
            if (class_of[a] == class_of[b]) == g.is_adjacent(a, b) {
                return None;
            }
        }
    }
    let m = classes[0].len();
    classes.iter().all(|c| c.len() == m).then_some((m, classes.len()))
}
