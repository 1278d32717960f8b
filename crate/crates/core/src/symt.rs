//! The transposition Cayley graph `Sym_n(T)`.
//!
//! Vertices are permutations of `{1..n}`; `p ~ p·t` for every transposition
//! `t`. Distances come from cycle counts, so balls are streamed from
//! [`crate::perm::for_each_in_sphere`] and never require a BFS.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ExplicitGraph, GraphView, LocalProfile, NResult};
use crate::numbers::{ball_size, binomial, factorial, restricted_stirling_sum, sphere_size, RestrictedKind};
use crate::perm::{
    all_permutations, cayley_distance, count_quotient_cycles, for_each_in_ball, for_each_in_sphere, CycleType,
    Permutation, Transposition,
};

/// Default element budget for [`n_sym_brute`].
pub const DEFAULT_SYM_BUDGET: u64 = 100_000_000;

/// Largest `n` for which [`SymnTView`] lists its vertices.
const LISTABLE_MAX_N: usize = 8;

/// `8!`: vertex cap for sweeps over the materialised graph.
const FULL_SWEEP_BUDGET: u64 = 40_320;

/// `Sym_n(T)` as an implicit graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymnTView {
    n: usize,
}

impl SymnTView {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "Sym_n(T) needs n >= 2 to be a graph with an edge (got {n})"
            )));
        }
        Ok(SymnTView { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }
}

impl GraphView for SymnTView {
    type Vertex = Permutation;

    fn neighbors(&self, v: &Permutation) -> Vec<Permutation> {
        Transposition::all(self.n).map(|t| v.apply_transposition(t)).collect()
    }

    fn contains(&self, v: &Permutation) -> bool {
        v.degree() == self.n
    }

    fn order(&self) -> Option<BigInt> {
        Some(factorial(self.n))
    }

    fn vertices(&self) -> Option<Vec<Permutation>> {
        (self.n <= LISTABLE_MAX_N).then(|| all_permutations(self.n))
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }

    fn base_point(&self) -> Permutation {
        self.identity()
    }

    fn metric(&self, x: &Permutation, y: &Permutation) -> Option<usize> {
        Some(cayley_distance(x, y))
    }

    fn format_vertex(&self, v: &Permutation) -> String {
        v.to_string()
    }

    fn parse_vertex(&self, s: &str) -> Result<Permutation> {
        Permutation::parse(s, Some(self.n))
    }

    fn describe(&self) -> String {
        format!("symt:{}", self.n)
    }
}

/// `(c_i, a_i, b_i)(e, y)` for `y` of the given cycle type:
/// `c = ½(Σ j² h_j − n)`, `a = 0`, `b = ½(n² − Σ j² h_j)`.
pub fn local_params_formula(ct: &CycleType) -> LocalProfile {
    let n = ct.n() as u64;
    let sq = ct.sum_of_squares() as u64;
    LocalProfile {
        c: (sq - n) / 2,
        a: 0,
        b: (n * n - sq) / 2,
    }
}

/// `|E_{r-1,r}(y)| = |S_{r-1}| − |S_{r-2}| + … ± |S_0|`: edges between the
/// spheres `S_{r-1}` and `S_r` labelled by one fixed transposition.
pub fn labeled_edge_count(n: usize, r: usize) -> Result<BigInt> {
    if r == 0 || r >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n - 1 (got n={n}, r={r})"
        )));
    }
    let mut acc = BigInt::zero();
    for j in 0..r {
        let term = sphere_size(n, j);
        if (r - 1 - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// All edges between `S_{r-1}` and `S_r`: `C(n,2)` times the labelled count.
pub fn total_edge_count(n: usize, r: usize) -> Result<BigInt> {
    Ok(binomial(n as i64, 2) * labeled_edge_count(n, r)?)
}

/// Direct counts behind [`labeled_edge_count`] for the label `(1 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCountCheck {
    /// Edges `{z, z·(1 2)}` with `z ∈ S_{r-1}` and `z·(1 2) ∈ S_r`.
    pub edges: u64,
    /// Elements of `S_{r-1}` with `1, 2` in different cycles.
    pub lower_split: u64,
    /// Elements of `S_r` with `1, 2` in the same cycle.
    pub upper_joined: u64,
}

pub fn labeled_edge_count_direct(n: usize, r: usize) -> Result<EdgeCountCheck> {
    if r == 0 || r >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n - 1 (got n={n}, r={r})"
        )));
    }
    let t = Transposition::new(1, 2)?;
    let mut check = EdgeCountCheck {
        edges: 0,
        lower_split: 0,
        upper_joined: 0,
    };
    for_each_in_sphere(n, r - 1, |z| {
        if z.apply_transposition(t).cycle_count() == n - r {
            check.edges += 1;
        }
        if !z.same_cycle(1, 2) {
            check.lower_split += 1;
        }
    });
    for_each_in_sphere(n, r, |z| {
        if z.same_cycle(1, 2) {
            check.upper_joined += 1;
        }
    });
    Ok(check)
}

/// `|B_r(x) ∩ B_r(y)|` for one class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassValue {
    pub class: CycleType,
    pub distance: usize,
    pub value: u64,
}

/// Outcome of [`n_sym_brute`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymBruteReport {
    pub n: usize,
    pub r: usize,
    pub value: u64,
    /// `N_s` for `1 <= s <= min(2r, n-1)`.
    pub per_distance: BTreeMap<usize, u64>,
    pub classes: Vec<ClassValue>,
    /// Every class attaining the maximum.
    pub argmax: Vec<CycleType>,
    pub ball_size: u64,
}

impl SymBruteReport {
    pub fn class_value(&self, ct: &CycleType) -> Option<u64> {
        self.classes.iter().find(|c| &c.class == ct).map(|c| c.value)
    }

    pub fn to_nresult(&self) -> NResult<Permutation> {
        let best = self
            .classes
            .iter()
            .find(|c| c.class == self.argmax[0])
            .expect("argmax is one of the classes");
        NResult {
            value: self.value,
            per_distance: self.per_distance.clone(),
            witness: (Permutation::identity(self.n), best.class.representative()),
            witness_distance: best.distance,
        }
    }
}

/// The ball `B_r(e)` as a flat array of 0-based images plus sphere indices.
struct FlatBall {
    n: usize,
    images: Vec<u32>,
    sphere: Vec<u8>,
}

impl FlatBall {
    fn collect(n: usize, r: usize) -> Self {
        let mut images = Vec::new();
        let mut sphere = Vec::new();
        for_each_in_ball(n, r, |i, p| {
            images.extend_from_slice(p.raw());
            sphere.push(i as u8);
        });
        FlatBall { n, images, sphere }
    }

    fn len(&self) -> usize {
        self.sphere.len()
    }

    /// Members within `r` of `y` (given as `y⁻¹`), where `s = d(e, y)`.
    fn count_near(&self, inv_y: &[u32], s: usize, r: usize) -> u64 {
        const CHUNK: usize = 4096;
        let n = self.n;
        self.sphere
            .par_chunks(CHUNK)
            .zip(self.images.par_chunks(CHUNK * n))
            .map(|(spheres, imgs)| {
                let mut count = 0u64;
                for (k, &i) in spheres.iter().enumerate() {
                    if (i as usize).abs_diff(s) > r {
                        continue;
                    }
                    let z = &imgs[k * n..(k + 1) * n];
                    if n - count_quotient_cycles(inv_y, z) <= r {
                        count += 1;
                    }
                }
                count
            })
            .sum()
    }
}

/// `N(Sym_n(T), r)` by class-representative reduction with the default
/// budget.
pub fn n_sym_brute(n: usize, r: usize) -> Result<SymBruteReport> {
    n_sym_brute_with_budget(n, r, DEFAULT_SYM_BUDGET)
}

/// For every `s <= min(2r, n-1)` and every cycle type `y` in `S_s`, counts
/// `|B_r(e) ∩ B_r(y)|` by one pass over `B_r(e)`. Refuses when
/// `|B_r| · (number of classes)` exceeds `budget`.
pub fn n_sym_brute_with_budget(n: usize, r: usize, budget: u64) -> Result<SymBruteReport> {
    n_sym_brute_inner(n, r, budget, None)
}

/// As [`n_sym_brute_with_budget`], restricted to centres at distances
/// `s <= max_s`.
pub fn n_sym_brute_up_to(n: usize, r: usize, max_s: usize, budget: u64) -> Result<SymBruteReport> {
    n_sym_brute_inner(n, r, budget, Some(max_s))
}

fn n_sym_brute_inner(n: usize, r: usize, budget: u64, max_s: Option<usize>) -> Result<SymBruteReport> {
    SymnTView::new(n)?;
    if r == 0 {
        return Err(Error::InvalidArgument("N(Γ, r) needs r >= 1".into()));
    }
    let top = (2 * r).min(n - 1).min(max_s.unwrap_or(usize::MAX));
    if top == 0 {
        return Err(Error::InvalidArgument("no centre distance to sweep".into()));
    }
    let reps: Vec<CycleType> = (1..=top).flat_map(|s| CycleType::with_sphere_index(n, s)).collect();
    let ball_len = ball_size(n, r.min(n - 1));
    let cost = &ball_len * BigInt::from(reps.len());
    if cost > BigInt::from(budget) {
        return Err(Error::infeasible(
            format!("class sweep of Sym_{n}(T) at r={r}"),
            cost,
            budget,
        ));
    }
    let ball = FlatBall::collect(n, r);
    debug_assert_eq!(BigInt::from(ball.len()), ball_len);
    let classes: Vec<ClassValue> = reps
        .into_iter()
        .map(|ct| {
            let y = ct.representative();
            let inv = y.inverse();
            let s = ct.sphere_index();
            let value = ball.count_near(inv.raw(), s, r);
            ClassValue {
                class: ct,
                distance: s,
                value,
            }
        })
        .collect();
    let mut per_distance = BTreeMap::new();
    for c in &classes {
        let e = per_distance.entry(c.distance).or_insert(0);
        *e = (*e).max(c.value);
    }
    let value = classes.iter().map(|c| c.value).max().expect("at least one class");
    let argmax = classes
        .iter()
        .filter(|c| c.value == value)
        .map(|c| c.class.clone())
        .collect();
    Ok(SymBruteReport {
        n,
        r,
        value,
        per_distance,
        classes,
        argmax,
        ball_size: ball.len() as u64,
    })
}

/// `|B_r(e) ∩ B_r(y)|` by streaming `B_r(e)`; no storage.
pub fn intersection_with_identity(y: &Permutation, r: usize) -> u64 {
    let n = y.degree();
    let inv = y.inverse();
    let s = n - y.cycle_count();
    let mut count = 0;
    for_each_in_ball(n, r, |i, z| {
        if i.abs_diff(s) <= r && n - count_quotient_cycles(inv.raw(), z.raw()) <= r {
            count += 1;
        }
    });
    count
}

/// `N(Sym_n(T), r)` over every pair of the materialised graph, no reduction.
pub fn n_sym_full_sweep(n: usize, r: usize) -> Result<NResult<Permutation>> {
    let view = SymnTView::new(n)?;
    let (explicit, labels) = ExplicitGraph::from_view(&view, FULL_SWEEP_BUDGET)?;
    let res = explicit.n_all_pairs(r)?;
    Ok(res.map_vertices(|id| labels[id].clone()))
}

/// Whether a closed value is proven at this `n` or only holds for large
/// `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Validity {
    Proven,
    Asymptotic,
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Validity::Proven => write!(f, "proven"),
            Validity::Asymptotic => write!(f, "asymptotic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedValue {
    pub value: BigInt,
    pub validity: Validity,
}

/// `b(n, r−1) + c_{3¹}(n, n−r) + c_{3¹}(n, n−r−1)`.
pub fn n_sym_general(n: usize, r: usize) -> BigInt {
    let inner = if r == 0 {
        BigInt::zero()
    } else {
        ball_size(n, (r - 1).min(n.saturating_sub(1)))
    };
    inner
        + restricted_stirling_sum(RestrictedKind::ThreeCycle, n, r)
        + restricted_stirling_sum(RestrictedKind::ThreeCycle, n, r + 1)
}

/// Closed value of `N(Sym_n(T), r)` with its validity tag.
pub fn n_sym_closed(n: usize, r: usize) -> Result<ClosedValue> {
    if r == 0 {
        return Err(Error::InvalidArgument("N(Γ, r) needs r >= 1".into()));
    }
    let m = n as i64;
    let tag = |proven: bool| if proven { Validity::Proven } else { Validity::Asymptotic };
    let out = match r {
        1 => ClosedValue {
            value: BigInt::from(3),
            validity: tag(n >= 3),
        },
        2 => ClosedValue {
            value: BigInt::from(3 * (m + 1) * (m - 2) / 2),
            validity: tag(n >= 5),
        },
        3 => {
            let value = ball_size(n, 2.min(n.saturating_sub(1)))
                + BigInt::from((m + 2) * (m - 3))
                + binomial(m - 3, 2) * 24
                + binomial(m - 3, 3) * 22
                + binomial(m - 3, 4) * 6;
            ClosedValue {
                value,
                validity: tag(n >= 16),
            }
        }
        _ => ClosedValue {
            value: n_sym_general(n, r),
            validity: Validity::Asymptotic,
        },
    };
    Ok(out)
}

/// `N_1(Sym_n(T), r) = 2(|S_{r−1}| + |S_{r−3}| + …)`.
pub fn n1_sym_closed(n: usize, r: usize) -> Result<BigInt> {
    if r == 0 || r >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n - 1 (got n={n}, r={r})"
        )));
    }
    let mut acc = BigInt::zero();
    let mut j = r as i64 - 1;
    while j >= 0 {
        acc += sphere_size(n, j as usize);
        j -= 2;
    }
    Ok(acc * 2)
}

/// `z_1 + z_2 = c_kind(n, n−r) + c_kind(n, n−r−1)`, the part of
/// `B_r(e) ∩ B_r(y*)` outside `B_{r−1}(e)` for `y*` of the given kind.
pub fn z_decomposition(n: usize, r: usize, kind: RestrictedKind) -> BigInt {
    restricted_stirling_sum(kind, n, r) + restricted_stirling_sum(kind, n, r + 1)
}

/// Row classes of the radius-2 intersection table, top sphere first.
pub const TABLE1_ROWS: [&[usize]; 11] = [
    &[5],
    &[4, 2],
    &[3, 3],
    &[3, 2, 2],
    &[2, 2, 2, 2],
    &[4],
    &[3, 2],
    &[2, 2, 2],
    &[3],
    &[2, 2],
    &[2],
];

/// Column classes: the classes making up `B_2(e)`.
pub const TABLE1_COLUMNS: [&[usize]; 4] = [&[3], &[2, 2], &[2], &[]];

/// Entries as printed, with `n` substituted.
fn table1_displayed(row: usize, col: usize, n: usize) -> BigInt {
    let m = n as i64;
    let c2 = |k: i64| binomial(k, 2);
    let v = |x: i64| BigInt::from(x);
    match (row, col) {
        (0, 0) => v(10),
        (0, 1) => v(10),
        (1, 0) => v(4),
        (1, 1) => v(6),
        (2, 0) => v(2),
        (2, 1) => v(9),
        (3, 0) => v(1),
        (3, 1) => v(7),
        (4, 0) => v(0),
        (4, 1) => v(6),
        (0..=4, _) => v(0),
        (5, 0) => v(4),
        (5, 1) => v(2),
        (5, 2) => v(6),
        (6, 0) => v(1),
        (6, 1) => v(3),
        (6, 2) => v(4),
        (7, 0) => v(0),
        (7, 1) => v(3),
        (7, 2) => v(3),
        (5..=7, _) => v(0),
        (8, 0) => v(6 * (m - 3) + 2),
        (8, 1) => c2(m - 2) * 3,
        (8, 2) => v(3),
        (9, 0) => v(4 * (m - 2)),
        (9, 1) => c2(m - 2) * 2 - 1,
        (9, 2) => v(2),
        (10, 0) => v(2 * (m - 2)),
        (10, 1) => c2(m - 2),
        (10, 2) => c2(m),
        (8..=10, 3) => v(1),
        _ => unreachable!("table has 11 rows and 4 columns"),
    }
}

/// Cells whose printed value disagrees with direct counting at every `n`
/// where the row exists, as `(row, col)`.
pub const TABLE1_ERRATA: [(usize, usize); 2] = [(1, 1), (9, 1)];

/// Corrected value of a cell: the printed one except for the errata.
fn table1_value(row: usize, col: usize, n: usize) -> BigInt {
    match (row, col) {
        // y = (1 2 3 4)(5 6): besides the six double transpositions sharing
        // a 2-cycle with a neighbour of y, (1 3)(5 6) and (2 4)(5 6) lie at
        // distance 2
        (1, 1) => BigInt::from(8),
        // y = (1 2)(3 4): y itself, four sharing one transposition, and the
        // two other double transpositions on {1,2,3,4}
        (9, 1) => binomial(n as i64 - 2, 2) * 2 + 1,
        _ => table1_displayed(row, col, n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    /// As printed.
    #[serde(with = "crate::decimal")]
    pub displayed: BigInt,
    /// As printed unless the cell is a known erratum.
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    /// `|{z in the column class : d(z, y) <= 2}|` for the row representative.
    pub direct: Option<u64>,
}

impl Table1Entry {
    /// `value` equals the direct count.
    pub fn verified(&self) -> bool {
        self.direct.is_some_and(|d| BigInt::from(d) == self.value)
    }

    pub fn displayed_matches(&self) -> bool {
        self.direct.is_some_and(|d| BigInt::from(d) == self.displayed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub label: String,
    pub lengths: Vec<usize>,
    pub sphere: usize,
    /// False when the class needs more than `n` points.
    pub present: bool,
    pub entries: Vec<Table1Entry>,
}

impl Table1Row {
    /// Row sum: `|B_2(e) ∩ B_2(y)|`.
    pub fn value_sum(&self) -> BigInt {
        self.entries.iter().map(|e| &e.value).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub n: usize,
    pub columns: Vec<String>,
    pub rows: Vec<Table1Row>,
}

impl Table1 {
    /// Every entry of every present row matches its direct count.
    pub fn all_verified(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.present)
            .all(|r| r.entries.iter().all(Table1Entry::verified))
    }

    pub fn verified_count(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| &r.entries)
            .filter(|e| e.verified())
            .count()
    }

    /// `(row, col)` of present cells whose printed value differs from the
    /// direct count.
    pub fn displayed_mismatches(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ri, row) in self.rows.iter().enumerate().filter(|(_, r)| r.present) {
            for (ci, e) in row.entries.iter().enumerate() {
                if !e.displayed_matches() {
                    out.push((ri, ci));
                }
            }
        }
        out
    }

    /// `N_s(Sym_n(T), 2)` as the largest row sum over present rows of
    /// sphere `s`.
    pub fn n_s(&self, s: usize) -> Option<BigInt> {
        self.rows
            .iter()
            .filter(|r| r.present && r.sphere == s)
            .map(Table1Row::value_sum)
            .max()
    }
}

fn class_label(lengths: &[usize]) -> String {
    if lengths.is_empty() {
        return "1^n".into();
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in lengths {
        *counts.entry(l).or_insert(0) += 1;
    }
    counts
        .iter()
        .map(|(l, h)| format!("{l}^{h}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The radius-2 intersection table at `n`, each entry checked by direct
/// counting over `B_2(e)`.
pub fn table1(n: usize) -> Result<Table1> {
    SymnTView::new(n)?;
    let columns: Vec<CycleType> = TABLE1_COLUMNS
        .iter()
        .map(|l| CycleType::padded(n, l))
        .collect::<Result<_>>()?;
    // B_2(e) grouped by column class
    let mut by_column: Vec<Vec<Permutation>> = vec![Vec::new(); columns.len()];
    for_each_in_ball(n, 2, |_, z| {
        let ct = z.cycle_type();
        if let Some(k) = columns.iter().position(|c| *c == ct) {
            by_column[k].push(z.clone());
        }
    });
    let rows = TABLE1_ROWS
        .iter()
        .enumerate()
        .map(|(ri, lengths)| {
            let support: usize = lengths.iter().sum();
            let sphere: usize = lengths.iter().map(|l| l - 1).sum();
            let present = support <= n;
            let y = present
                .then(|| CycleType::padded(n, lengths).map(|ct| ct.representative()))
                .transpose()?;
            let entries = (0..columns.len())
                .map(|ci| {
                    let direct = y
                        .as_ref()
                        .map(|y| by_column[ci].iter().filter(|z| cayley_distance(z, y) <= 2).count() as u64);
                    Table1Entry {
                        displayed: table1_displayed(ri, ci, n),
                        value: table1_value(ri, ci, n),
                        direct,
                    }
                })
                .collect();
            Ok(Table1Row {
                label: class_label(lengths),
                lengths: lengths.to_vec(),
                sphere,
                present,
                entries,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1 {
        n,
        columns: TABLE1_COLUMNS.iter().map(|l| class_label(l)).collect(),
        rows,
    })
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut img: Vec<u32> = (0..n as u32).collect();
    img.shuffle(rng);
    Permutation::from_raw(img)
}

fn random_transposition(n: usize, rng: &mut ChaCha8Rng) -> Transposition {
    let i = rng.random_range(1..=n);
    let mut j = rng.random_range(1..n);
    if j >= i {
        j += 1;
    }
    Transposition::new(i.min(j), i.max(j)).expect("distinct points")
}

/// Checks that `x ↦ a x b⁻¹` and `x ↦ x⁻¹` carry edges to edges and that
/// conjugation preserves every sphere around `e`. Exhaustive for `n = 3`,
/// otherwise `trials` seeded samples.
pub fn aut_action_check(n: usize, trials: u64, seed: u64) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n >= 3 (got {n})")));
    }
    let e = Permutation::identity(n);
    let edge_ok = |a: &Permutation, b_inv: &Permutation, x: &Permutation, t: Transposition| {
        let y = x.apply_transposition(t);
        let ax = a.compose(x).compose(b_inv);
        let ay = a.compose(&y).compose(b_inv);
        cayley_distance(&ax, &ay) == 1 && cayley_distance(&x.inverse(), &y.inverse()) == 1
    };
    let conj_ok = |c: &Permutation, x: &Permutation| {
        let cx = c.compose(x).compose(&c.inverse());
        cayley_distance(&e, &cx) == cayley_distance(&e, x)
    };
    if n == 3 {
        let all = all_permutations(n);
        for a in &all {
            for b in &all {
                let b_inv = b.inverse();
                for x in &all {
                    for t in Transposition::all(n) {
                        if !edge_ok(a, &b_inv, x, t) {
                            return Ok(false);
                        }
                    }
                    if !conj_ok(a, x) {
                        return Ok(false);
                    }
                }
            }
        }
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = random_permutation(n, &mut rng);
        let b = random_permutation(n, &mut rng);
        let x = random_permutation(n, &mut rng);
        let t = random_transposition(n, &mut rng);
        if !edge_ok(&a, &b.inverse(), &x, t) || !conj_ok(&a, &x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sanity relation between the cycle-count metric and BFS on a small `n`.
pub fn metric_matches_bfs(n: usize) -> Result<bool> {
    let view = SymnTView::new(n)?;
    let (explicit, labels) = ExplicitGraph::from_view(&view, u64::MAX)?;
    let dm = explicit.distance_matrix();
    for (a, row) in dm.iter().enumerate() {
        for (b, d) in row.iter().enumerate() {
            let d = d.ok_or(Error::Unreachable)? as usize;
            if d != cayley_distance(&labels[a], &labels[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{lambda_mu, local_profile, n_of_gamma};
    use crate::numbers::to_u64;
    use num_traits::One;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn view_basics() {
        let g = SymnTView::new(4).unwrap();
        let e = g.identity();
        assert_eq!(g.neighbors(&e).len(), 6);
        assert_eq!(g.order(), Some(BigInt::from(24)));
        assert_eq!(g.metric(&e, &perm("(1 2 3 4)", 4)), Some(3));
        assert!(SymnTView::new(1).is_err());
    }

    #[test]
    fn metric_is_bfs_distance() {
        for n in 2..=5 {
            assert!(metric_matches_bfs(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn local_params_examples() {
        let p = local_params_formula(&CycleType::padded(7, &[3]).unwrap());
        assert_eq!(p.c, 3);
        assert_eq!(p.a, 0);
        let p = local_params_formula(&CycleType::padded(7, &[2, 2]).unwrap());
        assert_eq!(p.c, 2);
        let p = local_params_formula(&CycleType::padded(5, &[5]).unwrap());
        assert_eq!((p.c, p.b), (10, 0));
        // c does not depend on n
        for n in 4..10 {
            assert_eq!(local_params_formula(&CycleType::padded(n, &[2, 2]).unwrap()).c, 2);
        }
    }

    #[test]
    fn local_params_match_bfs() {
        let g = SymnTView::new(5).unwrap();
        let e = g.identity();
        for i in 0..5 {
            for ct in CycleType::with_sphere_index(5, i) {
                let y = ct.representative();
                let want = local_params_formula(&ct);
                if i == 0 {
                    continue;
                }
                assert_eq!(local_profile(&g, &e, &y).unwrap(), want, "{ct}");
            }
        }
    }

    #[test]
    fn labeled_edges() {
        assert_eq!(labeled_edge_count(4, 2).unwrap(), BigInt::from(5));
        assert_eq!(labeled_edge_count(5, 3).unwrap(), BigInt::from(26));
        for n in 2..8 {
            assert_eq!(labeled_edge_count(n, 1).unwrap(), BigInt::one());
        }
        for n in 2..=7 {
            for r in 1..n.min(5) {
                let want = to_u64(&labeled_edge_count(n, r).unwrap()).unwrap();
                let d = labeled_edge_count_direct(n, r).unwrap();
                assert_eq!(
                    (d.edges, d.lower_split, d.upper_joined),
                    (want, want, want),
                    "n={n} r={r}"
                );
            }
        }
        assert!(labeled_edge_count(4, 0).is_err());
        assert!(labeled_edge_count(4, 4).is_err());
    }

    #[test]
    fn total_edges_cover_the_annulus() {
        // every z in S_r has exactly c_r(z) down-edges; summing gives the total
        for n in 3..=6 {
            for r in 1..n {
                let mut sum = 0u64;
                for_each_in_sphere(n, r, |z| sum += local_params_formula(&z.cycle_type()).c);
                assert_eq!(total_edge_count(n, r).unwrap(), BigInt::from(sum), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn brute_small_values() {
        assert_eq!(n_sym_brute(4, 1).unwrap().value, 3);
        let r = n_sym_brute(5, 2).unwrap();
        assert_eq!(r.value, 27);
        assert_eq!(r.argmax, vec![CycleType::padded(5, &[3]).unwrap()]);
        assert_eq!(n_sym_brute(6, 2).unwrap().value, 42);
    }

    #[test]
    fn brute_matches_full_sweep() {
        for n in 3..=6 {
            for r in 1..=3.min(n - 1) {
                let a = n_sym_brute(n, r).unwrap();
                let b = n_sym_full_sweep(n, r).unwrap();
                assert_eq!(a.value, b.value, "n={n} r={r}");
                assert_eq!(a.per_distance, b.per_distance, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn brute_matches_generic_sweep() {
        let g = SymnTView::new(5).unwrap();
        let generic = n_of_gamma(&g, 2).unwrap();
        let brute = n_sym_brute(5, 2).unwrap();
        assert_eq!(generic.value, brute.value);
        assert_eq!(generic.per_distance, brute.per_distance);
        assert_eq!(lambda_mu(&g).unwrap(), (0, 3));
    }

    #[test]
    fn targeted_intersection() {
        let y = perm("(1 2 3)", 8);
        let want = to_u64(&n_sym_closed(8, 3).unwrap().value).unwrap();
        assert_eq!(intersection_with_identity(&y, 3), want);
        let brute = n_sym_brute(6, 2).unwrap();
        let y = perm("(1 2 3)", 6);
        assert_eq!(
            Some(intersection_with_identity(&y, 2)),
            brute.class_value(&y.cycle_type())
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            n_sym_brute_with_budget(10, 3, 1000),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn closed_forms() {
        for n in 3..=10 {
            let c = n_sym_closed(n, 1).unwrap();
            assert_eq!(c.value, BigInt::from(3));
            assert_eq!(c.validity, Validity::Proven);
        }
        let c = n_sym_closed(6, 2).unwrap();
        assert_eq!((c.value, c.validity), (BigInt::from(42), Validity::Proven));
        let c = n_sym_closed(16, 3).unwrap();
        assert_eq!((c.value, c.validity), (BigInt::from(19389), Validity::Proven));
        assert_eq!(n_sym_closed(15, 3).unwrap().validity, Validity::Asymptotic);
        assert_eq!(n_sym_closed(30, 4).unwrap().validity, Validity::Asymptotic);
        // the general formula agrees with the special ones
        for n in 5..=30 {
            assert_eq!(n_sym_general(n, 2), n_sym_closed(n, 2).unwrap().value, "n={n}");
            assert_eq!(n_sym_general(n, 3), n_sym_closed(n, 3).unwrap().value, "n={n}");
        }
    }

    #[test]
    fn n1_closed_examples() {
        assert_eq!(n1_sym_closed(5, 2).unwrap(), BigInt::from(20));
        assert_eq!(n1_sym_closed(4, 2).unwrap(), BigInt::from(12));
        assert_eq!(n1_sym_closed(5, 4).unwrap(), BigInt::from(120));
        for n in 4..=7 {
            for r in 2..n.min(4) {
                let b = n_sym_brute(n, r).unwrap();
                assert_eq!(
                    BigInt::from(b.per_distance[&1]),
                    n1_sym_closed(n, r).unwrap(),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn z_decomposition_examples() {
        assert_eq!(z_decomposition(5, 2, RestrictedKind::ThreeCycle), BigInt::from(16));
        assert_eq!(
            z_decomposition(5, 2, RestrictedKind::DoubleTransposition),
            BigInt::from(11)
        );
        assert_eq!(z_decomposition(5, 5, RestrictedKind::ThreeCycle), BigInt::zero());
        for n in 5..=7 {
            let b = n_sym_brute(n, 3.min(n - 1)).unwrap();
            for kind in RestrictedKind::all() {
                let y = kind.witness_class(n).unwrap();
                let want = ball_size(n, 2) + z_decomposition(n, 3, kind);
                assert_eq!(Some(to_u64(&want).unwrap()), b.class_value(&y), "n={n} {kind}");
            }
        }
    }

    #[test]
    fn table1_small() {
        for n in 5..=7 {
            let t = table1(n).unwrap();
            assert_eq!(t.rows.len() * t.columns.len(), 44);
            assert!(t.all_verified(), "n={n}");
            let expected_errata: Vec<(usize, usize)> = TABLE1_ERRATA
                .iter()
                .copied()
                .filter(|&(r, _)| t.rows[r].present)
                .collect();
            assert_eq!(t.displayed_mismatches(), expected_errata, "n={n}");
            for row in t.rows.iter().filter(|r| r.present) {
                for (k, e) in row.entries.iter().enumerate() {
                    assert!(e.verified(), "n={n} row {} col {k}: {:?}", row.label, e);
                }
            }
            let b = n_sym_brute(n, 2).unwrap();
            for s in 1..=4 {
                assert_eq!(t.n_s(s), Some(BigInt::from(b.per_distance[&s])), "n={n} s={s}");
            }
        }
        let t = table1(4).unwrap();
        assert!(!t.rows[0].present);
        assert!(t.rows[5].present);
    }

    #[test]
    fn automorphism_actions() {
        assert!(aut_action_check(3, 0, 0).unwrap());
        assert!(aut_action_check(5, 2000, 11).unwrap());
    }

    #[test]
    fn spheres_partition_the_group() {
        for n in 1..=7 {
            let mut total = 0u64;
            for i in 0..n {
                for_each_in_sphere(n, i, |_| total += 1);
            }
            assert_eq!(BigInt::from(total), factorial(n));
        }
    }
}
