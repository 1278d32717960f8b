//! Identifying an unknown vertex from distorted observations.
//!
//! Observations are distinct vertices within distance `r` of the hidden
//! centre. The generic reconstructor returns every vertex consistent with all
//! of them; the Hamming and Johnson reconstructors apply a coordinatewise
//! rule and fall back to the generic one when the rule cannot decide.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classic::{hamming_closed, johnson_closed, HammingView, JohnsonView};
use crate::error::{Error, Result};
use crate::graph::{ball, spheres_up_to, GraphView};
use crate::numbers::factorial;
use crate::perm::Permutation;

/// Distinct vertices claimed to lie in one ball of radius `radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationSet<V> {
    vertices: Vec<V>,
    radius: usize,
}

impl<V: Clone + Eq + std::hash::Hash + fmt::Debug> ObservationSet<V> {
    /// Rejects repeated vertices and empty sets.
    pub fn new(vertices: Vec<V>, radius: usize) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("no observations".into()));
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidArgument(format!("observation {v:?} repeated")));
            }
        }
        Ok(ObservationSet { vertices, radius })
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Parameters of the sampling channel.
#[derive(Clone, Debug)]
pub struct ChannelConfig<'a, G: GraphView> {
    pub graph: &'a G,
    pub center: G::Vertex,
    pub radius: usize,
    pub count: usize,
    pub seed: u64,
}

/// `count` distinct members of `B_r(center)`, uniformly without replacement;
/// the same seed always yields the same set in the same order.
pub fn sample_observations<G: GraphView>(cfg: &ChannelConfig<'_, G>) -> Result<ObservationSet<G::Vertex>> {
    let members: Vec<G::Vertex> = spheres_up_to(cfg.graph, &cfg.center, cfg.radius)?
        .into_iter()
        .flatten()
        .collect();
    if cfg.count == 0 || cfg.count > members.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot draw {} observations from a ball of size {}",
            cfg.count,
            members.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let picks = rand::seq::index::sample(&mut rng, members.len(), cfg.count);
    let chosen = picks.into_iter().map(|k| members[k].clone()).collect();
    ObservationSet::new(chosen, cfg.radius)
}

fn within<G: GraphView>(g: &G, balls: &[HashSet<G::Vertex>], obs: &ObservationSet<G::Vertex>, v: &G::Vertex) -> bool {
    match g.metric(v, &obs.vertices[0]) {
        Some(_) => obs
            .vertices
            .iter()
            .all(|o| g.metric(v, o).expect("metric is total") <= obs.radius),
        None => balls.iter().all(|b| b.contains(v)),
    }
}

fn observation_balls<G: GraphView>(g: &G, obs: &ObservationSet<G::Vertex>) -> Result<Vec<HashSet<G::Vertex>>> {
    if g.metric(&obs.vertices[0], &obs.vertices[0]).is_some() {
        return Ok(Vec::new());
    }
    obs.vertices.iter().map(|o| ball(g, o, obs.radius)).collect()
}

/// Every vertex within `r` of all observations, in BFS order from the first
/// observation.
pub fn reconstruct_intersection<G: GraphView>(g: &G, obs: &ObservationSet<G::Vertex>) -> Result<Vec<G::Vertex>> {
    for o in &obs.vertices {
        if !g.contains(o) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a vertex of {}",
                g.format_vertex(o),
                g.describe()
            )));
        }
    }
    let balls = observation_balls(g, obs)?;
    let candidates: Vec<G::Vertex> = spheres_up_to(g, &obs.vertices[0], obs.radius)?
        .into_iter()
        .flatten()
        .filter(|v| within(g, &balls, obs, v))
        .collect();
    if candidates.is_empty() {
        return Err(Error::Inconsistent { radius: obs.radius });
    }
    Ok(candidates)
}

/// Result of a rule-based reconstructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction<V> {
    /// The rule's answer, or the first consistent candidate after fallback.
    pub estimate: V,
    /// All vertices still possible; a singleton unless `ambiguous`.
    pub candidates: Vec<V>,
    /// Uniqueness could not be established.
    pub ambiguous: bool,
}

/// Settles a rule's proposals. With more than `guarantee` observations a
/// single consistent proposal is the centre; otherwise the full
/// intersection decides.
fn settle<G: GraphView>(
    g: &G,
    obs: &ObservationSet<G::Vertex>,
    guarantee: &BigInt,
    proposals: Vec<G::Vertex>,
) -> Result<Reconstruction<G::Vertex>> {
    let balls = observation_balls(g, obs)?;
    let consistent: Vec<G::Vertex> = proposals.into_iter().filter(|v| within(g, &balls, obs, v)).collect();
    if BigInt::from(obs.len()) > *guarantee && consistent.len() == 1 {
        let v = consistent[0].clone();
        return Ok(Reconstruction {
            estimate: v.clone(),
            candidates: vec![v],
            ambiguous: false,
        });
    }
    let all = reconstruct_intersection(g, obs)?;
    let estimate = consistent.first().unwrap_or(&all[0]).clone();
    Ok(Reconstruction {
        ambiguous: all.len() != 1,
        estimate,
        candidates: all,
    })
}

/// Largest number of proposals a tie is expanded into before deferring to
/// the full intersection.
const TIE_EXPANSION_CAP: usize = 4096;

/// Coordinatewise plurality vote over equal-length words.
pub fn reconstruct_majority_hamming(h: &HammingView, obs: &ObservationSet<u64>) -> Result<Reconstruction<u64>> {
    let n = h.n();
    let mut options: Vec<Vec<u64>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut counts = vec![0usize; h.q() as usize];
        for &o in obs.vertices() {
            counts[h.digit(o, k) as usize] += 1;
        }
        let top = *counts.iter().max().expect("q >= 2");
        options.push((0..h.q()).filter(|&d| counts[d as usize] == top).collect());
    }
    let mut proposals: Vec<Vec<u64>> = vec![Vec::new()];
    for opts in &options {
        if proposals.len() * opts.len() > TIE_EXPANSION_CAP {
            proposals.clear();
            break;
        }
        proposals = proposals
            .iter()
            .flat_map(|p| {
                opts.iter().map(move |&d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    let proposals = proposals
        .iter()
        .map(|digits| h.encode(digits))
        .collect::<Result<Vec<_>>>()?;
    let guarantee = if obs.radius() == 0 {
        BigInt::from(0)
    } else {
        hamming_closed(n, h.q(), obs.radius().min(n))?
    };
    settle(h, obs, &guarantee, proposals)
}

/// Top-`w` selection by element frequency.
pub fn reconstruct_threshold_johnson(j: &JohnsonView, obs: &ObservationSet<u64>) -> Result<Reconstruction<u64>> {
    let (n, w) = (j.n(), j.w());
    let mut counts = vec![0usize; n];
    for &o in obs.vertices() {
        for e in j.elements(o) {
            counts[e - 1] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| counts[b].cmp(&counts[a]).then(a.cmp(&b)));
    let cut = counts[order[w - 1]];
    let sure: Vec<usize> = order.iter().copied().filter(|&e| counts[e] > cut).collect();
    let tied: Vec<usize> = order.iter().copied().filter(|&e| counts[e] == cut).collect();
    let need = w - sure.len();
    let base: u64 = sure.iter().map(|&e| 1u64 << e).sum();
    let mut proposals = Vec::new();
    if crate::numbers::binomial(tied.len() as i64, need as i64) <= BigInt::from(TIE_EXPANSION_CAP) {
        choose(&tied, need, 0, base, &mut proposals);
    }
    let guarantee = if obs.radius() == 0 {
        BigInt::from(0)
    } else {
        johnson_closed(n, w, obs.radius())?
    };
    settle(j, obs, &guarantee, proposals)
}

fn choose(pool: &[usize], need: usize, from: usize, acc: u64, out: &mut Vec<u64>) {
    if need == 0 {
        out.push(acc);
        return;
    }
    for k in from..pool.len() {
        if pool.len() - k < need {
            break;
        }
        choose(pool, need - 1, k + 1, acc | (1 << pool[k]), out);
    }
}

/// A word over a finite alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<char>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(a∘g)(j) = a(g(j))`: coordinates permuted by `g`.
    pub fn permuted(&self, g: &Permutation) -> Result<Word> {
        if g.degree() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "permutation of degree {} applied to a word of length {}",
                g.degree(),
                self.len()
            )));
        }
        Ok(Word((1..=self.len()).map(|j| self.0[g.image(j) - 1]).collect()))
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Ok(Word(s.chars().collect()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Default orbit-size cap for [`word_channel_distance`].
pub const DEFAULT_WORD_ORBIT_BUDGET: u64 = 1_000_000;

/// Fewest coordinate swaps turning `a` into `b`, by BFS over the orbit of
/// `a` under coordinate permutations.
pub fn word_channel_distance(a: &Word, b: &Word, budget: u64) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::Unreachable);
    }
    let mut sa = a.0.clone();
    let mut sb = b.0.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Err(Error::Unreachable);
    }
    let mut mult: HashMap<char, usize> = HashMap::new();
    for &c in &a.0 {
        *mult.entry(c).or_insert(0) += 1;
    }
    let orbit = mult.values().fold(factorial(a.len()), |acc, &m| acc / factorial(m));
    if orbit > BigInt::from(budget) {
        return Err(Error::infeasible("word orbit BFS", orbit, budget));
    }
    if a == b {
        return Ok(0);
    }
    let n = a.len();
    let mut seen: HashSet<Vec<char>> = HashSet::from([a.0.clone()]);
    let mut queue = VecDeque::from([(a.0.clone(), 0usize)]);
    while let Some((w, d)) = queue.pop_front() {
        for i in 0..n {
            for j in i + 1..n {
                if w[i] == w[j] {
                    continue;
                }
                let mut next = w.clone();
                next.swap(i, j);
                if next == b.0 {
                    return Ok(d + 1);
                }
                if seen.insert(next.clone()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
    }
    Err(Error::Internal("orbit exhausted without reaching the target".into()))
}

/// Observation file: `# graph=<desc> r=<r>` then one vertex per line.
pub fn format_observations<G: GraphView>(g: &G, obs: &ObservationSet<G::Vertex>) -> String {
    let mut out = format!("# graph={} r={}\n", g.describe(), obs.radius());
    for v in obs.vertices() {
        out.push_str(&g.format_vertex(v));
        out.push('\n');
    }
    out
}

/// Reads the header of an observation file: graph descriptor and radius.
pub fn parse_observation_header(text: &str) -> Result<(String, usize)> {
    let header = text
        .lines()
        .next()
        .ok_or_else(|| Error::Parse("empty observation file".into()))?;
    let body = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse("observation file must start with `# graph=… r=…`".into()))?;
    let mut graph = None;
    let mut radius = None;
    for token in body.split_whitespace() {
        if let Some(v) = token.strip_prefix("graph=") {
            graph = Some(v.to_string());
        } else if let Some(v) = token.strip_prefix("r=") {
            radius = Some(
                v.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad radius `{v}`")))?,
            );
        }
    }
    match (graph, radius) {
        (Some(g), Some(r)) => Ok((g, r)),
        _ => Err(Error::Parse("header needs both graph= and r=".into())),
    }
}

/// Parses an observation file against `g`; the header must name `g`.
pub fn parse_observations<G: GraphView>(g: &G, text: &str) -> Result<ObservationSet<G::Vertex>> {
    let (desc, r) = parse_observation_header(text)?;
    if desc != g.describe() {
        return Err(Error::Parse(format!(
            "file is for `{desc}` but the graph is `{}`",
            g.describe()
        )));
    }
    let vertices = text
        .lines()
        .skip(1)
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| g.parse_vertex(l))
        .collect::<Result<Vec<_>>>()?;
    ObservationSet::new(vertices, r)
}

/// JSON record of one reconstruction run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub graph: String,
    pub r: usize,
    pub observations: Vec<String>,
    pub candidates: Vec<String>,
    pub ambiguous: bool,
    pub seed: Option<u64>,
}

impl ReconstructionReport {
    pub fn new<G: GraphView>(
        g: &G,
        obs: &ObservationSet<G::Vertex>,
        candidates: &[G::Vertex],
        ambiguous: bool,
        seed: Option<u64>,
    ) -> Self {
        ReconstructionReport {
            graph: g.describe(),
            r: obs.radius(),
            observations: obs.vertices().iter().map(|v| g.format_vertex(v)).collect(),
            candidates: candidates.iter().map(|v| g.format_vertex(v)).collect(),
            ambiguous,
            seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symt::SymnTView;

    fn perms(list: &[&str], n: usize) -> Vec<Permutation> {
        list.iter().map(|s| Permutation::parse(s, Some(n)).unwrap()).collect()
    }

    #[test]
    fn sampling_is_deterministic_and_in_ball() {
        let g = SymnTView::new(4).unwrap();
        let cfg = ChannelConfig {
            graph: &g,
            center: g.identity(),
            radius: 1,
            count: 5,
            seed: 42,
        };
        let a = sample_observations(&cfg).unwrap();
        let b = sample_observations(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        for v in a.vertices() {
            assert!(v.cycle_count() >= 3);
        }
        let whole = sample_observations(&ChannelConfig {
            count: 7,
            ..cfg.clone()
        })
        .unwrap();
        assert_eq!(whole.len(), 7);
        assert!(sample_observations(&ChannelConfig { count: 8, ..cfg }).is_err());
    }

    #[test]
    fn intersection_examples() {
        let g = SymnTView::new(4).unwrap();
        let obs = ObservationSet::new(perms(&["(1 2)", "(1 3)", "(2 3)"], 4), 1).unwrap();
        let mut got = reconstruct_intersection(&g, &obs).unwrap();
        got.sort();
        // e is adjacent to all three as well
        let mut want = perms(&["()", "(1 2 3)", "(1 3 2)"], 4);
        want.sort();
        assert_eq!(got, want);

        let x = Permutation::parse("(1 2)", Some(4)).unwrap();
        let obs = ObservationSet::new(vec![x.clone()], 0).unwrap();
        assert_eq!(reconstruct_intersection(&g, &obs).unwrap(), vec![x]);

        let far = ObservationSet::new(perms(&["()", "(1 2)(3 4)"], 4), 0).unwrap();
        assert_eq!(
            reconstruct_intersection(&g, &far),
            Err(Error::Inconsistent { radius: 0 })
        );
    }

    #[test]
    fn majority_examples() {
        let h = HammingView::new(3, 2).unwrap();
        for words in [["000", "001", "010"], ["100", "010", "001"]] {
            let obs = ObservationSet::new(words.iter().map(|w| h.parse_vertex(w).unwrap()).collect(), 1).unwrap();
            let out = reconstruct_majority_hamming(&h, &obs).unwrap();
            assert_eq!(h.format_vertex(&out.estimate), "000");
            assert!(!out.ambiguous);
        }
        let obs = ObservationSet::new(vec![h.parse_vertex("101").unwrap()], 0).unwrap();
        assert_eq!(reconstruct_majority_hamming(&h, &obs).unwrap().estimate, 0b101);
        // two observations at r=1 leave two centres
        let obs = ObservationSet::new(vec![0b000, 0b011], 1).unwrap();
        let out = reconstruct_majority_hamming(&h, &obs).unwrap();
        assert!(out.ambiguous);
        assert_eq!(out.candidates.len(), 2);
    }

    #[test]
    fn threshold_example() {
        let j = JohnsonView::new(4, 2).unwrap();
        let obs = ObservationSet::new(
            ["1,2", "1,3", "1,4", "2,3", "2,4"]
                .iter()
                .map(|s| j.parse_vertex(s).unwrap())
                .collect(),
            1,
        )
        .unwrap();
        let out = reconstruct_threshold_johnson(&j, &obs).unwrap();
        assert_eq!(j.format_vertex(&out.estimate), "1,2");
        assert!(!out.ambiguous);
    }

    #[test]
    fn word_distance_examples() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(word_channel_distance(&w("AAB"), &w("ABA"), 100).unwrap(), 1);
        assert_eq!(word_channel_distance(&w("AAB"), &w("BAA"), 100).unwrap(), 1);
        assert_eq!(word_channel_distance(&w("ABC"), &w("ABC"), 100).unwrap(), 0);
        assert_eq!(word_channel_distance(&w("ABCD"), &w("BCDA"), 100).unwrap(), 3);
        assert_eq!(
            word_channel_distance(&w("AAB"), &w("ABB"), 100),
            Err(Error::Unreachable)
        );
        assert!(matches!(
            word_channel_distance(&w("ABCDEFGH"), &w("HGFEDCBA"), 100),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn observation_file_round_trip() {
        let g = SymnTView::new(4).unwrap();
        let obs = ObservationSet::new(perms(&["(1 2)", "(1 3)", "()"], 4), 1).unwrap();
        let text = format_observations(&g, &obs);
        assert!(text.starts_with("# graph=symt:4 r=1\n"));
        assert_eq!(parse_observations(&g, &text).unwrap(), obs);
        let other = SymnTView::new(5).unwrap();
        assert!(parse_observations(&other, &text).is_err());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(ObservationSet::new(vec![1u64, 1], 1).is_err());
        assert!(ObservationSet::<u64>::new(vec![], 1).is_err());
    }
}
