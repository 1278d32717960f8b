//! Hamming and Johnson graphs, their closed `N` values, and a catalogue of
//! strongly regular families.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complete_multipartite_shape, regular_upper_bound, ExplicitGraph, GraphView, RegularUpperBound};
use crate::numbers::binomial;

/// Largest universe the classic views are willing to list explicitly.
const LISTABLE_MAX: u64 = 1 << 20;

/// `H(n, q)`: words of length `n` over `{0..q-1}`, adjacent when they differ
/// in exactly one coordinate. A word is stored as its base-`q` value with the
/// first coordinate most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingView {
    n: usize,
    q: u64,
    powers: Vec<u64>,
}

impl HammingView {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        if n == 0 || !(2..=36).contains(&q) {
            return Err(Error::InvalidArgument(format!(
                "Hamming graph needs n >= 1 and 2 <= q <= 36 (got n={n}, q={q})"
            )));
        }
        let mut powers = vec![1u64; n];
        for k in (0..n.saturating_sub(1)).rev() {
            powers[k] = powers[k + 1]
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidArgument(format!("q^n = {q}^{n} does not fit in 64 bits")))?;
        }
        powers[0]
            .checked_mul(q)
            .ok_or_else(|| Error::InvalidArgument(format!("q^n = {q}^{n} does not fit in 64 bits")))?;
        Ok(HammingView { n, q, powers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn size(&self) -> u64 {
        self.powers[0] * self.q
    }

    pub fn digit(&self, code: u64, k: usize) -> u64 {
        (code / self.powers[k]) % self.q
    }

    pub fn digits(&self, code: u64) -> Vec<u64> {
        (0..self.n).map(|k| self.digit(code, k)).collect()
    }

    pub fn encode(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.n || digits.iter().any(|&d| d >= self.q) {
            return Err(Error::InvalidArgument(format!(
                "word {digits:?} is not in H({}, {})",
                self.n, self.q
            )));
        }
        Ok(digits.iter().zip(&self.powers).map(|(d, p)| d * p).sum())
    }
}

impl GraphView for HammingView {
    type Vertex = u64;

    fn neighbors(&self, v: &u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n * (self.q as usize - 1));
        for k in 0..self.n {
            let d = self.digit(*v, k);
            let base = v - d * self.powers[k];
            for e in 0..self.q {
                if e != d {
                    out.push(base + e * self.powers[k]);
                }
            }
        }
        out
    }

    fn contains(&self, v: &u64) -> bool {
        *v < self.size()
    }

    fn order(&self) -> Option<BigInt> {
        Some(BigInt::from(self.size()))
    }

    fn vertices(&self) -> Option<Vec<u64>> {
        (self.size() <= LISTABLE_MAX).then(|| (0..self.size()).collect())
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }

    fn base_point(&self) -> u64 {
        0
    }

    fn metric(&self, x: &u64, y: &u64) -> Option<usize> {
        Some((0..self.n).filter(|&k| self.digit(*x, k) != self.digit(*y, k)).count())
    }

    fn format_vertex(&self, v: &u64) -> String {
        self.digits(*v)
            .into_iter()
            .map(|d| char::from_digit(d as u32, 36).expect("q <= 36"))
            .collect()
    }

    fn parse_vertex(&self, s: &str) -> Result<u64> {
        let digits = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .map(u64::from)
                    .ok_or_else(|| Error::Parse(format!("bad symbol `{c}` in word `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.encode(&digits)
            .map_err(|_| Error::Parse(format!("`{s}` is not a word of H({}, {})", self.n, self.q)))
    }

    fn describe(&self) -> String {
        format!("hamming:{}:{}", self.n, self.q)
    }
}

/// `J(n, w)`: `w`-subsets of `{1..n}`, adjacent when they share `w − 1`
/// elements. A subset is a bitmask with element `i` at bit `i − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JohnsonView {
    n: usize,
    w: usize,
}

impl JohnsonView {
    pub fn new(n: usize, w: usize) -> Result<Self> {
        if n > 64 || w == 0 || w >= n {
            return Err(Error::InvalidArgument(format!(
                "Johnson graph needs 1 <= w <= n - 1 and n <= 64 (got n={n}, w={w})"
            )));
        }
        Ok(JohnsonView { n, w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn from_elements(&self, elems: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e > self.n || mask & (1 << (e - 1)) != 0 {
                return Err(Error::InvalidArgument(format!("bad subset {elems:?} of 1..{}", self.n)));
            }
            mask |= 1 << (e - 1);
        }
        if elems.len() != self.w {
            return Err(Error::InvalidArgument(format!(
                "subset {elems:?} does not have {} elements",
                self.w
            )));
        }
        Ok(mask)
    }

    pub fn elements(&self, mask: u64) -> Vec<usize> {
        (1..=self.n).filter(|&i| mask & (1 << (i - 1)) != 0).collect()
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

impl GraphView for JohnsonView {
    type Vertex = u64;

    fn neighbors(&self, v: &u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.w * (self.n - self.w));
        let outside = self.full() & !v;
        for i in 0..self.n {
            if v & (1 << i) == 0 {
                continue;
            }
            for j in 0..self.n {
                if outside & (1 << j) != 0 {
                    out.push((v & !(1 << i)) | (1 << j));
                }
            }
        }
        out
    }

    fn contains(&self, v: &u64) -> bool {
        v & !self.full() == 0 && v.count_ones() as usize == self.w
    }

    fn order(&self) -> Option<BigInt> {
        Some(binomial(self.n as i64, self.w as i64))
    }

    fn vertices(&self) -> Option<Vec<u64>> {
        let count = binomial(self.n as i64, self.w as i64).to_u64()?;
        if count > LISTABLE_MAX {
            return None;
        }
        // Gosper's hack walks w-subsets in increasing order
        let mut out = Vec::with_capacity(count as usize);
        let mut s: u64 = (1u64 << self.w) - 1;
        while s & !self.full() == 0 {
            out.push(s);
            let c = s & s.wrapping_neg();
            let r = s + c;
            if r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
        Some(out)
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }

    fn base_point(&self) -> u64 {
        (1u64 << self.w) - 1
    }

    fn metric(&self, x: &u64, y: &u64) -> Option<usize> {
        Some(self.w - (x & y).count_ones() as usize)
    }

    fn format_vertex(&self, v: &u64) -> String {
        self.elements(*v)
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn parse_vertex(&self, s: &str) -> Result<u64> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elems = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad element `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_elements(&elems).map_err(|e| Error::Parse(e.to_string()))
    }

    fn describe(&self) -> String {
        format!("johnson:{}:{}", self.n, self.w)
    }
}

/// `N(H(n,q), r) = q Σ_{i<r} C(n−1, i)(q−1)^i`.
pub fn hamming_closed(n: usize, q: u64, r: usize) -> Result<BigInt> {
    if n == 0 || q < 2 || r == 0 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1, q >= 2, 1 <= r <= n (got n={n}, q={q}, r={r})"
        )));
    }
    let q = BigInt::from(q);
    let qm1: BigInt = &q - 1;
    let sum: BigInt = (0..r)
        .map(|i| binomial(n as i64 - 1, i as i64) * num_traits::pow(qm1.clone(), i))
        .sum();
    Ok(q * sum)
}

/// `N(J(n,w), r) = n Σ_{i<r} C(w−1, i) C(n−w−1, i) / (i+1)`, summed exactly.
pub fn johnson_closed(n: usize, w: usize, r: usize) -> Result<BigInt> {
    if w == 0 || w >= n || r == 0 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= w <= n - 1 and r >= 1 (got n={n}, w={w}, r={r})"
        )));
    }
    let mut sum = BigRational::zero();
    for i in 0..r {
        let num = binomial(w as i64 - 1, i as i64) * binomial((n - w) as i64 - 1, i as i64);
        sum += BigRational::new(num, BigInt::from(i + 1));
    }
    let total = sum * BigRational::from_integer(BigInt::from(n));
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "Johnson value {total} is not an integer for n={n}, w={w}, r={r}"
        )));
    }
    Ok(total.to_integer())
}

/// Strongly regular families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgFamily {
    /// `T(m)`: 2-subsets of an `m`-set, adjacent when they meet.
    Triangle(u64),
    /// `L2(m)`: the `m × m` rook's graph.
    Lattice(u64),
    /// `P(q)`: quadratic-residue graph on `Z_q`, `q` prime, `q ≡ 1 (mod 4)`.
    Paley(u64),
    /// `O^t_m`: complete `t`-partite graph with parts of size `m`.
    Multipartite {
        t: u64,
        m: u64,
    },
    Complement(Box<SrgFamily>),
}

impl fmt::Display for SrgFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgFamily::Triangle(m) => write!(f, "T({m})"),
            SrgFamily::Lattice(m) => write!(f, "L2({m})"),
            SrgFamily::Paley(q) => write!(f, "P({q})"),
            SrgFamily::Multipartite { t, m } => write!(f, "O^{t}_{m}"),
            SrgFamily::Complement(g) => write!(f, "co-{g}"),
        }
    }
}

/// `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        SrgParams {
            v,
            k: v - k - 1,
            lambda: v + mu - 2 * k - 2,
            mu: v + lambda - 2 * k,
        }
    }

    /// Connected and not complete: `μ > 0` and `k < v − 1`.
    pub fn has_diameter_two(&self) -> bool {
        self.mu > 0 && self.k + 1 < self.v
    }
}

/// Catalogue parameters with the expected `N(Γ, 1)` (absent when the graph
/// is disconnected).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgExpectation {
    pub params: SrgParams,
    pub n1: Option<u64>,
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

impl SrgFamily {
    /// Parses `triangle:<m>`, `lattice:<m>`, `paley:<q>`,
    /// `multipartite:<t>:<m>`, and `complement:<family…>`.
    pub fn parse(s: &str) -> Result<Self> {
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        let nums = |want: usize| -> Result<Vec<u64>> {
            let v = rest
                .split(':')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad number `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if v.len() != want {
                return Err(Error::Parse(format!("`{s}` needs {want} parameter(s)")));
            }
            Ok(v)
        };
        let fam = match head {
            "triangle" | "t" => SrgFamily::Triangle(nums(1)?[0]),
            "lattice" | "l2" => SrgFamily::Lattice(nums(1)?[0]),
            "paley" | "p" => SrgFamily::Paley(nums(1)?[0]),
            "multipartite" | "o" => {
                let v = nums(2)?;
                SrgFamily::Multipartite { t: v[0], m: v[1] }
            }
            "complement" | "co" => SrgFamily::Complement(Box::new(SrgFamily::parse(rest)?)),
            _ => return Err(Error::Parse(format!("unknown strongly regular family `{head}`"))),
        };
        fam.expected()?;
        Ok(fam)
    }

    /// Catalogue values, after validating the family parameters.
    pub fn expected(&self) -> Result<SrgExpectation> {
        let bad = |why: &str| Err(Error::InvalidArgument(format!("{self}: {why}")));
        let (params, n1) = match *self {
            SrgFamily::Triangle(m) => {
                if m < 4 {
                    return bad("T(m) needs m >= 4");
                }
                let p = SrgParams {
                    v: m * (m - 1) / 2,
                    k: 2 * (m - 2),
                    lambda: m - 2,
                    mu: 4,
                };
                (p, Some(m))
            }
            SrgFamily::Lattice(m) => {
                if m < 2 {
                    return bad("L2(m) needs m >= 2");
                }
                let p = SrgParams {
                    v: m * m,
                    k: 2 * (m - 1),
                    lambda: m - 2,
                    mu: 2,
                };
                (p, Some(m))
            }
            SrgFamily::Paley(q) => {
                if !is_prime(q) {
                    return bad("q must be prime");
                }
                if q % 4 != 1 {
                    return bad("q must be congruent to 1 mod 4");
                }
                let p = SrgParams {
                    v: q,
                    k: (q - 1) / 2,
                    lambda: (q - 5) / 4,
                    mu: (q - 1) / 4,
                };
                (p, Some(q.div_ceil(4)))
            }
            SrgFamily::Multipartite { t, m } => {
                if t < 2 || m < 2 {
                    return bad("O^t_m needs t >= 2 and m >= 2");
                }
                let v = t * m;
                let p = SrgParams {
                    v,
                    k: v - m,
                    lambda: v - 2 * m,
                    mu: v - m,
                };
                (p, Some(v - m))
            }
            SrgFamily::Complement(ref inner) => {
                let p = inner.expected()?.params.complement();
                if p.k == 0 {
                    return bad("complement is edgeless");
                }
                let n1 = p.has_diameter_two().then(|| (p.lambda + 2).max(p.mu));
                (p, n1)
            }
        };
        Ok(SrgExpectation { params, n1 })
    }

    /// The explicit graph; every family here is vertex-transitive.
    pub fn build(&self) -> Result<ExplicitGraph> {
        self.expected()?;
        let g = match *self {
            SrgFamily::Triangle(m) => {
                let m = m as usize;
                let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
                ExplicitGraph::from_fn(pairs.len(), |x, y| {
                    let (a, b) = pairs[x];
                    let (c, d) = pairs[y];
                    a == c || a == d || b == c || b == d
                })
            }
            SrgFamily::Lattice(m) => {
                let m = m as usize;
                ExplicitGraph::from_fn(m * m, |x, y| x / m == y / m || x % m == y % m)
            }
            SrgFamily::Paley(q) => {
                let residues: Vec<bool> = {
                    let mut r = vec![false; q as usize];
                    for x in 1..q {
                        r[((x * x) % q) as usize] = true;
                    }
                    r
                };
                ExplicitGraph::from_fn(q as usize, |x, y| residues[(y - x) % q as usize])
            }
            SrgFamily::Multipartite { t, m } => {
                let m = m as usize;
                ExplicitGraph::from_fn(t as usize * m, |x, y| x / m != y / m)
            }
            SrgFamily::Complement(ref inner) => inner.build()?.complement(),
        };
        Ok(g.with_name(self.to_string()).with_transitive_hint(true))
    }
}

/// `(v, k, λ, μ)` when `g` is strongly regular (regular, constant common
/// neighbour counts on edges and on non-edges).
pub fn srg_parameters(g: &ExplicitGraph) -> Option<SrgParams> {
    let v = g.vertex_count();
    let k = g.regular_degree()?;
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for a in 0..v {
        for b in a + 1..v {
            let common = g.adjacency(a).iter().filter(|&&c| g.is_adjacent(b, c)).count();
            let slot = if g.is_adjacent(a, b) { &mut lambda } else { &mut mu };
            match slot {
                Some(x) if *x != common => return None,
                _ => *slot = Some(common),
            }
        }
    }
    Some(SrgParams {
        v: v as u64,
        k: k as u64,
        lambda: lambda.unwrap_or(0) as u64,
        mu: mu.unwrap_or(0) as u64,
    })
}

/// Computed data for one catalogue instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgReport {
    pub family: SrgFamily,
    pub expected: SrgExpectation,
    pub computed: Option<SrgParams>,
    pub connected: bool,
    /// Brute `N(Γ, 1)`; `None` for disconnected graphs.
    pub n1: Option<u64>,
    pub regular_bound: Option<RegularUpperBound>,
    /// Whether `N(Γ, 1)` attains `(v + λ)/2`.
    pub bound_attained: Option<bool>,
    /// `(m, t)` when the graph is complete multipartite.
    pub multipartite_shape: Option<(usize, usize)>,
}

impl SrgReport {
    /// Parameters and `N(Γ, 1)` agree with the catalogue.
    pub fn matches(&self) -> bool {
        self.computed == Some(self.expected.params) && self.n1 == self.expected.n1
    }
}

/// Builds the family and checks it against its catalogue entry.
pub fn srg_family(family: &SrgFamily) -> Result<(ExplicitGraph, SrgReport)> {
    let expected = family.expected()?;
    let g = family.build()?;
    let computed = srg_parameters(&g);
    let connected = g.is_connected();
    let n1 = if connected && g.vertex_count() >= 2 {
        Some(g.n_all_pairs(1)?.value)
    } else {
        None
    };
    let regular_bound = computed.and_then(|p| regular_upper_bound(p.v, p.lambda, p.k).ok());
    let bound_attained = match (&regular_bound, n1) {
        (Some(b), Some(n1)) => Some(BigRational::from_integer(BigInt::from(n1)) == b.bound),
        _ => None,
    };
    let multipartite_shape = complete_multipartite_shape(&g);
    let report = SrgReport {
        family: family.clone(),
        expected,
        computed,
        connected,
        n1,
        regular_bound,
        bound_attained,
        multipartite_shape,
    };
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance, lambda_mu, n_of_gamma};

    #[test]
    fn hamming_view_basics() {
        let h = HammingView::new(3, 2).unwrap();
        let a = h.parse_vertex("000").unwrap();
        let b = h.parse_vertex("111").unwrap();
        assert_eq!(distance(&h, &a, &b).unwrap(), 3);
        assert_eq!(h.neighbors(&a).len(), 3);
        assert_eq!(h.format_vertex(&h.parse_vertex("101").unwrap()), "101");
        assert!(h.parse_vertex("102").is_err());
        assert!(h.parse_vertex("10").is_err());
        let h3 = HammingView::new(2, 3).unwrap();
        assert_eq!(h3.neighbors(&0).len(), 4);
    }

    #[test]
    fn johnson_view_basics() {
        let j = JohnsonView::new(4, 2).unwrap();
        assert_eq!(j.vertices().unwrap().len(), 6);
        let x = j.parse_vertex("1,2").unwrap();
        assert_eq!(j.neighbors(&x).len(), 4);
        assert_eq!(j.format_vertex(&x), "1,2");
        assert_eq!(j.parse_vertex("{3, 4}").unwrap(), 0b1100);
        assert!(j.parse_vertex("1,1").is_err());
        assert_eq!(JohnsonView::new(7, 3).unwrap().vertices().unwrap().len(), 35);
    }

    #[test]
    fn closed_examples() {
        assert_eq!(hamming_closed(4, 2, 1).unwrap(), BigInt::from(2));
        assert_eq!(hamming_closed(4, 2, 2).unwrap(), BigInt::from(8));
        assert_eq!(hamming_closed(4, 3, 2).unwrap(), BigInt::from(21));
        assert_eq!(johnson_closed(4, 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(johnson_closed(6, 3, 2).unwrap(), BigInt::from(18));
        assert_eq!(johnson_closed(5, 2, 1).unwrap(), BigInt::from(5));
        assert!(hamming_closed(3, 2, 4).is_err());
        assert!(johnson_closed(4, 4, 1).is_err());
    }

    #[test]
    fn closed_matches_brute_small() {
        for (n, q, r) in [(3, 2, 1), (3, 2, 2), (4, 2, 2), (2, 3, 1), (3, 3, 2)] {
            let h = HammingView::new(n, q).unwrap();
            assert_eq!(
                BigInt::from(n_of_gamma(&h, r).unwrap().value),
                hamming_closed(n, q, r).unwrap(),
                "H({n},{q}) r={r}"
            );
        }
        for (n, w, r) in [(4, 2, 1), (5, 2, 1), (6, 3, 2), (6, 2, 2)] {
            let j = JohnsonView::new(n, w).unwrap();
            assert_eq!(
                BigInt::from(n_of_gamma(&j, r).unwrap().value),
                johnson_closed(n, w, r).unwrap(),
                "J({n},{w}) r={r}"
            );
        }
    }

    #[test]
    fn catalogue_examples() {
        let cases = [
            (SrgFamily::Triangle(5), (10, 6, 3, 4, 5)),
            (SrgFamily::Lattice(3), (9, 4, 1, 2, 3)),
            (SrgFamily::Paley(13), (13, 6, 2, 3, 4)),
        ];
        for (fam, (v, k, l, m, n1)) in cases {
            let (_, rep) = srg_family(&fam).unwrap();
            assert!(rep.matches(), "{fam}: {rep:?}");
            assert_eq!(rep.computed, Some(SrgParams { v, k, lambda: l, mu: m }));
            assert_eq!(rep.n1, Some(n1));
            assert_eq!(rep.bound_attained, Some(false));
        }
    }

    #[test]
    fn multipartite_attains_bound() {
        let (g, rep) = srg_family(&SrgFamily::Multipartite { t: 3, m: 2 }).unwrap();
        assert!(rep.matches());
        assert_eq!(rep.bound_attained, Some(true));
        assert_eq!(rep.multipartite_shape, Some((2, 3)));
        assert_eq!(lambda_mu(&g).unwrap(), (2, 4));
    }

    #[test]
    fn invalid_families_rejected() {
        assert!(SrgFamily::Paley(7).expected().is_err());
        assert!(SrgFamily::Paley(21).expected().is_err());
        assert!(SrgFamily::Triangle(3).expected().is_err());
        assert!(SrgFamily::Multipartite { t: 3, m: 1 }.expected().is_err());
    }

    #[test]
    fn complements() {
        let (g, rep) = srg_family(&SrgFamily::Complement(Box::new(SrgFamily::Triangle(5)))).unwrap();
        // complement of T(5) is the Petersen graph
        assert_eq!(
            rep.computed,
            Some(SrgParams {
                v: 10,
                k: 3,
                lambda: 0,
                mu: 1
            })
        );
        assert!(rep.matches());
        assert_eq!(rep.n1, Some(2));
        assert_eq!(g.edge_count(), 15);
        let (_, rep) = srg_family(&SrgFamily::Complement(Box::new(SrgFamily::Multipartite { t: 3, m: 2 }))).unwrap();
        assert!(!rep.connected);
        assert_eq!(rep.n1, None);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(SrgFamily::parse("triangle:5").unwrap(), SrgFamily::Triangle(5));
        assert_eq!(
            SrgFamily::parse("multipartite:3:2").unwrap(),
            SrgFamily::Multipartite { t: 3, m: 2 }
        );
        assert_eq!(
            SrgFamily::parse("complement:lattice:3").unwrap(),
            SrgFamily::Complement(Box::new(SrgFamily::Lattice(3)))
        );
        assert!(SrgFamily::parse("paley:15").is_err());
        assert!(SrgFamily::parse("cube:3").is_err());
    }
}
