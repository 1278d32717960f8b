//! Permutations of `{1..n}`, cycle types and sphere streams of the
//! transposition Cayley graph.
//!
//! Points are 1-based everywhere in the public API. Composition follows the
//! right-to-left convention `(xy)(j) = x(y(j))`, so `p.compose(&t)` for a
//! transposition `t` is the neighbour `p·t` of `p` in `Sym_n(T)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::factorial;

/// A permutation stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: img[j] is the image of j + 1, minus one.
    img: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from one-line notation with 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::InvalidArgument(format!("image {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidArgument(format!("image {v} repeated")));
            }
            img.push((v - 1) as u32);
        }
        Ok(Permutation { img })
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::InvalidArgument(format!("point {p} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidArgument(format!("point {p} appears in two cycles")));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                img[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { img })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let t = Transposition::new(i, j)?;
        t.to_permutation(n)
    }

    pub(crate) fn from_raw(img: Vec<u32>) -> Self {
        Permutation { img }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.img
    }

    /// The `n` of `{1..n}`.
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `j`.
    pub fn image(&self, j: usize) -> usize {
        self.img[j - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(j, &v)| v as usize == j)
    }

    /// `self · other`, i.e. `j ↦ self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            img: other.img.iter().map(|&j| self.img[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.img.len()];
        for (j, &v) in self.img.iter().enumerate() {
            inv[v as usize] = j as u32;
        }
        Permutation { img: inv }
    }

    /// Canonical cycles, 1-based: each cycle starts at its least point and the
    /// cycles are ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.img[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        count_cycles(&self.img)
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = vec![0usize; self.degree() + 1];
        for c in self.cycles() {
            counts[c.len()] += 1;
        }
        CycleType {
            n: self.degree(),
            counts,
        }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.img
            .iter()
            .enumerate()
            .filter(|&(j, &v)| v as usize != j)
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// The product `self · t`: joins two cycles of `self` when `t` moves
    /// points of different cycles, splits one otherwise.
    pub fn apply_transposition(&self, t: Transposition) -> Permutation {
        let mut img = self.img.clone();
        img.swap(t.i - 1, t.j - 1);
        Permutation { img }
    }

    /// True when `a` and `b` lie in the same cycle.
    pub fn same_cycle(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a - 1, b - 1);
        let mut j = a;
        loop {
            if j == b {
                return true;
            }
            j = self.img[j] as usize;
            if j == a {
                return false;
            }
        }
    }

    /// One-line notation `"2 3 1 5 4"`.
    pub fn to_one_line(&self) -> String {
        let parts: Vec<String> = self.images().iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }

    /// Parses either cycle notation `"(1 2 3)(4 5)"` (requires `n`, or takes
    /// the largest point mentioned) or one-line notation `"2 3 1 5 4"`.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            parse_cycle_notation(s, n)
        } else {
            let images = s
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = n {
                if images.len() != n {
                    return Err(Error::Parse(format!("expected {n} images, got {}", images.len())));
                }
            }
            Permutation::from_images(&images).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

fn parse_cycle_notation(s: &str, n: Option<usize>) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
        let body = &open[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    let max = cycles.iter().flatten().copied().max().unwrap_or(0);
    let n = n.unwrap_or(max);
    if max > n {
        return Err(Error::Parse(format!("point {max} exceeds n = {n}")));
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| Error::Parse(e.to_string()))
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A transposition `(i j)` of two distinct 1-based points, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidArgument(format!(
                "transposition needs two distinct positive points, got ({i} {j})"
            )));
        }
        Ok(Transposition {
            i: i.min(j),
            j: i.max(j),
        })
    }

    pub fn points(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        if self.j > n {
            return Err(Error::InvalidArgument(format!(
                "transposition ({} {}) outside 1..={n}",
                self.i, self.j
            )));
        }
        let mut p = Permutation::identity(n);
        p.img.swap(self.i - 1, self.j - 1);
        Ok(p)
    }

    /// All `C(n, 2)` transpositions in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Transposition> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Transposition { i, j }))
    }
}

/// Number of cycles of the map `j ↦ img[j]` (0-based), fixed points included.
pub(crate) fn count_cycles(img: &[u32]) -> usize {
    let n = img.len();
    if n <= 64 {
        let mut seen: u64 = 0;
        let mut cycles = 0;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while seen >> j & 1 == 0 {
                seen |= 1 << j;
                j = img[j] as usize;
            }
        }
        cycles
    } else {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = img[j] as usize;
            }
        }
        cycles
    }
}

/// Cycles of `inv_a · b` where `inv_a` is the raw inverse of `a`; avoids
/// materialising the quotient.
pub(crate) fn count_quotient_cycles(inv_a: &[u32], b: &[u32]) -> usize {
    let n = b.len();
    debug_assert!(n <= 64);
    let mut seen: u64 = 0;
    let mut cycles = 0;
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        cycles += 1;
        let mut j = start;
        while seen >> j & 1 == 0 {
            seen |= 1 << j;
            j = inv_a[b[j] as usize] as usize;
        }
    }
    cycles
}

/// Distance in `Sym_n(T)`: `n` minus the number of cycles of `p⁻¹q`.
pub fn cayley_distance(p: &Permutation, q: &Permutation) -> usize {
    assert_eq!(p.degree(), q.degree(), "degree mismatch");
    let n = p.degree();
    if n <= 64 {
        n - count_quotient_cycles(&p.inverse().img, &q.img)
    } else {
        n - p.inverse().compose(q).cycle_count()
    }
}

/// A cycle type `1^{h_1} 2^{h_2} … n^{h_n}` with `Σ j·h_j = n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    n: usize,
    // counts[j] = h_j, index 0 unused.
    counts: Vec<usize>,
}

impl CycleType {
    /// Cycle type with the given nontrivial cycle lengths, padded with fixed
    /// points up to `n`.
    pub fn padded(n: usize, lengths: &[usize]) -> Result<Self> {
        let moved: usize = lengths.iter().sum();
        if lengths.contains(&0) || moved > n {
            return Err(Error::InvalidArgument(format!(
                "cycle lengths {lengths:?} do not fit in n = {n}"
            )));
        }
        let mut counts = vec![0usize; n + 1];
        for &l in lengths {
            counts[l] += 1;
        }
        if n > 0 {
            counts[1] += n - moved;
        }
        Ok(CycleType { n, counts })
    }

    /// The identity class `1^n`.
    pub fn identity(n: usize) -> Self {
        CycleType::padded(n, &[]).expect("empty cycle list always fits")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `h_j`, the number of `j`-cycles.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.counts.get(j).copied().unwrap_or(0)
    }

    pub fn num_cycles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Index `i` of the sphere `S_i(e)` holding this class.
    pub fn sphere_index(&self) -> usize {
        self.n - self.num_cycles()
    }

    /// `Σ j² h_j`.
    pub fn sum_of_squares(&self) -> usize {
        self.counts.iter().enumerate().map(|(j, &h)| j * j * h).sum()
    }

    /// Lengths of the nontrivial cycles, longest first.
    pub fn nontrivial_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for j in (2..self.counts.len()).rev() {
            out.extend(std::iter::repeat_n(j, self.counts[j]));
        }
        out
    }

    pub fn support_size(&self) -> usize {
        self.n - self.multiplicity(1)
    }

    /// Same nontrivial cycles regarded inside `Sym_m`.
    pub fn with_degree(&self, m: usize) -> Result<Self> {
        CycleType::padded(m, &self.nontrivial_lengths())
    }

    /// A fixed representative: consecutive cycles starting at point 1,
    /// longest first, e.g. `(1 2 3)` for `1^{n-3} 3^1`.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut next = 1;
        for len in self.nontrivial_lengths() {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(self.n, &cycles).expect("lengths fit by construction")
    }

    /// Size of the conjugacy class: `n! / Π j^{h_j} h_j!`.
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        for (j, &h) in self.counts.iter().enumerate().skip(1) {
            if h > 0 {
                denom *= num_traits::pow(BigInt::from(j), h) * factorial(h);
            }
        }
        factorial(self.n) / denom
    }

    /// Every cycle type of degree `n` with exactly `n - i` cycles.
    pub fn with_sphere_index(n: usize, i: usize) -> Vec<CycleType> {
        // A j-cycle contributes j - 1 to i, so classes of S_i correspond to
        // partitions of i whose parts e satisfy Σ (e + 1) <= n.
        let mut out = Vec::new();
        let mut parts = Vec::new();
        partitions_of(i, i, &mut parts, &mut |parts| {
            let support: usize = parts.iter().map(|e| e + 1).sum();
            if support <= n {
                let lengths: Vec<usize> = parts.iter().map(|e| e + 1).collect();
                out.push(CycleType::padded(n, &lengths).expect("support checked"));
            }
        });
        out.sort();
        out
    }
}

fn partitions_of(rest: usize, max_part: usize, parts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if rest == 0 {
        f(parts);
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        parts.push(part);
        partitions_of(rest - part, part, parts, f);
        parts.pop();
    }
}

/// Exponent notation with ascending lengths, e.g. `1^2 3^1`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &h) in self.counts.iter().enumerate().skip(1) {
            if h == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{j}^{h}")?;
        }
        if first {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Size of the conjugacy class of the given cycle type.
pub fn class_size(ct: &CycleType) -> BigInt {
    ct.class_size()
}

/// All cycle types with exactly `n - i` cycles.
pub fn class_reps(n: usize, i: usize) -> Vec<CycleType> {
    CycleType::with_sphere_index(n, i)
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

pub fn apply_transposition(p: &Permutation, t: Transposition) -> Permutation {
    p.apply_transposition(t)
}

/// Streams every permutation of `{1..n}` with exactly `n - i` cycles, each
/// exactly once, in a fixed order.
///
/// Cycles are built in canonical form: the least unused point either stays
/// fixed or opens a cycle whose remaining points are larger and taken in
/// cycle order. A `j`-cycle spends `j - 1` of the budget `i`, so only supports
/// of size at most `2i` are ever visited. The callback receives a borrowed
/// permutation that is reused between calls.
pub fn for_each_in_sphere<F: FnMut(&Permutation)>(n: usize, i: usize, mut f: F) {
    if n == 0 {
        if i == 0 {
            f(&Permutation::identity(0));
        }
        return;
    }
    if i >= n {
        return;
    }
    let mut state = SphereWalk {
        n,
        perm: Permutation::identity(n),
        used: vec![false; n],
        free: n,
    };
    state.fill(0, i, &mut f);
}

struct SphereWalk {
    n: usize,
    perm: Permutation,
    used: Vec<bool>,
    free: usize,
}

impl SphereWalk {
    fn fill<F: FnMut(&Permutation)>(&mut self, from: usize, budget: usize, f: &mut F) {
        if budget == 0 {
            // everything not yet placed is a fixed point
            f(&self.perm);
            return;
        }
        // a single cycle through all free points spends free - 1
        if self.free < budget + 1 {
            return;
        }
        let mut p = from;
        while p < self.n && self.used[p] {
            p += 1;
        }
        if p == self.n {
            return;
        }
        self.used[p] = true;
        self.free -= 1;
        // p stays fixed
        self.fill(p + 1, budget, f);
        // p opens a cycle
        self.extend(p, p, 1, budget, f);
        self.used[p] = false;
        self.free += 1;
    }

    fn extend<F: FnMut(&Permutation)>(&mut self, head: usize, tail: usize, len: usize, budget: usize, f: &mut F) {
        for q in head + 1..self.n {
            if self.used[q] {
                continue;
            }
            self.used[q] = true;
            self.free -= 1;
            self.perm.img[tail] = q as u32;
            // close (head … q)
            self.perm.img[q] = head as u32;
            self.fill(head + 1, budget - len, f);
            self.perm.img[q] = q as u32;
            if len < budget {
                self.extend(head, q, len + 1, budget, f);
            }
            self.perm.img[tail] = tail as u32;
            self.used[q] = false;
            self.free += 1;
        }
    }
}

/// Collects the sphere `S_i(e)` of `Sym_n(T)`.
pub fn enumerate_sphere(n: usize, i: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_in_sphere(n, i, |p| out.push(p.clone()));
    out
}

/// Streams the ball `B_r(e)` sphere by sphere; the callback also receives
/// the sphere index.
pub fn for_each_in_ball<F: FnMut(usize, &Permutation)>(n: usize, r: usize, mut f: F) {
    for i in 0..=r.min(n.saturating_sub(1)) {
        for_each_in_sphere(n, i, |p| f(i, p));
    }
}

/// All `n!` permutations in lexicographic order of their one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(Permutation { img: cur.clone() });
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).expect("exists");
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}
