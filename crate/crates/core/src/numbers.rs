//! Exact counting: signless Stirling numbers of the first kind, Poincaré
//! polynomials of `Sym_n(T)`, ball sizes, minimal transposition
//! factorization counts and restricted Stirling numbers.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{for_each_in_sphere, CycleType};

/// Arbitrary-precision signed integer; every count in the crate is exact.
pub type ExactInt = BigInt;

/// Default size of the shared Stirling table.
pub const DEFAULT_STIRLING_MAX: usize = 64;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Triangle of signless Stirling numbers `c(m, k)` for `0 <= k <= m <= max`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// Fills rows `0..=max` with `c(m, k) = c(m-1, k-1) + (m-1)·c(m-1, k)`.
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        rows.push(vec![BigInt::one()]);
        for m in 1..=max {
            let prev = &rows[m - 1];
            let mut row = vec![BigInt::zero(); m + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let mut v = prev.get(k - 1).cloned().unwrap_or_default();
                if let Some(same) = prev.get(k) {
                    v += same * (m - 1);
                }
                *slot = v;
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n).map(|row| row.get(k).unwrap_or(zero_ref()))
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(|r| r.as_slice())
    }
}

fn zero_ref() -> &'static BigInt {
    static ZERO: OnceLock<BigInt> = OnceLock::new();
    ZERO.get_or_init(BigInt::zero)
}

fn shared_table() -> &'static StirlingTable {
    static TABLE: OnceLock<StirlingTable> = OnceLock::new();
    TABLE.get_or_init(|| StirlingTable::new(DEFAULT_STIRLING_MAX))
}

/// Signless Stirling number of the first kind: permutations of `n` points
/// with exactly `k` cycles. Zero outside `0 <= k <= n` (with `c(0,0) = 1`).
pub fn stirling_first_signless(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let table = shared_table();
    if n <= table.max_n() {
        return table.get(n, k).cloned().unwrap_or_default();
    }
    StirlingTable::new(n).get(n, k).cloned().unwrap_or_default()
}

/// `|S_i|` in `Sym_n(T)`, i.e. `c(n, n - i)`.
pub fn sphere_size(n: usize, i: usize) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    stirling_first_signless(n, n - i)
}

/// `b(n, r) = Σ_{i<=r} c(n, n - i)`.
pub fn ball_size(n: usize, r: usize) -> BigInt {
    (0..=r.min(n)).map(|i| sphere_size(n, i)).sum()
}

/// Polynomial with exact integer coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomial {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(1 + t)(1 + 2t)…(1 + (n-1)t)`: the sphere-size generating polynomial of
/// `Sym_n(T)`.
pub fn poincare_polynomial(n: usize) -> IntPolynomial {
    (1..n).fold(IntPolynomial::one(), |acc, j| {
        acc.mul(&IntPolynomial::new(vec![BigInt::one(), BigInt::from(j)]))
    })
}

/// Number of ordered factorizations of a permutation of cycle type `ct` into
/// `i` transpositions, for the minimal `i = n - cycles`; zero for any other
/// `i`. Evaluates `i! Π_j (j^{j-2} / (j-1)!)^{h_j}` over the rationals and
/// refuses to return a non-integral value.
pub fn denes_count(ct: &CycleType, i: usize) -> Result<BigInt> {
    if i != ct.sphere_index() {
        return Ok(BigInt::zero());
    }
    let mut acc = BigRational::from_integer(factorial(i));
    for j in 2..=ct.n() {
        let h = ct.multiplicity(j);
        if h == 0 {
            continue;
        }
        let num = num_traits::pow(BigInt::from(j), j - 2);
        let factor = BigRational::new(num, factorial(j - 1));
        acc *= num_traits::pow(factor, h);
    }
    if !acc.is_integer() {
        return Err(Error::Internal(format!(
            "factorization count for {ct} evaluated to non-integer {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// Co-cyclicity condition defining a restricted Stirling number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RestrictedKind {
    /// `1, 2, 3` lie in one cycle (`c_{3^1}`).
    ThreeCycle,
    /// `1, 2` lie in one cycle and `3, 4` lie in one cycle (`c_{2^2}`).
    DoubleTransposition,
}

impl RestrictedKind {
    pub fn all() -> [RestrictedKind; 2] {
        [RestrictedKind::ThreeCycle, RestrictedKind::DoubleTransposition]
    }

    /// Fewest points for which the condition can be stated.
    pub fn min_points(self) -> usize {
        match self {
            RestrictedKind::ThreeCycle => 3,
            RestrictedKind::DoubleTransposition => 4,
        }
    }

    pub fn holds(self, p: &crate::perm::Permutation) -> bool {
        if p.degree() < self.min_points() {
            return false;
        }
        match self {
            RestrictedKind::ThreeCycle => p.same_cycle(1, 2) && p.same_cycle(1, 3),
            RestrictedKind::DoubleTransposition => p.same_cycle(1, 2) && p.same_cycle(3, 4),
        }
    }

    /// The class of `y*` this kind belongs to: a 3-cycle or a double
    /// transposition.
    pub fn witness_class(self, n: usize) -> Result<CycleType> {
        match self {
            RestrictedKind::ThreeCycle => CycleType::padded(n, &[3]),
            RestrictedKind::DoubleTransposition => CycleType::padded(n, &[2, 2]),
        }
    }
}

impl fmt::Display for RestrictedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedKind::ThreeCycle => write!(f, "3^1"),
            RestrictedKind::DoubleTransposition => write!(f, "2^2"),
        }
    }
}

/// Restricted Stirling number counted by streaming `S_i` of `Sym_n(T)`: the
/// permutations with `n - i` cycles satisfying the co-cyclicity condition.
pub fn restricted_stirling(kind: RestrictedKind, n: usize, i: usize) -> BigInt {
    if n < kind.min_points() || i >= n {
        return BigInt::zero();
    }
    let mut count: u64 = 0;
    for_each_in_sphere(n, i, |p| {
        if kind.holds(p) {
            count += 1;
        }
    });
    BigInt::from(count)
}

/// Closed forms for `i <= 4`; `None` beyond.
pub fn restricted_stirling_closed(kind: RestrictedKind, n: usize, i: usize) -> Option<BigInt> {
    if i > 4 {
        return None;
    }
    if n < kind.min_points() {
        return Some(BigInt::zero());
    }
    let m = n as i64;
    let v = match (kind, i) {
        (_, 0) | (_, 1) => BigInt::zero(),
        (RestrictedKind::ThreeCycle, 2) => BigInt::from(2),
        (RestrictedKind::ThreeCycle, 3) => BigInt::from((m + 2) * (m - 3)),
        (RestrictedKind::ThreeCycle, 4) => binomial(m - 3, 2) * 24 + binomial(m - 3, 3) * 22 + binomial(m - 3, 4) * 6,
        (RestrictedKind::DoubleTransposition, 2) => BigInt::one(),
        (RestrictedKind::DoubleTransposition, 3) => binomial(m, 2),
        (RestrictedKind::DoubleTransposition, 4) => {
            // The (n-4)(n-5) coefficient counts two 3-cycles, one through
            // {1,2} and one through {3,4}, with a free letter each.
            BigInt::from(24 * (m - 4) + (m - 5) * (13 * m - 52)) + binomial(m - 4, 3) * 14 + binomial(m - 4, 4) * 3
        }
        _ => unreachable!("i <= 4 handled above"),
    };
    Some(v)
}

/// Restricted Stirling numbers from a cycle-insertion sum: choose the extra
/// letters sharing the marked cycle(s), arrange them, and let the rest form
/// the remaining cycles. Exact for every `n` and `i`.
pub fn restricted_stirling_sum(kind: RestrictedKind, n: usize, i: usize) -> BigInt {
    if n < kind.min_points() || i >= n {
        return BigInt::zero();
    }
    let k = n - i; // number of cycles
    let c = |m: usize, cycles: usize| stirling_first_signless(m, cycles);
    match kind {
        RestrictedKind::ThreeCycle => {
            let rest = n - 3;
            (0..=rest)
                .map(|j| binomial(rest as i64, j as i64) * factorial(j + 2) * c(rest - j, k - 1))
                .sum()
        }
        RestrictedKind::DoubleTransposition => {
            let rest = n - 4;
            let one_cycle: BigInt = (0..=rest)
                .map(|j| binomial(rest as i64, j as i64) * factorial(j + 3) * c(rest - j, k - 1))
                .sum();
            let mut two_cycles = BigInt::zero();
            if k >= 2 {
                for a in 0..=rest {
                    for b in 0..=rest - a {
                        two_cycles += binomial(rest as i64, a as i64)
                            * binomial((rest - a) as i64, b as i64)
                            * factorial(a + 1)
                            * factorial(b + 1)
                            * c(rest - a - b, k - 2);
                    }
                }
            }
            one_cycle + two_cycles
        }
    }
}

/// Polynomial over the rationals, ascending degree, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Exact interpolation through the points by Newton divided differences.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<Self> {
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
        let m = xs.len();
        for level in 1..m {
            for j in (level..m).rev() {
                let denom = &xs[j] - &xs[j - level];
                if denom.is_zero() {
                    return Err(Error::InvalidArgument("repeated interpolation node".into()));
                }
                dd[j] = (&dd[j] - &dd[j - 1]) / denom;
            }
        }
        // Horner expansion of the Newton form into monomials.
        let mut acc: Vec<BigRational> = Vec::new();
        for j in (0..m).rev() {
            // acc = acc * (x - xs[j]) + dd[j]
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (d, c) in acc.iter().enumerate() {
                next[d + 1] += c.clone();
                next[d] -= c * &xs[j];
            }
            next[0] += dd[j].clone();
            acc = next;
        }
        Ok(RationalPolynomial::new(acc))
    }
}

/// Forward differences of order `order` of an integer sequence.
pub fn finite_differences(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        if cur.len() < 2 {
            return Vec::new();
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

/// Converts a small exact count to `u64`, failing loudly otherwise.
pub fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Internal(format!("{v} does not fit in u64")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first_signless(4, 2), big(11));
        for n in 1..=20 {
            assert_eq!(stirling_first_signless(n, n), big(1));
            assert_eq!(stirling_first_signless(n, 1), factorial(n - 1));
        }
        assert_eq!(stirling_first_signless(5, 1), big(24));
        assert_eq!(stirling_first_signless(3, 5), big(0));
        assert_eq!(stirling_first_signless(5, 0), big(0));
        // beyond the shared table
        assert_eq!(stirling_first_signless(70, 70), big(1));
        assert_eq!(stirling_first_signless(70, 69), binomial(70, 2));
    }

    #[test]
    fn stirling_rows_sum_to_factorial() {
        for n in 0..=30 {
            let total: BigInt = (0..=n).map(|k| stirling_first_signless(n, k)).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn displayed_low_order_stirling_values() {
        for n in 1..=25i64 {
            let nu = n as usize;
            assert_eq!(sphere_size(nu, 1), binomial(n, 2));
            assert_eq!(sphere_size(nu, 2), binomial(n, 3) * 2 + binomial(n, 4) * 3);
            // a 4-set carries 3! = 6 four-cycles; the printed coefficient 3 is off
            assert_eq!(
                sphere_size(nu, 3),
                binomial(n, 4) * 6 + binomial(n, 5) * 20 + binomial(n, 6) * 15
            );
            if n >= 4 {
                assert_ne!(
                    sphere_size(nu, 3),
                    binomial(n, 4) * 3 + binomial(n, 5) * 20 + binomial(n, 6) * 15
                );
            }
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_polynomial(1), IntPolynomial::one());
        assert_eq!(poincare_polynomial(3).to_string(), "1 + 3t + 2t^2");
        assert_eq!(poincare_polynomial(4).to_string(), "1 + 6t + 11t^2 + 6t^3");
        for n in 1..=30 {
            let p = poincare_polynomial(n);
            for i in 0..n {
                assert_eq!(p.coeff(i), stirling_first_signless(n, n - i));
            }
            assert_eq!(p.eval(&big(1)), factorial(n));
        }
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(ball_size(4, 1), big(7));
        assert_eq!(ball_size(9, 0), big(1));
        assert_eq!(ball_size(4, 3), big(24));
    }

    #[test]
    fn denes_examples() {
        let c3 = CycleType::padded(3, &[3]).unwrap();
        assert_eq!(denes_count(&c3, 2).unwrap(), big(3));
        let c4 = CycleType::padded(4, &[4]).unwrap();
        assert_eq!(denes_count(&c4, 3).unwrap(), big(16));
        let t = CycleType::padded(7, &[2]).unwrap();
        assert_eq!(denes_count(&t, 1).unwrap(), big(1));
        // non-minimal length
        assert_eq!(denes_count(&t, 3).unwrap(), big(0));
        // n-cycles have n^{n-2} factorizations
        for n in 2..=9usize {
            let ct = CycleType::padded(n, &[n]).unwrap();
            assert_eq!(denes_count(&ct, n - 1).unwrap(), num_traits::pow(big(n as i64), n - 2));
        }
    }

    #[test]
    fn restricted_examples() {
        use RestrictedKind::*;
        for n in 3..=8 {
            assert_eq!(restricted_stirling(ThreeCycle, n, 0), big(0));
            assert_eq!(restricted_stirling(ThreeCycle, n, 1), big(0));
        }
        assert_eq!(restricted_stirling(ThreeCycle, 5, 3), big(14));
        assert_eq!(restricted_stirling(DoubleTransposition, 5, 3), big(10));
        assert_eq!(restricted_stirling(DoubleTransposition, 3, 1), big(0));
        assert_eq!(restricted_stirling(ThreeCycle, 5, 5), big(0));
    }

    #[test]
    fn restricted_sum_matches_brute() {
        for kind in RestrictedKind::all() {
            for n in 1..=8 {
                for i in 0..n + 1 {
                    assert_eq!(
                        restricted_stirling_sum(kind, n, i),
                        restricted_stirling(kind, n, i),
                        "{kind} n={n} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_forms_cover_small_i_only() {
        assert!(restricted_stirling_closed(RestrictedKind::ThreeCycle, 9, 5).is_none());
        assert_eq!(
            restricted_stirling_closed(RestrictedKind::DoubleTransposition, 5, 3),
            Some(big(10))
        );
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3x^2 - x + 7
        let pts: Vec<_> = (0..5).map(|x| (big(x), big(3 * x * x - x + 7))).collect();
        let p = RationalPolynomial::interpolate(&pts).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading_coefficient(), BigRational::from(big(3)));
        assert_eq!(p.eval(&BigRational::from(big(10))), BigRational::from(big(297)));
    }

    #[test]
    fn finite_difference_orders() {
        let v: Vec<BigInt> = (0..6).map(|x| big(x * x * x)).collect();
        assert!(finite_differences(&v, 4).iter().all(|d| d.is_zero()));
        assert_eq!(finite_differences(&v, 3), vec![big(6), big(6), big(6)]);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(-1, 2), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(10, 3), big(120));
        assert_eq!(binomial(0, 0), big(1));
    }
}
