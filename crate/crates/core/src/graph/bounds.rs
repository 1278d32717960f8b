use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};

/// Lower bound on `N_2(Γ, 2)` as an exact rational together with its floor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpBound {
    pub exact: BigRational,
    pub floor: BigInt,
}

/// `μ(k − 1 − ½(μ − 1)(n1 − 2)) + 2` for a graph of degree `k`, with `μ` and
/// `n1 = N(Γ, 1)`.
pub fn lp_lower_bound(k: u64, mu: u64, n1: u64) -> Result<LpBound> {
    if k < 2 || mu < 1 || n1 < 2 {
        return Err(Error::InvalidArgument(format!(
            "need k >= 2, mu >= 1, n1 >= 2 (got k={k}, mu={mu}, n1={n1})"
        )));
    }
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let (k, mu, n1) = (k as i64, mu as i64, n1 as i64);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let inner = q(k - 1) - half * q(mu - 1) * q(n1 - 2);
    let exact = q(mu) * inner + q(2);
    let floor = exact.floor().to_integer();
    Ok(LpBound { exact, floor })
}

/// The complete multipartite graph with `t` parts of size `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteClass {
    pub m: u64,
    pub t: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularUpperBound {
    pub bound: BigRational,
    /// Populated exactly when the parameters force equality.
    pub equality_class: Option<MultipartiteClass>,
}

/// `N(Γ, 1) <= (v + λ)/2` for a `k`-regular graph on `v` vertices; equality
/// iff `k − λ = v − k` divides `v`.
pub fn regular_upper_bound(v: u64, lambda: u64, k: u64) -> Result<RegularUpperBound> {
    if v >= 1 && k == v - 1 {
        return Err(Error::OutOfScope(format!(
            "k = v - 1 = {k}: the complete graph has no pair at distance 2"
        )));
    }
    if k == 0 || k + 2 > v || lambda >= k {
        return Err(Error::InvalidArgument(format!(
            "need lambda < k <= v - 2 (got v={v}, k={k}, lambda={lambda})"
        )));
    }
    let bound = BigRational::new(BigInt::from(v + lambda), BigInt::from(2));
    let m = k - lambda;
    let equality_class = (m == v - k && v.is_multiple_of(m)).then_some(MultipartiteClass { m, t: v / m });
    Ok(RegularUpperBound { bound, equality_class })
}
