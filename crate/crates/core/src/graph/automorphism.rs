use num_bigint::BigInt;

use super::{ExplicitGraph, GraphView};
use crate::error::{Error, Result};

pub const DEFAULT_AUTOMORPHISM_CAP: u64 = 40;

/// Order of the automorphism group by backtracking over distance-preserving
/// bijections. Refuses graphs with more than `cap` vertices.
pub fn brute_automorphism_count<G: GraphView>(g: &G, cap: u64) -> Result<BigInt> {
    if let Some(order) = g.order() {
        if order > BigInt::from(cap) {
            return Err(Error::infeasible("automorphism search", order, cap));
        }
    }
    let (explicit, _) = ExplicitGraph::from_view(g, cap)?;
    Ok(BigInt::from(count_explicit(&explicit)))
}

fn count_explicit(g: &ExplicitGraph) -> u64 {
    let v = g.vertex_count();
    if v == 0 {
        return 1;
    }
    let dist: Vec<Vec<u32>> = (0..v).map(|x| g.bfs_from(x)).collect();
    let profile: Vec<Vec<u32>> = dist
        .iter()
        .map(|row| {
            let mut p = row.clone();
            p.sort_unstable();
            p
        })
        .collect();
    // BFS order (component by component) so each new vertex is pinned by
    // an already-mapped neighbour where possible.
    let mut order = Vec::with_capacity(v);
    let mut placed = vec![false; v];
    for start in 0..v {
        if placed[start] {
            continue;
        }
        let mut by_dist: Vec<usize> = (0..v).filter(|&u| dist[start][u] != u32::MAX).collect();
        by_dist.sort_by_key(|&u| dist[start][u]);
        for u in by_dist {
            placed[u] = true;
            order.push(u);
        }
    }
    let mut image = vec![usize::MAX; v];
    let mut used = vec![false; v];
    let mut count = 0;
    search(g, &dist, &profile, &order, 0, &mut image, &mut used, &mut count);
    count
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &ExplicitGraph,
    dist: &[Vec<u32>],
    profile: &[Vec<u32>],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    count: &mut u64,
) {
    if depth == order.len() {
        *count += 1;
        return;
    }
    let x = order[depth];
    for y in 0..order.len() {
        if used[y] || g.degree(x) != g.degree(y) || profile[x] != profile[y] {
            continue;
        }
        let compatible = order[..depth].iter().all(|&u| dist[x][u] == dist[y][image[u]]);
        if !compatible {
            continue;
        }
        image[x] = y;
        used[y] = true;
        search(g, dist, profile, order, depth + 1, image, used, count);
        used[y] = false;
        image[x] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &ExplicitGraph) -> BigInt {
        brute_automorphism_count(g, DEFAULT_AUTOMORPHISM_CAP).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(count(&ExplicitGraph::cycle(4)), BigInt::from(8));
        assert_eq!(count(&ExplicitGraph::cycle(7)), BigInt::from(14));
        assert_eq!(count(&ExplicitGraph::complete(4)), BigInt::from(24));
        assert_eq!(count(&ExplicitGraph::complete_bipartite(3, 3)), BigInt::from(72));
        assert_eq!(count(&ExplicitGraph::complete_bipartite(2, 3)), BigInt::from(12));
        assert_eq!(count(&ExplicitGraph::petersen()), BigInt::from(120));
    }

    #[test]
    fn path_has_two() {
        let p = ExplicitGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count(&p), BigInt::from(2));
    }

    #[test]
    fn cap_is_enforced() {
        let big = ExplicitGraph::cycle(41);
        assert!(matches!(
            brute_automorphism_count(&big, DEFAULT_AUTOMORPHISM_CAP),
            Err(Error::Infeasible { .. })
        ));
    }
}
