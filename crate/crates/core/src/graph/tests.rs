use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::classic::{HammingView, JohnsonView};
use crate::perm::Permutation;
use crate::symt::SymnTView;

fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, Some(n)).unwrap()
}

#[test]
fn distance_examples() {
    let g = SymnTView::new(4).unwrap();
    let e = g.identity();
    assert_eq!(distance(&g, &e, &p("(1 2 3 4)", 4)).unwrap(), 3);
    assert_eq!(distance(&g, &e, &e).unwrap(), 0);
    let h = HammingView::new(3, 2).unwrap();
    assert_eq!(distance(&h, &0, &0b111).unwrap(), 3);
}

#[test]
fn distance_errors() {
    let two_edges = ExplicitGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(distance(&two_edges, &0, &3), Err(Error::Unreachable));
    assert!(matches!(distance(&two_edges, &0, &9), Err(Error::InvalidArgument(_))));
}

#[test]
fn sphere_sizes() {
    let g = SymnTView::new(4).unwrap();
    let sizes: Vec<usize> = spheres_up_to(&g, &g.identity(), 3)
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    assert_eq!(sizes, vec![1, 6, 11, 6]);
    let r0 = spheres_up_to(&g, &g.identity(), 0).unwrap();
    assert_eq!(r0, vec![vec![g.identity()]]);
    let h = HammingView::new(3, 2).unwrap();
    let sizes: Vec<usize> = spheres_up_to(&h, &0, 1).unwrap().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 3]);
    // padded past the eccentricity
    let sizes: Vec<usize> = spheres_up_to(&h, &0, 5).unwrap().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 3, 3, 1, 0, 0]);
}

#[test]
fn intersection_examples() {
    let g = SymnTView::new(4).unwrap();
    let e = g.identity();
    assert_eq!(intersection_size(&g, &e, &p("(1 2 3)", 4), 1).unwrap(), 3);
    assert_eq!(intersection_size(&g, &e, &p("(1 2)", 4), 1).unwrap(), 2);
    assert_eq!(intersection_size(&g, &e, &p("(1 2 3 4)", 4), 1).unwrap(), 0);
    assert!(intersection_size(&g, &e, &e, 1).is_err());
    // the membership path (no metric) agrees with the metric path
    let (explicit, labels) = ExplicitGraph::from_view(&g, 100).unwrap();
    let ie = labels.iter().position(|v| v == &e).unwrap();
    for (k, y) in labels.iter().enumerate() {
        if k == ie {
            continue;
        }
        for r in 1..=3 {
            assert_eq!(
                intersection_size(&explicit, &ie, &k, r).unwrap(),
                intersection_size(&g, &e, y, r).unwrap()
            );
        }
    }
}

#[test]
fn decomposition_identities() {
    let g = SymnTView::new(4).unwrap();
    assert!(ball_decomposition_check(&g, &g.identity(), &p("(1 2)", 4), 2).unwrap());
    assert!(ball_decomposition_check(&g, &g.identity(), &p("(1 2)(3 4)", 4), 0).unwrap());
    let h = HammingView::new(4, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let x = rng.random_range(0..16u64);
        let y = rng.random_range(0..16u64);
        if x == y {
            continue;
        }
        let r = rng.random_range(0..=3);
        assert!(ball_decomposition_check(&h, &x, &y, r).unwrap());
    }
}

#[test]
fn lambda_mu_examples() {
    assert_eq!(lambda_mu(&SymnTView::new(5).unwrap()).unwrap(), (0, 3));
    assert_eq!(lambda_mu(&HammingView::new(4, 2).unwrap()).unwrap(), (0, 2));
    assert_eq!(lambda_mu(&ExplicitGraph::complete_bipartite(3, 3)).unwrap(), (0, 3));
    assert!(lambda_mu(&ExplicitGraph::complete(4)).is_err());
}

#[test]
fn n_examples() {
    let g = SymnTView::new(5).unwrap();
    let res = n_of_gamma(&g, 2).unwrap();
    assert_eq!(res.value, 27);
    assert_eq!(res.witness_distance, 2);
    let h = HammingView::new(4, 2).unwrap();
    assert_eq!(n_of_gamma(&h, 1).unwrap().value, 2);
    let j = JohnsonView::new(4, 2).unwrap();
    assert_eq!(n_of_gamma(&j, 1).unwrap().value, 4);
    assert!(n_of_gamma(&h, 0).is_err());
}

fn check_nresult<G: GraphView>(g: &G, res: &NResult<G::Vertex>, r: usize) {
    assert_eq!(Some(&res.value), res.per_distance.values().max());
    assert_eq!(res.per_distance.get(&res.witness_distance), Some(&res.value));
    assert_eq!(
        distance(g, &res.witness.0, &res.witness.1).unwrap(),
        res.witness_distance
    );
    assert_eq!(
        intersection_size(g, &res.witness.0, &res.witness.1, r).unwrap(),
        res.value
    );
    assert!(res.per_distance.keys().all(|&s| (1..=2 * r).contains(&s)));
}

#[test]
fn nresult_invariants() {
    let g = SymnTView::new(5).unwrap();
    for r in 1..=3 {
        check_nresult(&g, &n_of_gamma(&g, r).unwrap(), r);
    }
    let pet = ExplicitGraph::petersen().with_transitive_hint(false);
    for r in 1..=2 {
        check_nresult(&pet, &n_of_gamma(&pet, r).unwrap(), r);
    }
}

#[test]
fn transitive_hint_does_not_change_the_answer() {
    let pet = ExplicitGraph::petersen();
    let swept = pet.clone().with_transitive_hint(false);
    for r in 1..=2 {
        let a = n_of_gamma(&pet, r).unwrap();
        let b = n_of_gamma(&swept, r).unwrap();
        assert_eq!((a.value, a.per_distance), (b.value, b.per_distance));
    }
}

#[test]
fn n1_is_max_lambda_plus_two_mu() {
    fn check<G: GraphView>(g: &G) {
        let (l, m) = lambda_mu(g).unwrap();
        assert_eq!(n_of_gamma(g, 1).unwrap().value, (l + 2).max(m), "{}", g.describe());
    }
    for n in 3..=5 {
        check(&SymnTView::new(n).unwrap());
    }
    for n in 2..=5 {
        check(&HammingView::new(n, 2).unwrap());
    }
    for n in 4..=6 {
        for w in 1..n {
            if w == 1 || w == n - 1 {
                continue; // complete graphs
            }
            check(&JohnsonView::new(n, w).unwrap());
        }
    }
    check(&ExplicitGraph::petersen().with_transitive_hint(false));
    check(&ExplicitGraph::cycle(7));
}

#[test]
fn hypercube_pair_counts() {
    // triangle- and pentagon-free with μ = 2: N_2(Γ, 2) >= N_1(Γ, 2) = 2k
    for n in 3..=5 {
        let h = HammingView::new(n, 2).unwrap();
        let res = n_of_gamma(&h, 2).unwrap();
        assert_eq!(res.per_distance[&1], 2 * n as u64);
        assert!(res.per_distance[&2] >= res.per_distance[&1]);
        let lp = lp_lower_bound(n as u64, 2, 2).unwrap();
        assert!(BigInt::from(res.per_distance[&2]) >= lp.floor);
    }
}

#[test]
fn regular_edge_counting() {
    fn check<G: GraphView>(g: &G, k: u64) {
        let x = g.base_point();
        let layers = spheres_up_to(g, &x, 8).unwrap();
        for sphere in layers.iter().filter(|l| !l.is_empty()) {
            let sum: u64 = sphere.iter().map(|y| local_profile(g, &x, y).unwrap().degree()).sum();
            assert_eq!(sum, k * sphere.len() as u64);
        }
    }
    check(&SymnTView::new(4).unwrap(), 6);
    check(&HammingView::new(3, 3).unwrap(), 6);
    check(&JohnsonView::new(6, 3).unwrap(), 9);
}

#[test]
fn distance_is_a_metric() {
    let pet = ExplicitGraph::petersen();
    let dm = pet.distance_matrix();
    for a in 0..10 {
        for b in 0..10 {
            assert_eq!(dm[a][b], dm[b][a]);
            assert_eq!(dm[a][b] == Some(0), a == b);
            for c in 0..10 {
                assert!(dm[a][c].unwrap() <= dm[a][b].unwrap() + dm[b][c].unwrap());
            }
        }
    }
    let g = SymnTView::new(4).unwrap();
    let all = g.vertices().unwrap();
    for x in all.iter().step_by(5) {
        for y in all.iter().step_by(3) {
            assert_eq!(distance(&g, x, y).unwrap(), distance(&g, y, x).unwrap());
        }
    }
}

#[test]
fn explicit_text_round_trip() {
    let pet = ExplicitGraph::petersen();
    let text = pet.to_adjacency_text();
    let back = ExplicitGraph::from_adjacency_text(&text).unwrap();
    assert_eq!(back.to_adjacency_text(), text);
    assert!(ExplicitGraph::from_adjacency_text("0: 1\n1:\n").is_err());
    assert!(ExplicitGraph::from_adjacency_text("0: 0\n").is_err());
    assert!(ExplicitGraph::from_adjacency_text("0: 1\n2: 0\n").is_err());
    assert!(ExplicitGraph::from_adjacency_text("# comment\n0: 1\n1: 0\n").is_ok());
}

#[test]
fn multipartite_detection() {
    assert_eq!(
        complete_multipartite_shape(&ExplicitGraph::complete_bipartite(3, 3)),
        Some((3, 2))
    );
    assert_eq!(complete_multipartite_shape(&ExplicitGraph::cycle(4)), Some((2, 2)));
    assert_eq!(complete_multipartite_shape(&ExplicitGraph::complete(4)), Some((1, 4)));
    assert_eq!(
        complete_multipartite_shape(&ExplicitGraph::complete_bipartite(2, 3)),
        None
    );
    assert_eq!(complete_multipartite_shape(&ExplicitGraph::petersen()), None);
}

#[test]
fn automorphisms_of_symt() {
    let s3 = SymnTView::new(3).unwrap();
    assert_eq!(
        brute_automorphism_count(&s3, DEFAULT_AUTOMORPHISM_CAP).unwrap(),
        BigInt::from(72)
    );
    let s4 = SymnTView::new(4).unwrap();
    assert_eq!(
        brute_automorphism_count(&s4, DEFAULT_AUTOMORPHISM_CAP).unwrap(),
        BigInt::from(1152)
    );
    let s5 = SymnTView::new(5).unwrap();
    assert!(matches!(
        brute_automorphism_count(&s5, DEFAULT_AUTOMORPHISM_CAP),
        Err(Error::Infeasible { .. })
    ));
}

#[test]
fn infeasible_sweep_reports_budget() {
    let h = HammingView::new(5, 3).unwrap();
    let err = n_of_gamma_with_budget(
        &ExplicitGraph::from_view(&h, 1000)
            .unwrap()
            .0
            .with_transitive_hint(false),
        1,
        100,
    );
    match err {
        Err(Error::Infeasible { budget, needed, .. }) => {
            assert_eq!(budget, 100);
            assert_eq!(needed, "243");
        }
        other => panic!("expected infeasible, got {other:?}"),
    }
}

#[test]
fn base_point_sweep_respects_budget() {
    let h = HammingView::new(12, 3).unwrap();
    assert!(matches!(
        n_of_gamma_with_budget(&h, 3, 1000),
        Err(Error::Infeasible { budget: 1000, .. })
    ));
    let small = HammingView::new(4, 2).unwrap();
    assert_eq!(n_of_gamma_with_budget(&small, 1, 16).unwrap().value, 2);
    assert!(n_of_gamma_with_budget(&small, 2, 15).is_err());
}
