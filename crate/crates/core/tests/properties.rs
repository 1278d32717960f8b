use num_bigint::BigInt;
use proptest::prelude::*;

use recon_core::classic::{hamming_closed, johnson_closed, HammingView, JohnsonView};
use recon_core::graph::{distance, intersection_size, n_of_gamma};
use recon_core::perm::{cayley_distance, Permutation, Transposition};
use recon_core::reconstruct::{
    reconstruct_intersection, reconstruct_majority_hamming, reconstruct_threshold_johnson, sample_observations,
    word_channel_distance, ChannelConfig, Word, DEFAULT_WORD_ORBIT_BUDGET,
};
use recon_core::symt::{n_sym_brute, n_sym_general};
use recon_core::{GraphView, SymnTView};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn sized_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n).prop_flat_map(perm)
}

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..=max_n).prop_flat_map(|n| (perm(n), perm(n)))
}

/// Swaps needed to sort `p` by repeatedly placing a misplaced letter.
fn swaps_to_sort(p: &Permutation) -> usize {
    let mut v = p.images();
    let mut swaps = 0;
    for i in 0..v.len() {
        while v[i] != i + 1 {
            let j = v[i] - 1;
            v.swap(i, j);
            swaps += 1;
        }
    }
    swaps
}

proptest! {
    #[test]
    fn transposition_changes_cycle_count_by_one(p in sized_perm(12), a in 1usize..=12, b in 1usize..=12) {
        let n = p.degree();
        let (a, b) = ((a - 1) % n + 1, (b - 1) % n + 1);
        prop_assume!(a != b);
        let t = Transposition::new(a.min(b), a.max(b)).unwrap();
        let q = p.apply_transposition(t);
        let (c0, c1) = (p.cycle_count() as i64, q.cycle_count() as i64);
        prop_assert_eq!((c0 - c1).abs(), 1);
        // two cycles merge exactly when a and b were apart
        prop_assert_eq!(c1 < c0, !p.same_cycle(a, b));
    }

    #[test]
    fn cayley_distance_is_sorting_cost((p, q) in perm_pair(12)) {
        let d = cayley_distance(&p, &q);
        prop_assert_eq!(d, swaps_to_sort(&p.inverse().compose(&q)));
        prop_assert_eq!(d, cayley_distance(&q, &p));
        prop_assert_eq!(d == 0, p == q);
    }

    #[test]
    fn cayley_distance_is_left_invariant((p, q) in perm_pair(10), s in 0u64..1000) {
        let n = p.degree();
        let g = Permutation::from_images(&{
            let mut v: Vec<usize> = (1..=n).collect();
            v.rotate_left((s as usize) % n);
            v
        }).unwrap();
        prop_assert_eq!(cayley_distance(&g.compose(&p), &g.compose(&q)), cayley_distance(&p, &q));
    }

    #[test]
    fn cayley_distance_matches_bfs((p, q) in perm_pair(6)) {
        let g = SymnTView::new(p.degree()).unwrap();
        prop_assert_eq!(distance(&g, &p, &q).unwrap(), cayley_distance(&p, &q));
    }

    #[test]
    fn channel_never_beats_the_permutation(
        (g, letters) in (2usize..=7).prop_flat_map(|n| (perm(n), proptest::collection::vec(0u8..3, n)))
    ) {
        let a = Word(letters.iter().map(|&c| (b'a' + c) as char).collect());
        let b = a.permuted(&g).unwrap();
        let d = word_channel_distance(&a, &b, DEFAULT_WORD_ORBIT_BUDGET).unwrap();
        prop_assert!(d <= cayley_distance(&Permutation::identity(g.degree()), &g));
        prop_assert_eq!(d == 0, a == b);
    }

    #[test]
    fn majority_agrees_above_the_guarantee(n in 2usize..=6, q in 2u64..=3, r in 1usize..=2, seed in any::<u64>(), extra in 0usize..4) {
        prop_assume!(r <= n);
        let h = HammingView::new(n, q).unwrap();
        let center = seed % q.pow(n as u32);
        let guarantee: usize = hamming_closed(n, q, r).unwrap().try_into().unwrap();
        let ball = recon_core::graph::ball(&h, &center, r).unwrap().len();
        prop_assume!(guarantee < ball);
        let count = (guarantee + 1 + extra).min(ball);
        let obs = sample_observations(&ChannelConfig { graph: &h, center, radius: r, count, seed }).unwrap();
        let rec = reconstruct_majority_hamming(&h, &obs).unwrap();
        prop_assert!(!rec.ambiguous);
        prop_assert_eq!(rec.estimate, center);
        prop_assert_eq!(reconstruct_intersection(&h, &obs).unwrap(), vec![center]);
    }

    #[test]
    fn threshold_agrees_above_the_guarantee(n in 4usize..=8, w in 1usize..=4, r in 1usize..=2, seed in any::<u64>()) {
        prop_assume!(w < n);
        let j = JohnsonView::new(n, w).unwrap();
        let all = j.vertices().unwrap();
        let center = all[(seed as usize) % all.len()];
        let guarantee: usize = johnson_closed(n, w, r).unwrap().try_into().unwrap();
        let ball = recon_core::graph::ball(&j, &center, r).unwrap().len();
        prop_assume!(guarantee < ball);
        let obs = sample_observations(&ChannelConfig { graph: &j, center, radius: r, count: guarantee + 1, seed }).unwrap();
        let rec = reconstruct_threshold_johnson(&j, &obs).unwrap();
        prop_assert!(!rec.ambiguous);
        prop_assert_eq!(rec.estimate, center);
    }

    #[test]
    fn intersection_always_contains_the_center(n in 3usize..=5, r in 1usize..=2, count in 1usize..=8, seed in any::<u64>()) {
        let g = SymnTView::new(n).unwrap();
        let all = g.vertices().unwrap();
        let center = all[(seed as usize) % all.len()].clone();
        let ball = recon_core::graph::ball(&g, &center, r).unwrap().len();
        let obs = sample_observations(&ChannelConfig { graph: &g, center: center.clone(), radius: r, count: count.min(ball), seed }).unwrap();
        let cands = reconstruct_intersection(&g, &obs).unwrap();
        prop_assert!(cands.contains(&center));
        let n_closed: usize = recon_core::symt::n_sym_closed(n, r).unwrap().value.try_into().unwrap();
        if obs.len() > n_closed {
            prop_assert_eq!(cands, vec![center]);
        }
    }

    #[test]
    fn intersection_is_symmetric((p, q) in perm_pair(5), r in 1usize..=3) {
        prop_assume!(p != q);
        let g = SymnTView::new(p.degree()).unwrap();
        prop_assert_eq!(intersection_size(&g, &p, &q, r).unwrap(), intersection_size(&g, &q, &p, r).unwrap());
    }
}

#[test]
fn brute_equals_general_formula_for_small_radii() {
    for r in 1..=3 {
        for n in (r + 1).max(3)..=9 {
            let brute = n_sym_brute(n, r).unwrap();
            assert_eq!(BigInt::from(brute.value), n_sym_general(n, r), "n={n} r={r}");
        }
    }
}

#[test]
fn distance_two_beats_adjacent_pairs() {
    for n in 4..=8 {
        for r in 2..=n - 2 {
            let rep = n_sym_brute(n, r).unwrap();
            assert!(
                rep.per_distance[&2] > rep.per_distance[&1],
                "n={n} r={r}: {:?}",
                rep.per_distance
            );
            assert_eq!(rep.value, rep.per_distance[&2]);
        }
    }
}

#[test]
fn hamming_and_johnson_closed_forms_match_brute() {
    for (n, q) in [(6, 2), (4, 4)] {
        let h = HammingView::new(n, q).unwrap();
        for r in 1..=3 {
            assert_eq!(
                BigInt::from(n_of_gamma(&h, r).unwrap().value),
                hamming_closed(n, q, r).unwrap()
            );
        }
    }
    for (n, w) in [(8, 3), (8, 4), (9, 4)] {
        let j = JohnsonView::new(n, w).unwrap();
        for r in 1..=3 {
            assert_eq!(
                BigInt::from(n_of_gamma(&j, r).unwrap().value),
                johnson_closed(n, w, r).unwrap()
            );
        }
    }
}
