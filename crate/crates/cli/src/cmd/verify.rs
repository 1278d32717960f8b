use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use recon_core::classic::{hamming_closed, johnson_closed, srg_family, HammingView, JohnsonView, SrgFamily};
use recon_core::graph::{ball, brute_automorphism_count, n_of_gamma, DEFAULT_AUTOMORPHISM_CAP};
use recon_core::numbers::{
    ball_size, denes_count, factorial, restricted_stirling_closed, restricted_stirling_sum, sphere_size,
    RationalPolynomial, RestrictedKind,
};
use recon_core::perm::{class_reps, CycleType, Permutation};
use recon_core::reconstruct::{reconstruct_intersection, ObservationSet};
use recon_core::symt::{
    aut_action_check, intersection_with_identity, labeled_edge_count, labeled_edge_count_direct, n_sym_brute,
    n_sym_brute_up_to, n_sym_closed, n_sym_full_sweep, n_sym_general, table1, DEFAULT_SYM_BUDGET, TABLE1_ERRATA,
};
use recon_core::{GraphView, SymnTView};
use serde_json::json;

use super::numbers::factorizations;
use crate::error::Failure;
use crate::report::{Outcome, Output, RunReport, Table, Verdict};
use crate::{GlobalOpts, VerifyArgs};

type CheckResult = Result<String, String>;
type CheckFn = fn(bool, u64) -> CheckResult;

const CHECKS: [(&str, &str, CheckFn); 12] = [
    ("n1", "N(Sym_n(T), 1) = 3 by all-pairs sweep", n1),
    ("n2", "N(Sym_n(T), 2) = (3/2)(n+1)(n-2) with argmax 1^{n-3}3^1", n2),
    ("r3", "radius-3 closed form against targeted counts", r3),
    (
        "identity",
        "b(n,1) + c_{3^1}(n,n-2) + c_{3^1}(n,n-3) = (3/2)(n+1)(n-2)",
        identity,
    ),
    ("table1", "radius-2 intersection table against direct counts", table),
    (
        "classic",
        "Hamming and Johnson closed forms against brute force",
        classic,
    ),
    ("denes", "factorization counts against exhaustive search", denes),
    ("edges", "labelled edge counts against enumeration", edges),
    ("guarantee", "N + 1 observations always determine the centre", guarantee),
    (
        "catalogue",
        "strongly regular catalogue and the (v+λ)/2 bound",
        catalogue,
    ),
    ("automorphisms", "automorphism group of Sym_n(T)", automorphisms),
    (
        "degree-laws",
        "degrees and leading terms of Stirling-type polynomials",
        degree_laws,
    ),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: recon_core::Error) -> String {
    e.to_string()
}

fn three_halves(n: usize) -> BigInt {
    let n = n as i64;
    BigInt::from((n + 1) * (n - 2) * 3 / 2)
}

fn n1(small: bool, _: u64) -> CheckResult {
    let top = if small { 5 } else { 6 };
    for n in 3..=top {
        let v = n_sym_full_sweep(n, 1).map_err(e2s)?.value;
        ensure(v == 3, || format!("n={n}: N = {v}"))?;
    }
    Ok(format!("n = 3..{top}"))
}

fn n2(small: bool, _: u64) -> CheckResult {
    let top = if small { 6 } else { 7 };
    for n in 5..=top {
        let rep = n_sym_brute(n, 2).map_err(e2s)?;
        ensure(BigInt::from(rep.value) == three_halves(n), || {
            format!("n={n}: N = {}", rep.value)
        })?;
        let want = vec![CycleType::padded(n, &[3]).map_err(e2s)?];
        ensure(rep.argmax == want, || format!("n={n}: argmax {:?}", rep.argmax))?;
    }
    Ok(format!("n = 5..{top}"))
}

fn r3(small: bool, _: u64) -> CheckResult {
    let ns: &[usize] = if small { &[8, 10] } else { &[8, 12, 16] };
    for &n in ns {
        let y = Permutation::from_cycles(n, &[[1, 2, 3]]).map_err(e2s)?;
        let direct = BigInt::from(intersection_with_identity(&y, 3));
        let closed = n_sym_closed(n, 3).map_err(e2s)?.value;
        ensure(direct == closed, || format!("n={n}: direct {direct}, closed {closed}"))?;
    }
    if small {
        let rep = n_sym_brute(8, 3).map_err(e2s)?;
        ensure(BigInt::from(rep.value) == n_sym_general(8, 3), || {
            format!("n=8: N = {}", rep.value)
        })?;
        return Ok("targeted n = 8, 10; full class sweep n = 8".into());
    }
    let rep = n_sym_brute_up_to(16, 3, 6, DEFAULT_SYM_BUDGET).map_err(e2s)?;
    ensure(rep.value == 19389 && rep.per_distance[&2] == 19389, || {
        format!("n=16: N_s {:?}", rep.per_distance)
    })?;
    Ok("targeted n = 8, 12, 16; N(Sym_16(T), 3) = N_2 = 19389 over s <= 6".into())
}

fn identity(_: bool, _: u64) -> CheckResult {
    for n in 5..=30 {
        let c3 = |i| restricted_stirling_closed(RestrictedKind::ThreeCycle, n, i).expect("i <= 4");
        for i in [2, 3] {
            let sum = restricted_stirling_sum(RestrictedKind::ThreeCycle, n, i);
            ensure(c3(i) == sum, || format!("n={n} i={i}: closed {} sum {sum}", c3(i)))?;
        }
        let lhs = ball_size(n, 1) + c3(2) + c3(3);
        ensure(lhs == three_halves(n), || format!("n={n}: {lhs}"))?;
    }
    Ok("n = 5..30".into())
}

fn table(small: bool, _: u64) -> CheckResult {
    let top = if small { 7 } else { 8 };
    for n in 5..=top {
        let t = table1(n).map_err(e2s)?;
        ensure(t.all_verified(), || {
            format!("n={n}: an entry differs from its direct count")
        })?;
        let want: Vec<(usize, usize)> = TABLE1_ERRATA
            .iter()
            .copied()
            .filter(|&(r, _)| t.rows[r].present)
            .collect();
        let got = t.displayed_mismatches();
        ensure(got == want, || format!("n={n}: printed values differ at {got:?}"))?;
    }
    Ok(format!(
        "n = 5..{top}; printed values differ only at the two known misprints"
    ))
}

fn classic(small: bool, _: u64) -> CheckResult {
    let (hn, jn) = if small { (4, 6) } else { (5, 7) };
    let mut cases = 0;
    for n in 1..=hn {
        for q in 2..=3 {
            let h = HammingView::new(n, q).map_err(e2s)?;
            for r in 1..=n.min(3) {
                let b = n_of_gamma(&h, r).map_err(e2s)?.value;
                let c = hamming_closed(n, q, r).map_err(e2s)?;
                ensure(BigInt::from(b) == c, || {
                    format!("H({n},{q}) r={r}: brute {b}, closed {c}")
                })?;
                cases += 1;
            }
        }
    }
    for n in 2..=jn {
        for w in 1..n {
            let j = JohnsonView::new(n, w).map_err(e2s)?;
            for r in 1..=3 {
                let b = n_of_gamma(&j, r).map_err(e2s)?.value;
                let c = johnson_closed(n, w, r).map_err(e2s)?;
                ensure(BigInt::from(b) == c, || {
                    format!("J({n},{w}) r={r}: brute {b}, closed {c}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn denes(small: bool, _: u64) -> CheckResult {
    let top = if small { 4 } else { 5 };
    let mut classes = 0;
    for n in 1..=top {
        for i in 0..n {
            for ct in class_reps(n, i) {
                let f = denes_count(&ct, i).map_err(e2s)?;
                let b = factorizations(&ct.representative(), i);
                ensure(f == BigInt::from(b), || format!("{ct}: formula {f}, search {b}"))?;
                classes += 1;
            }
        }
    }
    let four = denes_count(&CycleType::padded(4, &[4]).map_err(e2s)?, 3).map_err(e2s)?;
    ensure(four == BigInt::from(16), || format!("4-cycle: {four}"))?;
    Ok(format!("{classes} classes with n <= {top}"))
}

fn edges(small: bool, _: u64) -> CheckResult {
    let top = if small { 7 } else { 8 };
    for n in 2..=top {
        for r in 1..=4.min(n - 1) {
            let d = labeled_edge_count_direct(n, r).map_err(e2s)?;
            let f = labeled_edge_count(n, r).map_err(e2s)?;
            ensure(BigInt::from(d.edges) == f, || {
                format!("n={n} r={r}: direct {}, formula {f}", d.edges)
            })?;
        }
    }
    Ok(format!("n <= {top}, r <= 4"))
}

fn k_subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn sweep<G: GraphView>(g: &G, r: usize, all_centres: bool) -> Result<usize, String> {
    let n = n_of_gamma(g, r).map_err(e2s)?.value as usize;
    let centres = if all_centres {
        g.vertices().ok_or("graph cannot be listed")?
    } else {
        vec![g.base_point()]
    };
    let mut checked = 0;
    for x in centres {
        let members: Vec<G::Vertex> = ball(g, &x, r).map_err(e2s)?.into_iter().collect();
        for s in k_subsets(&members, n + 1) {
            let obs = ObservationSet::new(s, r).map_err(e2s)?;
            let cands = reconstruct_intersection(g, &obs).map_err(e2s)?;
            ensure(cands == [x.clone()], || {
                format!("{}: {} candidates", g.describe(), cands.len())
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn guarantee(small: bool, _: u64) -> CheckResult {
    let all = !small;
    let a = sweep(&SymnTView::new(4).map_err(e2s)?, 1, all)?;
    let b = sweep(&HammingView::new(3, 2).map_err(e2s)?, 1, all)?;
    let c = sweep(&JohnsonView::new(4, 2).map_err(e2s)?, 1, all)?;
    Ok(format!("{} (N+1)-subsets over Sym_4(T), F_2^3, J(4,2)", a + b + c))
}

fn catalogue(small: bool, _: u64) -> CheckResult {
    let (tm, lm, tmax) = if small { (5, 4, 12) } else { (7, 6, 30) };
    let mut fams: Vec<SrgFamily> = (4..=tm).map(SrgFamily::Triangle).collect();
    fams.extend((2..=lm).map(SrgFamily::Lattice));
    let paley: &[u64] = if small { &[13] } else { &[13, 17, 29] };
    fams.extend(paley.iter().map(|&q| SrgFamily::Paley(q)));
    for t in 2..=tmax / 2 {
        for m in 2..=tmax / t {
            fams.push(SrgFamily::Multipartite { t, m });
        }
    }
    for f in &fams {
        let (_, rep) = srg_family(f).map_err(e2s)?;
        ensure(rep.matches(), || {
            format!("{f}: computed {:?}, n1 {:?}", rep.computed, rep.n1)
        })?;
        let attained = rep.bound_attained == Some(true);
        ensure(attained == rep.multipartite_shape.is_some(), || {
            format!("{f}: bound attained = {attained}")
        })?;
        if matches!(f, SrgFamily::Multipartite { .. }) {
            ensure(attained, || format!("{f}: bound not attained"))?;
        }
    }
    Ok(format!("{} instances", fams.len()))
}

fn automorphisms(small: bool, seed: u64) -> CheckResult {
    let ns: &[usize] = if small { &[3] } else { &[3, 4] };
    for &n in ns {
        let g = SymnTView::new(n).map_err(e2s)?;
        let count = brute_automorphism_count(&g, DEFAULT_AUTOMORPHISM_CAP).map_err(e2s)?;
        let want = factorial(n).pow(2) * 2;
        ensure(count == want, || format!("n={n}: {count} automorphisms"))?;
    }
    let trials = if small { 1_000 } else { 10_000 };
    ensure(aut_action_check(3, 0, seed).map_err(e2s)?, || "n=3 action check".into())?;
    ensure(aut_action_check(6, trials, seed).map_err(e2s)?, || {
        "n=6 action check".into()
    })?;
    Ok(format!(
        "|Aut| = 2(n!)^2 for n in {ns:?}; {trials} sampled action checks at n=6"
    ))
}

fn degree_laws(small: bool, _: u64) -> CheckResult {
    let top = if small { 3 } else { 4 };
    let fit = |f: &dyn Fn(usize) -> BigInt, from: usize, count: usize| {
        let pts: Vec<(BigInt, BigInt)> = (from..from + count).map(|n| (BigInt::from(n), f(n))).collect();
        RationalPolynomial::interpolate(&pts).map_err(e2s)
    };
    for i in 1..=top {
        let p = fit(&|n| sphere_size(n, i), 2 * i, 2 * i + 3)?;
        let lead = BigRational::new(BigInt::one(), factorial(i) * BigInt::from(2u32).pow(i as u32));
        ensure(p.degree() == Some(2 * i) && p.leading_coefficient() == lead, || {
            format!("i={i}: degree {:?}, leading {}", p.degree(), p.leading_coefficient())
        })?;
        let diff = |n: usize| {
            restricted_stirling_sum(RestrictedKind::ThreeCycle, n, i)
                - restricted_stirling_sum(RestrictedKind::DoubleTransposition, n, i) * 2
        };
        let q = fit(&diff, 8, 2 * i + 3)?;
        let zero = q.coeffs().iter().all(Zero::is_zero);
        let ok = zero || q.degree().is_some_and(|d| (d as i64) < 2 * i as i64 - 4);
        ensure(ok, || format!("i={i}: difference has degree {:?}", q.degree()))?;
    }
    Ok(format!("i <= {top}"))
}

pub fn run(args: &VerifyArgs, global: &GlobalOpts) -> Result<Output, Failure> {
    let mut report = RunReport::new("verify").param("small", args.small);
    if args.list {
        let mut table = Table::new(&["check", "description"]);
        for (name, desc, _) in CHECKS {
            table.push(vec![name.into(), desc.into()]);
        }
        report.results = json!({ "checks": table.to_json() });
        let text = CHECKS.iter().map(|(n, d, _)| format!("{n:<14} {d}")).collect();
        return Ok(Output {
            report,
            text,
            table,
            tabular: false,
            outcome: Outcome::Success,
        });
    }
    let selected: Vec<&(&str, &str, CheckFn)> = if args.all {
        CHECKS.iter().collect()
    } else {
        if args.checks.is_empty() {
            return Err(Failure::BadInput(
                "name the checks to run or pass --all (see --list)".into(),
            ));
        }
        args.checks
            .iter()
            .map(|c| {
                CHECKS
                    .iter()
                    .find(|(n, _, _)| n == c)
                    .ok_or_else(|| Failure::BadInput(format!("unknown check `{c}` (see --list)")))
            })
            .collect::<Result<_, _>>()?
    };
    let seed = global.seed.unwrap_or(0);
    report.seed = Some(seed);
    let mut table = Table::new(&["check", "status", "elapsed_ms", "detail"]);
    let mut text = Vec::new();
    let mut failed = 0;
    for (name, desc, check) in selected {
        let start = Instant::now();
        let result = check(args.small, seed);
        let ms = start.elapsed().as_millis();
        let (status, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        text.push(format!("{status} {name:<14} [{ms} ms] {desc}: {detail}"));
        table.push(vec![name.to_string(), status.to_string(), ms.to_string(), detail]);
    }
    let outcome = if failed == 0 {
        Outcome::Success
    } else {
        Outcome::Mismatch
    };
    text.push(format!("{} passed, {failed} failed", table.rows.len() - failed));
    report.verdict = Some(if failed == 0 { Verdict::Match } else { Verdict::Mismatch });
    report.results = json!({ "checks": table.to_json(), "failed": failed.to_string() });
    Ok(Output {
        report,
        text,
        table,
        tabular: false,
        outcome,
    })
}
