use std::ops::RangeInclusive;

use clap::ValueEnum;
use num_bigint::BigInt;
use recon_core::numbers::{
    ball_size, binomial, denes_count, poincare_polynomial, restricted_stirling, restricted_stirling_closed,
    restricted_stirling_sum, sphere_size, stirling_first_signless, RestrictedKind,
};
use recon_core::perm::{class_reps, CycleType, Permutation, Transposition};
use recon_core::symt::{labeled_edge_count, labeled_edge_count_direct, total_edge_count};
use serde_json::json;

use crate::error::Failure;
use crate::report::{Outcome, Output, RunReport, Table, Verdict};
use crate::{GlobalOpts, NumberKind, NumbersArgs};

/// Default cap on elements enumerated for a brute-force column.
const DEFAULT_NUMBERS_BUDGET: u64 = 2_000_000;

/// Ordered `i`-tuples of transpositions whose product is `target`.
pub fn factorizations(target: &Permutation, i: usize) -> u64 {
    fn go(cur: &Permutation, left: usize, target: &Permutation, ts: &[Transposition]) -> u64 {
        if left == 0 {
            return u64::from(cur == target);
        }
        ts.iter()
            .map(|&t| go(&cur.apply_transposition(t), left - 1, target, ts))
            .sum()
    }
    let ts: Vec<Transposition> = Transposition::all(target.degree()).collect();
    go(&Permutation::identity(target.degree()), i, target, &ts)
}

fn within(cost: BigInt, budget: u64) -> bool {
    cost <= BigInt::from(budget)
}

fn indices(given: &Option<RangeInclusive<usize>>, default: RangeInclusive<usize>) -> Vec<usize> {
    match given {
        Some(r) => r.clone().filter(|i| default.contains(i)).collect(),
        None => default.collect(),
    }
}

struct Checker {
    mismatches: usize,
}

impl Checker {
    /// `"match"`, `"mismatch"` or empty when nothing independent was computed.
    fn verdict(&mut self, value: &BigInt, others: &[Option<BigInt>]) -> String {
        let present: Vec<&BigInt> = others.iter().flatten().collect();
        if present.is_empty() {
            return String::new();
        }
        if present.iter().all(|o| *o == value) {
            "match".into()
        } else {
            self.mismatches += 1;
            "mismatch".into()
        }
    }
}

fn opt(v: &Option<BigInt>) -> String {
    v.as_ref().map(BigInt::to_string).unwrap_or_default()
}

pub fn run(args: &NumbersArgs, global: &GlobalOpts) -> Result<Output, Failure> {
    let budget = global.budget.unwrap_or(DEFAULT_NUMBERS_BUDGET);
    let mut check = Checker { mismatches: 0 };
    let table = match args.kind {
        NumberKind::Stirling => {
            let mut t = Table::new(&["n", "k", "value"]);
            for n in args.n.clone() {
                for k in indices(&args.i, 0..=n) {
                    t.push(vec![
                        n.to_string(),
                        k.to_string(),
                        stirling_first_signless(n, k).to_string(),
                    ]);
                }
            }
            t
        }
        NumberKind::Restricted3Cycle | NumberKind::Restricted2x2 => {
            let kind = if args.kind == NumberKind::Restricted3Cycle {
                RestrictedKind::ThreeCycle
            } else {
                RestrictedKind::DoubleTransposition
            };
            let mut t = Table::new(&["n", "i", "value", "closed", "brute", "verdict"]);
            for n in args.n.clone() {
                for i in indices(&args.i, 0..=n.saturating_sub(1)) {
                    let value = restricted_stirling_sum(kind, n, i);
                    let closed = restricted_stirling_closed(kind, n, i);
                    let brute = within(sphere_size(n, i), budget).then(|| restricted_stirling(kind, n, i));
                    let verdict = check.verdict(&value, &[closed.clone(), brute.clone()]);
                    t.push(vec![
                        n.to_string(),
                        i.to_string(),
                        value.to_string(),
                        opt(&closed),
                        opt(&brute),
                        verdict,
                    ]);
                }
            }
            t
        }
        NumberKind::Denes => {
            let lengths: Option<Vec<usize>> = args
                .class
                .as_deref()
                .map(|c| {
                    c.split(|ch: char| ch == ',' || ch.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(|s| {
                            s.parse::<usize>()
                                .map_err(|_| Failure::BadInput(format!("bad cycle length `{s}`")))
                        })
                        .collect()
                })
                .transpose()?;
            let mut t = Table::new(&["n", "class", "i", "value", "brute", "verdict"]);
            for n in args.n.clone() {
                let classes: Vec<CycleType> = match &lengths {
                    Some(l) if l.iter().sum::<usize>() <= n => vec![CycleType::padded(n, l)?],
                    Some(_) => Vec::new(),
                    None => (0..n).flat_map(|i| class_reps(n, i)).collect(),
                };
                for ct in classes {
                    let i = ct.sphere_index();
                    if args.i.as_ref().is_some_and(|r| !r.contains(&i)) {
                        continue;
                    }
                    let value = denes_count(&ct, i)?;
                    let cost = num_traits::pow(binomial(n as i64, 2), i);
                    let brute = within(cost, budget).then(|| BigInt::from(factorizations(&ct.representative(), i)));
                    let verdict = check.verdict(&value, std::slice::from_ref(&brute));
                    t.push(vec![
                        n.to_string(),
                        ct.to_string(),
                        i.to_string(),
                        value.to_string(),
                        opt(&brute),
                        verdict,
                    ]);
                }
            }
            t
        }
        NumberKind::Poincare => {
            let mut t = Table::new(&["n", "i", "coefficient", "sphere_size", "verdict"]);
            for n in args.n.clone() {
                let p = poincare_polynomial(n);
                for i in indices(&args.i, 0..=n.saturating_sub(1)) {
                    let coeff = p.coeff(i);
                    let sphere = Some(sphere_size(n, i));
                    let verdict = check.verdict(&coeff, std::slice::from_ref(&sphere));
                    t.push(vec![
                        n.to_string(),
                        i.to_string(),
                        coeff.to_string(),
                        opt(&sphere),
                        verdict,
                    ]);
                }
            }
            t
        }
        NumberKind::Ballsize => {
            let mut t = Table::new(&["n", "r", "value"]);
            for n in args.n.clone() {
                for r in indices(&args.i, 0..=n.saturating_sub(1)) {
                    t.push(vec![n.to_string(), r.to_string(), ball_size(n, r).to_string()]);
                }
            }
            t
        }
        NumberKind::Edgecount => {
            let mut t = Table::new(&["n", "r", "labeled", "total", "direct", "verdict"]);
            for n in args.n.clone().filter(|&n| n >= 2) {
                for r in indices(&args.i, 1..=n - 1) {
                    let labeled = labeled_edge_count(n, r)?;
                    let total = total_edge_count(n, r)?;
                    let direct = within(sphere_size(n, r), budget)
                        .then(|| labeled_edge_count_direct(n, r).map(|c| BigInt::from(c.edges)))
                        .transpose()?;
                    let verdict = check.verdict(&labeled, std::slice::from_ref(&direct));
                    t.push(vec![
                        n.to_string(),
                        r.to_string(),
                        labeled.to_string(),
                        total.to_string(),
                        opt(&direct),
                        verdict,
                    ]);
                }
            }
            t
        }
    };
    let kind = args.kind.to_possible_value().expect("no skipped variants");
    let outcome = if check.mismatches == 0 {
        Outcome::Success
    } else {
        Outcome::Mismatch
    };
    let mut report = RunReport::new("numbers")
        .param("kind", kind.get_name())
        .param("n", format!("{}..{}", args.n.start(), args.n.end()));
    if let Some(i) = &args.i {
        report = report.param("i", format!("{}..{}", i.start(), i.end()));
    }
    if let Some(c) = &args.class {
        report = report.param("class", c);
    }
    if table.header.iter().any(|h| h == "verdict") {
        report.verdict = Some(if outcome == Outcome::Success {
            Verdict::Match
        } else {
            Verdict::Mismatch
        });
    }
    report.results = json!({ "rows": table.to_json(), "mismatches": check.mismatches.to_string() });
    Ok(Output {
        report,
        text: Vec::new(),
        table,
        tabular: true,
        outcome,
    })
}
