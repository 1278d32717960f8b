use std::collections::BTreeMap;

use num_bigint::BigInt;
use recon_core::desc::{AnyGraph, GraphVisitor};
use recon_core::graph::{n_of_gamma, n_of_gamma_with_budget};
use recon_core::symt::{n_sym_brute_with_budget, DEFAULT_SYM_BUDGET};
use recon_core::{Error, GraphView};
use serde_json::json;

use super::parse_graph;
use crate::error::Failure;
use crate::report::{Method, Outcome, Output, RunReport, Table, Verdict};
use crate::{GlobalOpts, NArgs};

/// A brute-force answer with vertices already formatted.
pub struct Brute {
    pub value: u64,
    pub per_distance: BTreeMap<usize, u64>,
    pub witness: (String, String),
    pub witness_distance: usize,
    /// Maximising conjugacy classes, for `Sym_n(T)`.
    pub argmax: Option<Vec<String>>,
}

struct BruteVisitor {
    r: usize,
    budget: Option<u64>,
}

impl GraphVisitor for BruteVisitor {
    type Output = Result<Brute, Error>;

    fn visit<G: GraphView>(self, g: &G) -> Self::Output {
        let res = match self.budget {
            Some(b) => n_of_gamma_with_budget(g, self.r, b)?,
            None => n_of_gamma(g, self.r)?,
        };
        let res = res.map_vertices(|v| g.format_vertex(&v));
        Ok(Brute {
            value: res.value,
            per_distance: res.per_distance,
            witness: res.witness,
            witness_distance: res.witness_distance,
            argmax: None,
        })
    }
}

/// `N(Γ, r)` by the fastest exhaustive method for the graph.
pub fn brute(graph: &AnyGraph, r: usize, budget: Option<u64>) -> Result<Brute, Error> {
    if let AnyGraph::Symt(g) = graph {
        if r == 0 {
            return Err(Error::InvalidArgument("N(Γ, r) needs r >= 1".into()));
        }
        let rep = n_sym_brute_with_budget(g.n(), r, budget.unwrap_or(DEFAULT_SYM_BUDGET))?;
        let res = rep.to_nresult();
        return Ok(Brute {
            value: rep.value,
            per_distance: rep.per_distance.clone(),
            witness: (g.format_vertex(&res.witness.0), g.format_vertex(&res.witness.1)),
            witness_distance: res.witness_distance,
            argmax: Some(rep.argmax.iter().map(|c| c.to_string()).collect()),
        });
    }
    graph.visit(BruteVisitor { r, budget })
}

pub fn run(args: &NArgs, global: &GlobalOpts) -> Result<Output, Failure> {
    let (spec, graph) = parse_graph(&args.graph)?;
    let r = args.r;
    let want_closed = args.closed || args.both;
    let mut report = RunReport::new("n").param("graph", &spec).param("r", r);
    if let Some(b) = global.budget {
        report = report.param("budget", b);
    }
    let mut text = vec![format!("graph: {spec}  r: {r}")];

    let closed = if want_closed {
        let c = graph
            .closed_n(&spec, r)?
            .ok_or_else(|| Failure::BadInput(format!("no closed form for {spec} at r={r}")))?;
        Some(c)
    } else {
        None
    };
    let brute = match brute(&graph, r, global.budget) {
        Ok(b) => Some(b),
        Err(e @ Error::Infeasible { .. }) if args.closed => {
            report.notes.push(format!("brute force skipped: {e}"));
            text.push(format!("brute force skipped: {e}"));
            None
        }
        Err(e) => return Err(e.into()),
    };

    report.method = Some(match (&closed, &brute) {
        (Some(_), Some(_)) => Method::Both,
        (Some(_), None) => Method::Closed,
        _ => Method::Brute,
    });
    let mut results = serde_json::Map::new();
    let mut table = Table::new(&["s", "n_s"]);
    if let Some(b) = &brute {
        text.push(format!("N = {} (brute force)", b.value));
        let parts: Vec<String> = b.per_distance.iter().map(|(s, v)| format!("s={s}: {v}")).collect();
        text.push(format!("N_s: {}", parts.join(", ")));
        text.push(format!(
            "witness: {} and {} at distance {}",
            b.witness.0, b.witness.1, b.witness_distance
        ));
        for (s, v) in &b.per_distance {
            table.push(vec![s.to_string(), v.to_string()]);
        }
        results.insert("n".into(), json!(b.value.to_string()));
        results.insert(
            "per_distance".into(),
            json!(b
                .per_distance
                .iter()
                .map(|(s, v)| (s.to_string(), v.to_string()))
                .collect::<BTreeMap<_, _>>()),
        );
        results.insert("witness".into(), json!([b.witness.0, b.witness.1]));
        results.insert("witness_distance".into(), json!(b.witness_distance.to_string()));
        if let Some(classes) = &b.argmax {
            text.push(format!("maximising classes: {}", classes.join("; ")));
            results.insert("argmax_classes".into(), json!(classes));
        }
    }
    let mut outcome = Outcome::Success;
    if let Some(c) = &closed {
        text.push(format!("closed: {} ({})", c.value, c.validity));
        results.insert("closed".into(), json!(c.value.to_string()));
        report.validity = Some(c.validity);
        if let Some(b) = &brute {
            let verdict = if BigInt::from(b.value) == c.value {
                Verdict::Match
            } else {
                outcome = Outcome::Mismatch;
                Verdict::Mismatch
            };
            text.push(format!(
                "verdict: {}",
                if verdict == Verdict::Match { "match" } else { "MISMATCH" }
            ));
            report.verdict = Some(verdict);
        }
        if brute.is_none() {
            table.push(vec!["closed".into(), c.value.to_string()]);
        }
    }
    report.results = serde_json::Value::Object(results);
    Ok(Output {
        report,
        text,
        table,
        tabular: false,
        outcome,
    })
}
