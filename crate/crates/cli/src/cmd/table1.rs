use recon_core::symt::table1;
use serde_json::json;

use crate::error::Failure;
use crate::report::{Outcome, Output, RunReport, Table, Verdict};
use crate::{GlobalOpts, Table1Args};

pub fn run(args: &Table1Args, _global: &GlobalOpts) -> Result<Output, Failure> {
    let n = args.n;
    if n < 4 {
        return Err(Failure::BadInput(format!("table1 needs n >= 4 (got {n})")));
    }
    let t = table1(n)?;
    let mut table = Table::new(&[
        "row",
        "column",
        "present",
        "value",
        "printed",
        "direct",
        "verified",
        "printed_matches",
    ]);
    for row in &t.rows {
        for (col, e) in t.columns.iter().zip(&row.entries) {
            table.push(vec![
                row.label.clone(),
                col.clone(),
                row.present.to_string(),
                e.value.to_string(),
                e.displayed.to_string(),
                e.direct.map(|d| d.to_string()).unwrap_or_default(),
                if row.present {
                    e.verified().to_string()
                } else {
                    String::new()
                },
                if row.present {
                    e.displayed_matches().to_string()
                } else {
                    String::new()
                },
            ]);
        }
    }
    let present = t.rows.iter().filter(|r| r.present).count();
    let cells = present * t.columns.len();
    let verified = t.verified_count();
    let outcome = if t.all_verified() {
        Outcome::Success
    } else {
        Outcome::Mismatch
    };
    let n_s: serde_json::Map<String, serde_json::Value> = (1..=4)
        .filter_map(|s| t.n_s(s).map(|v| (s.to_string(), json!(v.to_string()))))
        .collect();
    let errata: Vec<_> = t
        .displayed_mismatches()
        .into_iter()
        .map(|(r, c)| json!({"row": t.rows[r].label, "column": t.columns[c]}))
        .collect();
    let mut report = RunReport::new("table1").param("n", n);
    report.verdict = Some(if outcome == Outcome::Success {
        Verdict::Match
    } else {
        Verdict::Mismatch
    });
    report.results = json!({
        "entries": table.to_json(),
        "cells": cells.to_string(),
        "verified": verified.to_string(),
        "n_s": n_s,
        "printed_mismatches": errata,
    });
    let absent = t.rows.len() - present;
    let text = vec![format!(
        "n={n}: {verified}/{cells} cells verified by direct count, {absent} rows absent"
    )];
    Ok(Output {
        report,
        text,
        table,
        tabular: true,
        outcome,
    })
}
