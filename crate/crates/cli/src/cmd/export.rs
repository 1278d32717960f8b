use std::fmt::Write as _;

use recon_core::desc::GraphVisitor;
use recon_core::graph::ExplicitGraph;
use recon_core::{Error, GraphView};
use serde_json::json;

use super::parse_graph;
use crate::error::Failure;
use crate::report::{Outcome, Output, RunReport, Table};
use crate::{ExportArgs, GlobalOpts};

/// Default cap on exported vertices.
const DEFAULT_EXPORT_BUDGET: u64 = 1_000_000;

struct Export {
    budget: u64,
}

impl GraphVisitor for Export {
    type Output = Result<(ExplicitGraph, Vec<String>), Error>;

    fn visit<G: GraphView>(self, g: &G) -> Self::Output {
        let (explicit, labels) = ExplicitGraph::from_view(g, self.budget)?;
        Ok((explicit, labels.iter().map(|v| g.format_vertex(v)).collect()))
    }
}

pub fn run(args: &ExportArgs, global: &GlobalOpts) -> Result<Output, Failure> {
    let (spec, graph) = parse_graph(&args.graph)?;
    let (g, labels) = graph.visit(Export {
        budget: global.budget.unwrap_or(DEFAULT_EXPORT_BUDGET),
    })?;
    let mut text = format!(
        "# graph={spec} vertices={} edges={}\n",
        g.vertex_count(),
        g.edge_count()
    );
    for (id, label) in labels.iter().enumerate() {
        writeln!(text, "# {id} = {label}").expect("writing to a String");
    }
    text.push_str(&g.to_adjacency_text());

    let mut table = Table::new(&["id", "label", "neighbors"]);
    for (id, label) in labels.iter().enumerate() {
        let nbrs: Vec<String> = g.adjacency(id).iter().map(usize::to_string).collect();
        table.push(vec![id.to_string(), label.clone(), nbrs.join(" ")]);
    }
    let mut report = RunReport::new("export").param("graph", &spec);
    let mut lines = Vec::new();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)?;
            report = report.param("out", path.display());
            lines.push(format!(
                "wrote {} vertices, {} edges to {}",
                g.vertex_count(),
                g.edge_count(),
                path.display()
            ));
        }
        None => lines.extend(text.lines().map(str::to_string)),
    }
    report.results = json!({
        "vertices": g.vertex_count().to_string(),
        "edges": g.edge_count().to_string(),
        "adjacency": table.to_json(),
    });
    Ok(Output {
        report,
        text: lines,
        table,
        tabular: false,
        outcome: Outcome::Success,
    })
}
