pub mod export;
pub mod n;
pub mod numbers;
pub mod reconstruct;
pub mod table1;
pub mod verify;

use recon_core::desc::{AnyGraph, GraphSpec};

use crate::error::Failure;

pub fn parse_graph(descriptor: &str) -> Result<(GraphSpec, AnyGraph), Failure> {
    let spec: GraphSpec = descriptor.parse()?;
    let graph = AnyGraph::build(&spec)?;
    Ok((spec, graph))
}
