//! DOT and JSON renderings of a materialized graph.
//!
//! Vertex order is the lexicographic enumeration order, so output is
//! byte-stable across runs. Numbers in JSON are decimal strings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PCubeGraph;
use crate::strings::{is_pvalid, PString};

pub fn to_dot(g: &PCubeGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph gamma_{}_{} {{", g.n(), g.p()).unwrap();
    for (id, v) in g.vertices().iter().enumerate() {
        writeln!(out, "  v{id} [label=\"{}\"];", label(v)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.low, e.high, e.direction).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The empty string renders as `λ` so that `Γ_0^p` still has a visible label.
fn label(v: &PString) -> String {
    if v.is_empty() {
        "λ".to_string()
    } else {
        v.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyEntry {
    pub vertex: String,
    pub neighbors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub p: String,
    pub n: String,
    pub adjacency: Vec<AdjacencyEntry>,
}

pub fn to_json(g: &PCubeGraph) -> GraphJson {
    let adjacency = (0..g.order())
        .map(|id| AdjacencyEntry {
            vertex: g.vertex(id).to_string(),
            neighbors: g.neighbors(id).iter().map(|&w| g.vertex(w).to_string()).collect(),
        })
        .collect();
    GraphJson { p: g.p().to_string(), n: g.n().to_string(), adjacency }
}

/// Parses an adjacency export and checks it against the graph it claims to
/// be: same vertex list in the same order and the same neighbor lists.
pub fn parse_graph_json(text: &str) -> Result<PCubeGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let parse_param = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse(format!("not a non-negative integer: {s:?}")))
    };
    let (p, n) = (parse_param(&doc.p)?, parse_param(&doc.n)?);
    // only small graphs are reconstructed from untrusted input
    if n > 16 {
        return Err(Error::SizeLimit { what: "graph import", n, cap: 17 });
    }
    for entry in &doc.adjacency {
        let v: PString = entry.vertex.parse()?;
        if v.len() != n || !is_pvalid(&v, p) {
            return Err(Error::Parse(format!("{:?} is not a vertex of the graph", entry.vertex)));
        }
    }
    let g = PCubeGraph::build(p, n)?;
    if to_json(&g) != doc {
        return Err(Error::Parse("adjacency does not match the Fibonacci p-cube".into()));
    }
    Ok(g)
}
