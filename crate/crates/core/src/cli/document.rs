//! On-disk graph formats: the JSON graph document and Graphviz DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::Result;
use crate::graph::PrimeGraph;
use crate::numtheory::PrimeSet;

/// `{"vertices":[2,3,5], "edges":[[2,3]], "metadata":{...}}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<u128>,
    pub edges: Vec<[u128; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Map<String, Value>>,
}

impl GraphDocument {
    pub fn from_graph(g: &PrimeGraph, metadata: Option<Map<String, Value>>) -> Self {
        GraphDocument {
            vertices: g.vertices().as_slice().to_vec(),
            edges: g.edges().into_iter().map(|(p, q)| [p, q]).collect(),
            metadata,
        }
    }

    /// Validates primality, distinctness and edge endpoints.
    pub fn to_graph(&self) -> Result<PrimeGraph> {
        let vertices = PrimeSet::new(self.vertices.iter().copied())?;
        PrimeGraph::new(vertices, self.edges.iter().map(|&[p, q]| (p, q)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph documents always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Undirected DOT graph, one line per vertex and per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph delta {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for [p, q] in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }
}
