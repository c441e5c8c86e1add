//! Graph file format: `{"n": int, "edges": [[u, v], ...]}` with 0-based ids.
//! Writes are canonical (edges as `u < v`, sorted lexicographically), so
//! write∘read is byte-stable on canonical files.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum GraphIoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed graph file: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile {
        n: g.n(),
        edges: g.edges(),
    };
    serde_json::to_string(&file).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> Result<Graph, GraphIoError> {
    let file: GraphFile = serde_json::from_str(text)?;
    Ok(Graph::from_edges(file.n, &file.edges)?)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<(), GraphIoError> {
    std::fs::write(path, graph_to_json(g) + "\n")?;
    Ok(())
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphIoError> {
    graph_from_json(&std::fs::read_to_string(path)?)
}
