//! Retraction maps and their validation.
//!
//! A retraction folds a graph onto an induced subgraph while fixing that
//! subgraph pointwise; edges must map to edges or collapse to a single
//! vertex. The game value is monotone under retracts, which the inequality
//! suite checks on concrete instances.

use thiserror::Error;

use super::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RetractionError {
    #[error("map has {got} entries, graph has {want} vertices")]
    WrongLength { got: usize, want: usize },
    #[error("image vertex {0} is not in the target subset")]
    ImageOutsideTarget(Vertex),
    #[error("target vertex {0} out of range")]
    TargetOutOfRange(Vertex),
}

/// A candidate retraction of `source` onto the induced subgraph on `target`.
#[derive(Debug, Clone)]
pub struct RetractionMap {
    pub source: Graph,
    /// Vertex subset inducing the retract, sorted.
    pub target: Vec<Vertex>,
    /// Total map on `V(source)`.
    pub map: Vec<Vertex>,
}

impl RetractionMap {
    pub fn new(source: Graph, mut target: Vec<Vertex>, map: Vec<Vertex>) -> Result<Self, RetractionError> {
        target.sort_unstable();
        target.dedup();
        if map.len() != source.n() {
            return Err(RetractionError::WrongLength {
                got: map.len(),
                want: source.n(),
            });
        }
        for &t in &target {
            if t as usize >= source.n() {
                return Err(RetractionError::TargetOutOfRange(t));
            }
        }
        for &img in &map {
            if target.binary_search(&img).is_err() {
                return Err(RetractionError::ImageOutsideTarget(img));
            }
        }
        Ok(RetractionMap { source, target, map })
    }

    /// The induced subgraph on the target subset, relabeled to dense ids in
    /// target order.
    pub fn induced_target(&self) -> Graph {
        let pos = |v: Vertex| self.target.binary_search(&v).unwrap() as Vertex;
        let mut edges = Vec::new();
        for (i, &u) in self.target.iter().enumerate() {
            for &w in self.source.neighbors(u) {
                if let Ok(j) = self.target.binary_search(&w) {
                    if j > i {
                        edges.push((pos(u), pos(w)));
                    }
                }
            }
        }
        Graph::from_edges(self.target.len(), &edges).expect("induced subgraph is valid")
    }
}

/// Checks both retraction conditions by exhaustive edge enumeration:
/// the map fixes the target pointwise, and every source edge either maps to
/// an edge of the induced subgraph or collapses.
pub fn is_retraction(r: &RetractionMap) -> bool {
    for &h in &r.target {
        if r.map[h as usize] != h {
            return false;
        }
    }
    for (u, v) in r.source.edges() {
        let (ru, rv) = (r.map[u as usize], r.map[v as usize]);
        if ru != rv && !r.source.has_edge(ru, rv) {
            return false;
        }
    }
    true
}
