//! The immutable simple graph the game is played on.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored twice: as sorted
//! neighbor lists (for iteration) and as packed bit rows (for O(n/64)
//! neighborhood-coverage tests, which dominate the solver's safe-set pass).

use std::fmt;

use thiserror::Error;

/// Vertex id. Dense, `0..n`.
pub type Vertex = u16;

/// Hard cap on vertex count so ids fit in a `Vertex`.
pub const MAX_VERTICES: usize = u16::MAX as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph too large: {0} vertices (max {MAX_VERTICES})")]
    TooManyVertices(usize),
    #[error("invalid {family} parameters: {reason}")]
    BadFamilyParams { family: &'static str, reason: String },
    #[error("edge list is not a tree: {0}")]
    NotATree(String),
}

/// Finite simple graph with symmetric, irreflexive adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major packed adjacency bits, `n * words` words.
    bits: Vec<u64>,
    neighbors: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may come in any order and
    /// either orientation; self-loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            let (ui, vi) = (u as usize, v as usize);
            if ui >= n {
                return Err(GraphError::VertexOutOfRange { v: ui, n });
            }
            if vi >= n {
                return Err(GraphError::VertexOutOfRange { v: vi, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if bits[ui * words + vi / 64] >> (vi % 64) & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            bits[ui * words + vi / 64] |= 1 << (vi % 64);
            bits[vi * words + ui / 64] |= 1 << (ui % 64);
            neighbors[ui].push(v);
            neighbors[vi].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            words,
            bits,
            neighbors,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self::from_edges(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v as usize]
    }

    /// Packed bit row of `N(v)`.
    pub fn neighbor_row(&self, v: Vertex) -> &[u64] {
        let v = v as usize;
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (ui, vi) = (u as usize, v as usize);
        debug_assert!(ui < self.n && vi < self.n);
        self.bits[ui * self.words + vi / 64] >> (vi % 64) & 1 == 1
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if (u as Vertex) < v {
                    out.push((u as Vertex, v));
                }
            }
        }
        out
    }

    /// Per-vertex degrees and the maximum degree (0 on the empty vertex set).
    pub fn degree_profile(&self) -> (Vec<usize>, usize) {
        let degs: Vec<usize> = self.neighbors.iter().map(Vec::len).collect();
        let max = degs.iter().copied().max().unwrap_or(0);
        (degs, max)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degree-1 vertices. On a tree these are exactly the leaves.
    pub fn leaf_set(&self) -> Vec<Vertex> {
        (0..self.n as Vertex)
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// BFS distances from `src`; `u32::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Canonical text form: vertex count plus the sorted edge list. Two graphs
    /// share the same string iff they are equal as labeled graphs.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("n={};", self.n);
        for (i, (u, v)) in self.edges().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{u}-{v}"));
        }
        s
    }

    /// FNV-1a digest of the canonical labeled-graph string, as fixed-width hex.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in self.canonical_string().bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 5, n: 2 }
        ));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(4, &[(2, 0), (3, 1), (0, 3)]).unwrap();
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert_eq!(g.neighbors(0), &[2, 3]);
        assert_eq!(g.neighbors(3), &[0, 1]);
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn degree_profile_and_leaves() {
        // path 0-1-2-3-4
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (degs, max) = g.degree_profile();
        assert_eq!(degs, vec![1, 2, 2, 2, 1]);
        assert_eq!(max, 2);
        assert_eq!(g.leaf_set(), vec![0, 4]);
        assert!(g.is_tree());
    }

    #[test]
    fn empty_vertex_set() {
        let g = Graph::edgeless(0);
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_connected());
        assert_eq!(g.fingerprint().len(), 16);
    }

    #[test]
    fn disconnected_graphs_accepted() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert!(!g.is_connected());
        assert!(!g.is_tree());
        let d = g.distances_from(0);
        assert_eq!(d[1], 1);
        assert_eq!(d[2], u32::MAX);
    }
}
