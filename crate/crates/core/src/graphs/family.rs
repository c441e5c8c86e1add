//! Generators for the named graph families, each with a fixed canonical
//! labeling so solver output and certificates are reproducible.

use super::graph::{Graph, GraphError, Vertex};

fn bad(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::BadFamilyParams {
        family,
        reason: reason.into(),
    }
}

/// Path `0-1-...-(n-1)`. Requires `n >= 1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad("path", "order must be >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) as Vertex, v as Vertex)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle", "order must be >= 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|v| ((v - 1) as Vertex, v as Vertex)).collect();
    edges.push((0, (n - 1) as Vertex));
    Graph::from_edges(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad("complete", "order must be >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u as Vertex, v as Vertex));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star on `n >= 2` vertices: center 0, leaves `1..n`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(bad("star", "order must be >= 2"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v as Vertex)).collect();
    Graph::from_edges(n, &edges)
}

/// Wheel on `n >= 4` vertices: hub 0, rim cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(bad("wheel", "order must be >= 4"));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (0, v as Vertex)).collect();
    for v in 2..n {
        edges.push(((v - 1) as Vertex, v as Vertex));
    }
    edges.push((1, (n - 1) as Vertex));
    Graph::from_edges(n, &edges)
}

/// `d`-dimensional hypercube. Vertex id is the binary coordinate vector;
/// vertices are adjacent iff they differ in exactly one bit. Requires `1 <= d <= 15`.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if !(1..=15).contains(&d) {
        return Err(bad("hypercube", "dimension must be in 1..=15"));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v as Vertex, w as Vertex));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete multipartite graph. Parts appear as contiguous id blocks in the
/// given order (they are not sorted here). Every part must be nonempty.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(bad("kpartite", "need at least one part"));
    }
    if parts.contains(&0) {
        return Err(bad("kpartite", "all parts must be >= 1"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u as Vertex, v as Vertex));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Tree from an explicit edge list. The vertex count is `max endpoint + 1`
/// and the edges must form exactly one spanning tree of those vertices.
pub fn tree_from_edges(edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    if edges.is_empty() {
        return Err(GraphError::NotATree("no edges given".into()));
    }
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap();
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != n - 1 {
        return Err(GraphError::NotATree(format!(
            "{} edges on {} vertices",
            g.edge_count(),
            n
        )));
    }
    if !g.is_connected() {
        return Err(GraphError::NotATree("edge list is disconnected".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_degrees() {
        let g = cycle(5).unwrap();
        assert_eq!(g.n(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn hypercube_structure() {
        let g = hypercube(3).unwrap();
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        // id 0b011 is adjacent to 0b010, 0b001, 0b111
        assert_eq!(g.neighbors(3), &[1, 2, 7]);
    }

    #[test]
    fn multipartite_degrees() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert!((2..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn wheel_has_universal_hub() {
        let g = wheel(6).unwrap();
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn star_leaves() {
        let g = star(4).unwrap();
        assert_eq!(g.leaf_set(), vec![1, 2, 3]);
    }

    #[test]
    fn tree_validation() {
        assert!(tree_from_edges(&[(0, 1), (1, 2), (1, 3), (0, 4), (0, 5)]).is_ok());
        // cycle
        assert!(tree_from_edges(&[(0, 1), (1, 2), (0, 2)]).is_err());
        // disconnected with a skipped id
        assert!(tree_from_edges(&[(0, 1), (3, 4)]).is_err());
    }

    #[test]
    fn handshake_identity_across_families() {
        for g in [
            path(7).unwrap(),
            cycle(6).unwrap(),
            complete(5).unwrap(),
            star(6).unwrap(),
            wheel(7).unwrap(),
            hypercube(4).unwrap(),
            complete_multipartite(&[1, 2, 3]).unwrap(),
        ] {
            let (degs, _) = g.degree_profile();
            assert_eq!(degs.iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
