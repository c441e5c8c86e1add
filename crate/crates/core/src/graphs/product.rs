//! Cartesian, strong, and lexicographic graph products.
//!
//! The vertex `(u, v)` of a product gets id `u * |V(H)| + v`, so factor
//! coordinates are recoverable in O(1) by div/mod — policies on products
//! rely on this.

use serde::{Deserialize, Serialize};

use super::graph::{Graph, GraphError, Vertex, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cart",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        }
    }
}

/// Product vertex id for `(u, v)`.
pub fn pair_id(u: Vertex, v: Vertex, h_order: usize) -> Vertex {
    (u as usize * h_order + v as usize) as Vertex
}

/// Factor coordinates of a product vertex id.
pub fn coords(id: Vertex, h_order: usize) -> (Vertex, Vertex) {
    ((id as usize / h_order) as Vertex, (id as usize % h_order) as Vertex)
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph, GraphError> {
    let n = g
        .n()
        .checked_mul(h.n())
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(GraphError::TooManyVertices(usize::MAX))?;
    let ho = h.n();
    let mut edges = Vec::new();
    for u in 0..g.n() as Vertex {
        for v in 0..ho as Vertex {
            let a = pair_id(u, v, ho);
            // Edges within one copy of H: same G-coordinate, adjacent H-coordinates.
            if matches!(
                kind,
                ProductKind::Cartesian | ProductKind::Strong | ProductKind::Lexicographic
            ) {
                for &y in h.neighbors(v) {
                    if y > v {
                        edges.push((a, pair_id(u, y, ho)));
                    }
                }
            }
            for &x in g.neighbors(u) {
                if x <= u {
                    continue;
                }
                match kind {
                    ProductKind::Cartesian => {
                        edges.push((a, pair_id(x, v, ho)));
                    }
                    ProductKind::Strong => {
                        edges.push((a, pair_id(x, v, ho)));
                        for &y in h.neighbors(v) {
                            edges.push((a, pair_id(x, y, ho)));
                        }
                    }
                    ProductKind::Lexicographic => {
                        // Adjacent G-coordinates connect regardless of H-coordinates.
                        for y in 0..ho as Vertex {
                            edges.push((a, pair_id(x, y, ho)));
                        }
                    }
                }
            }
        }
    }
    // The strong case pushes each diagonal edge once per orientation of the
    // H-step, so (a, b) can appear as both (a, b) and (b, a). Deduplicate.
    let mut norm: Vec<(Vertex, Vertex)> = edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    norm.sort_unstable();
    norm.dedup();
    Graph::from_edges(n, &norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::family::{cycle, path};

    #[test]
    fn cartesian_p2_p2_is_a_4_cycle() {
        let p2 = path(2).unwrap();
        let g = product(&p2, &p2, ProductKind::Cartesian).unwrap();
        let c4 = cycle(4).unwrap();
        // same degree sequence and edge count; explicit check of the square
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), c4.edge_count());
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 3) && g.has_edge(2, 3));
        assert!(!g.has_edge(0, 3) && !g.has_edge(1, 2));
    }

    #[test]
    fn cartesian_degree_identity() {
        let g = path(3).unwrap();
        let h = path(4).unwrap();
        let p = product(&g, &h, ProductKind::Cartesian).unwrap();
        for u in 0..3u16 {
            for v in 0..4u16 {
                let id = pair_id(u, v, 4);
                assert_eq!(p.degree(id), g.degree(u) + h.degree(v));
            }
        }
        let (_, max) = p.degree_profile();
        assert_eq!(max, 4);
    }

    #[test]
    fn strong_degree_identity() {
        let g = path(3).unwrap();
        let p = product(&g, &g, ProductKind::Strong).unwrap();
        for u in 0..3u16 {
            for v in 0..3u16 {
                let id = pair_id(u, v, 3);
                assert_eq!(p.degree(id), (g.degree(u) + 1) * (g.degree(v) + 1) - 1);
            }
        }
        // corner and center of the king grid
        assert_eq!(p.degree(pair_id(0, 0, 3)), 3);
        assert_eq!(p.degree(pair_id(1, 1, 3)), 8);
    }

    #[test]
    fn lexicographic_degree_identity() {
        let g = path(3).unwrap();
        let h = path(2).unwrap();
        let p = product(&g, &h, ProductKind::Lexicographic).unwrap();
        for u in 0..3u16 {
            for v in 0..2u16 {
                let id = pair_id(u, v, 2);
                assert_eq!(p.degree(id), h.n() * g.degree(u) + h.degree(v));
            }
        }
    }

    #[test]
    fn product_order_multiplies() {
        let g = cycle(3).unwrap();
        let h = path(4).unwrap();
        for kind in [
            ProductKind::Cartesian,
            ProductKind::Strong,
            ProductKind::Lexicographic,
        ] {
            assert_eq!(product(&g, &h, kind).unwrap().n(), 12);
        }
    }

    #[test]
    fn hypercube_is_iterated_cartesian_square() {
        let p2 = path(2).unwrap();
        let q2 = product(&p2, &p2, ProductKind::Cartesian).unwrap();
        let q3 = product(&q2, &p2, ProductKind::Cartesian).unwrap();
        let direct = crate::graphs::family::hypercube(3).unwrap();
        assert_eq!(q3.edges(), direct.edges());
    }
}
