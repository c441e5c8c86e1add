//! Exhaustive enumeration of small labeled graphs and trees.
//!
//! Graphs are enumerated by edge-subset (2^C(n,2) bitmasks), trees by
//! decoding every length-(n-2) sequence over the labels. No isomorphism
//! reduction happens here; callers that want classes build their own keys.

use super::graph::{Graph, Vertex};

/// All labeled graphs on `n` vertices, optionally restricted to connected
/// ones. Intended for `n <= 7` or so (the count is `2^(n(n-1)/2)`).
pub fn labeled_graphs(n: usize, connected_only: bool) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 30, "edge-subset enumeration needs n <= 8");
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("enumerated edges are valid");
        if connected_only && !g.is_connected() {
            None
        } else {
            Some(g)
        }
    })
}

/// Decodes a Prüfer sequence over labels `0..n` into a tree edge list.
/// The sequence length must be `n - 2` with `n >= 2`.
pub fn tree_edges_from_pruefer(n: usize, seq: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut remaining = vec![1u32; n];
    for &s in seq {
        remaining[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr`/`leaf` walk the classic linear-time decoding.
    let mut ptr = 0usize;
    while remaining[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf as Vertex, s));
        remaining[s as usize] -= 1;
        if remaining[s as usize] == 1 && (s as usize) < ptr {
            leaf = s as usize;
        } else {
            ptr += 1;
            while remaining[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf as Vertex, (n - 1) as Vertex));
    edges
}

/// Leaf count of the tree a Prüfer sequence decodes to: exactly the labels
/// absent from the sequence. O(n), no edge construction.
pub fn pruefer_leaf_count(n: usize, seq: &[Vertex]) -> usize {
    let mut seen = vec![false; n];
    for &s in seq {
        seen[s as usize] = true;
    }
    seen.iter().filter(|&&b| !b).count()
}

/// Calls `f` on every labeled tree on `n >= 2` vertices, passing the Prüfer
/// sequence and its edge list. Visits `n^(n-2)` trees.
pub fn for_each_labeled_tree(n: usize, mut f: impl FnMut(&[Vertex], &[(Vertex, Vertex)])) {
    let len = n - 2;
    let mut seq = vec![0 as Vertex; len];
    loop {
        let edges = tree_edges_from_pruefer(n, &seq);
        f(&seq, &edges);
        // odometer increment
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (seq[i] as usize) + 1 < n {
                seq[i] += 1;
                break;
            }
            seq[i] = 0;
        }
    }
}
