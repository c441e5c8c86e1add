//! Target-directed joint-move feasibility.
//!
//! Whether one placement can become another in a single joint move is a
//! bipartite transportation question: group tokens by source vertex and by
//! destination vertex with multiplicities, connect groups whose vertices are
//! within one closed neighbourhood, and ask for a saturating flow. This
//! never enumerates token permutations, so it stays cheap even when many
//! tokens share a vertex.

use crate::graphs::{Graph, Vertex};



/// True iff some token-to-token assignment moves `from` onto `to` with every
/// token staying inside its closed neighbourhood. Requires equal arity.
pub fn joint_move_feasible(g: &Graph, from: &[Vertex], to: &[Vertex]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    if from == to {
        return true;
    }
    let sources = group(from);
    let dests = group(to);
    // adjacency between groups: dest within N[source]
    let adj: Vec<Vec<usize>> = sources
        .iter()
        .map(|&(u, _)| {
            dests
                .iter()
                .enumerate()
                .filter(|(_, &(w, _))| u == w || g.has_edge(u, w))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    max_flow(&sources, &dests, &adj) == from.len()
}

/// Extracts one concrete assignment realizing a feasible joint move,
/// as pairs `(source_vertex, dest_vertex)` with multiplicity expanded.
/// Returns `None` when infeasible.
pub fn joint_move_assignment(
    g: &Graph,
    from: &[Vertex],
    to: &[Vertex],
) -> Option<Vec<(Vertex, Vertex)>> {
    if from.len() != to.len() {
        return None;
    }
    let sources = group(from);
    let dests = group(to);
    let adj: Vec<Vec<usize>> = sources
        .iter()
        .map(|&(u, _)| {
            dests
                .iter()
                .enumerate()
                .filter(|(_, &(w, _))| u == w || g.has_edge(u, w))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let (value, flow) = max_flow_with_plan(&sources, &dests, &adj);
    if value != from.len() {
        return None;
    }
    let mut out = Vec::with_capacity(from.len());
    for (i, &(u, _)) in sources.iter().enumerate() {
        for (j, &(w, _)) in dests.iter().enumerate() {
            for _ in 0..flow[i][j] {
                out.push((u, w));
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// `(vertex, multiplicity)` pairs of a sorted multiset.
fn group(tokens: &[Vertex]) -> Vec<(Vertex, usize)> {
    let mut out: Vec<(Vertex, usize)> = Vec::new();
    for &t in tokens {
        match out.last_mut() {
            Some((v, m)) if *v == t => *m += 1,
            _ => out.push((t, 1)),
        }
    }
    out
}

fn max_flow(sources: &[(Vertex, usize)], dests: &[(Vertex, usize)], adj: &[Vec<usize>]) -> usize {
    max_flow_with_plan(sources, dests, adj).0
}

/// Ford-Fulkerson over the group graph. Group counts are at most `k`, so the
/// augmenting-path search is tiny; capacities are the multiplicities.
fn max_flow_with_plan(
    sources: &[(Vertex, usize)],
    dests: &[(Vertex, usize)],
    adj: &[Vec<usize>],
) -> (usize, Vec<Vec<usize>>) {
    let ns = sources.len();
    let nd = dests.len();
    let mut flow = vec![vec![0usize; nd]; ns];
    let mut sent = vec![0usize; ns];
    let mut recv = vec![0usize; nd];
    let mut total = 0;

    loop {
        // BFS for an augmenting path from any unsaturated source group to any
        // unsaturated dest group through residual edges.
        let mut prev_s: Vec<Option<(usize, bool)>> = vec![None; ns]; // (dest, via_back_edge)
        let mut prev_d: Vec<Option<usize>> = vec![None; nd];
        let mut queue: std::collections::VecDeque<usize> = (0..ns)
            .filter(|&i| sent[i] < sources[i].1)
            .inspect(|&i| prev_s[i] = Some((usize::MAX, false)))
            .collect();
        let mut found = None;
        'bfs: while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if prev_d[j].is_none() {
                    prev_d[j] = Some(i);
                    if recv[j] < dests[j].1 {
                        found = Some(j);
                        break 'bfs;
                    }
                    // dest saturated: traverse back-edges to sources with flow
                    for i2 in 0..ns {
                        if flow[i2][j] > 0 && prev_s[i2].is_none() {
                            prev_s[i2] = Some((j, true));
                            queue.push_back(i2);
                        }
                    }
                }
            }
        }
        let Some(mut j) = found else {
            return (total, flow);
        };
        // augment by one unit along the alternating path
        loop {
            let i = prev_d[j].unwrap();
            flow[i][j] += 1;
            match prev_s[i].unwrap() {
                (_, false) => {
                    sent[i] += 1;
                    break;
                }
                (back_j, true) => {
                    flow[i][back_j] -= 1;
                    j = back_j;
                }
            }
        }
        recv[j] += 1;
        total += 1;
    }
}
