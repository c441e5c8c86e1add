//! Independent oracle for the exact winning region: a deliberately naive
//! double fixpoint over explicitly enumerated states, using none of the
//! solver's machinery (no rank tables, no counter attractors, no reuse of
//! the joint-move symmetry). Compared state-by-state against the production
//! region on every connected board up to four vertices and a sample of
//! named larger boards.

use std::collections::{BTreeMap, BTreeSet};

use bodyguards_core::arena::{Arena, Mode, MoveTable, Turn};
use bodyguards_core::graphs::enumerate::labeled_graphs;
use bodyguards_core::graphs::family::{cycle, path, star};
use bodyguards_core::graphs::{Graph, Vertex};
use bodyguards_core::solver::{cobuchi_region, two_phase_region};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct RefState {
    tokens: Vec<Vertex>,
    president: Vertex,
    guards_move: bool,
}

fn multisets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, lo: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..n as Vertex {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Raw assignment product of token moves, deduplicated through a set.
fn guard_successors(g: &Graph, tokens: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut acc: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    acc.insert(Vec::new());
    for &t in tokens {
        let mut dests: Vec<Vertex> = g.neighbors(t).to_vec();
        dests.push(t);
        let mut next = BTreeSet::new();
        for prefix in &acc {
            for &d in &dests {
                let mut ms = prefix.clone();
                ms.push(d);
                ms.sort_unstable();
                next.insert(ms);
            }
        }
        acc = next;
    }
    acc
}

fn is_safe(g: &Graph, s: &RefState, mode: Mode) -> bool {
    if s.guards_move {
        return true;
    }
    let covered = |v: Vertex| s.tokens.contains(&v);
    g.neighbors(s.president).iter().all(|&u| covered(u))
        && match mode {
            Mode::Open => true,
            Mode::Closed => covered(s.president),
        }
}

fn successors(g: &Graph, s: &RefState) -> Vec<RefState> {
    if s.guards_move {
        guard_successors(g, &s.tokens)
            .into_iter()
            .map(|tokens| RefState {
                tokens,
                president: s.president,
                guards_move: false,
            })
            .collect()
    } else {
        let mut moves: Vec<Vertex> = g.neighbors(s.president).to_vec();
        moves.push(s.president);
        moves
            .into_iter()
            .map(|president| RefState {
                tokens: s.tokens.clone(),
                president,
                guards_move: true,
            })
            .collect()
    }
}

/// Textbook nested fixpoint, sets as BTreeSets, Pre evaluated by full scans.
fn reference_region(g: &Graph, k: usize, mode: Mode) -> BTreeSet<RefState> {
    let mut all: Vec<RefState> = Vec::new();
    for tokens in multisets(g.n(), k) {
        for president in 0..g.n() as Vertex {
            for guards_move in [true, false] {
                all.push(RefState {
                    tokens: tokens.clone(),
                    president,
                    guards_move,
                });
            }
        }
    }
    let succ: BTreeMap<RefState, Vec<RefState>> = all
        .iter()
        .map(|s| (s.clone(), successors(g, s)))
        .collect();
    let pre = |target: &BTreeSet<RefState>| -> BTreeSet<RefState> {
        all.iter()
            .filter(|s| {
                let next = &succ[*s];
                if s.guards_move {
                    next.iter().any(|t| target.contains(t))
                } else {
                    next.iter().all(|t| target.contains(t))
                }
            })
            .cloned()
            .collect()
    };

    let mut x: BTreeSet<RefState> = BTreeSet::new();
    loop {
        let a = pre(&x);
        // greatest fixpoint: start from everything, peel until stable
        let mut y: BTreeSet<RefState> = all.iter().cloned().collect();
        loop {
            let py = pre(&y);
            let y2: BTreeSet<RefState> = all
                .iter()
                .filter(|s| a.contains(*s) || (is_safe(g, s, mode) && py.contains(*s)))
                .cloned()
                .collect();
            if y2 == y {
                break;
            }
            y = y2;
        }
        if y == x {
            return y;
        }
        x = y;
    }
}

fn compare_regions(g: &Graph, k: usize, mode: Mode) {
    let arena = Arena::build(g.clone(), k, 1_000_000).unwrap();
    let moves = MoveTable::build(&arena, 1, 10_000_000).unwrap();
    let solver = cobuchi_region(&arena, &moves, mode);
    let reference = reference_region(g, k, mode);
    for id in 0..arena.state_count() as usize {
        let st = arena.state_of(id);
        let rs = RefState {
            tokens: st.placement.clone(),
            president: st.president,
            guards_move: st.turn == Turn::Bodyguards,
        };
        assert_eq!(
            solver.members.get(id),
            reference.contains(&rs),
            "region mismatch at {} on {:?} k={k} {mode:?}",
            st.key(),
            g
        );
    }
    // the under-approximation stays inside both
    let under = two_phase_region(&arena, &moves, mode);
    assert!(under.members.is_subset_of(&solver.members));
}

#[test]
fn solver_matches_reference_on_all_small_boards() {
    for n in 2..=4usize {
        for g in labeled_graphs(n, true) {
            for k in 1..=2usize {
                for mode in [Mode::Open, Mode::Closed] {
                    compare_regions(&g, k, mode);
                }
            }
        }
    }
}

#[test]
fn solver_matches_reference_on_named_boards() {
    compare_regions(&cycle(5).unwrap(), 2, Mode::Open);
    compare_regions(&cycle(6).unwrap(), 2, Mode::Open);
    compare_regions(&path(5).unwrap(), 2, Mode::Open);
    compare_regions(&star(4).unwrap(), 3, Mode::Open);
    compare_regions(&star(4).unwrap(), 3, Mode::Closed);
    compare_regions(&cycle(4).unwrap(), 3, Mode::Open);
}
