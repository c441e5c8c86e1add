//! Exact winning regions for the eventually-always-surround objective.
//!
//! Unsafe states are exactly the evader-to-move states that are not
//! surrounded: those mark ends of guard turns. The guards win a play iff it
//! visits unsafe states only finitely often. The exact region is the nested
//! fixpoint
//!
//! ```text
//!   μX. νY. ( Pre(X) ∪ (Safe ∩ Pre(Y)) )
//! ```
//!
//! with `Pre` the guard-controlled predecessor. The inner ν is computed as
//! the complement of an evader attractor restricted away from `Pre(X)`, so
//! each outer round costs one backward pass. The cheaper two-phase method —
//! guard attractor to the eternal core — is a sound under-approximation and
//! is *not* assumed equal to the exact region; callers comparing the two
//! report any gap instead of asserting it away.

mod certificate;
mod copnumber;
mod strategy;

pub use certificate::{verify_certificate, CertificateError, CertificateReport, StrategyCertificate};
pub use copnumber::cop_number;
pub use strategy::{best_response_president, extract_strategy, StrategyError};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arena::{
    Arena, ArenaError, Mode, MoveTable, Placement, Turn, DEFAULT_MOVE_LIMIT, DEFAULT_STATE_LIMIT,
};
use crate::graphs::{Graph, Vertex};
use crate::util::BitVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "exact-cobuchi")]
    Exact,
    #[serde(rename = "two-phase")]
    TwoPhase,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub mode: Mode,
    pub method: Method,
    pub state_limit: u64,
    pub move_limit: u64,
    pub workers: usize,
    /// Declare a loss without solving when `k` cannot cover a maximum-degree
    /// neighbourhood. Property tests that want the bound to emerge from the
    /// fixpoint itself turn this off.
    pub degree_prune: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: Mode::Open,
            method: Method::Exact,
            state_limit: DEFAULT_STATE_LIMIT,
            move_limit: DEFAULT_MOVE_LIMIT,
            workers: 1,
            degree_prune: true,
        }
    }
}

impl SolveOptions {
    pub fn with_mode(mode: Mode) -> Self {
        SolveOptions {
            mode,
            ..Default::default()
        }
    }
}

/// A solved region: membership plus the layer index each state first joined
/// at (`0` = outside). Layer 1 is the eternal core for both methods, so
/// rank-descending play heads toward the maintain phase.
#[derive(Debug, Clone)]
pub struct WinRegion {
    pub mode: Mode,
    pub method: Method,
    pub members: BitVec,
    pub ranks: Vec<u32>,
    pub core: BitVec,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Arena(#[from] ArenaError),
}

/// Guard-to-move states are always safe (nothing is checked mid-turn);
/// evader-to-move states are safe iff surrounded under `mode`.
pub fn safe_set(arena: &Arena, mode: Mode) -> BitVec {
    let g = arena.graph();
    let n = g.n();
    let words = g.words_per_row();
    let mut safe = BitVec::zeros(arena.state_count() as usize);
    let mut tokens: Placement = Vec::with_capacity(arena.k());
    let mut occ = vec![0u64; words];
    for prank in 0..arena.placement_count() {
        arena.codec().unrank_into(prank, &mut tokens);
        occ.iter_mut().for_each(|w| *w = 0);
        for &t in &tokens {
            occ[t as usize / 64] |= 1 << (t as usize % 64);
        }
        for v in 0..n as Vertex {
            safe.set(arena.state_id(prank, v, Turn::Bodyguards), true);
            let row = g.neighbor_row(v);
            let covered = row.iter().zip(&occ).all(|(nbr, o)| nbr & !o == 0)
                && match mode {
                    Mode::Open => true,
                    Mode::Closed => occ[v as usize / 64] >> (v as usize % 64) & 1 == 1,
                };
            if covered {
                safe.set(arena.state_id(prank, v, Turn::President), true);
            }
        }
    }
    safe
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Bodyguards,
    President,
}

/// Alternating-reachability attractor for `side`, counter-based, by BFS
/// layers. `ranks[s]` is `layer + 1` when `s` joined (seeds get 1, outside
/// stays 0), which is deterministic regardless of traversal order. States in
/// `avoid` never join.
fn attract(
    arena: &Arena,
    moves: &MoveTable,
    seeds: &BitVec,
    side: Side,
    avoid: Option<&BitVec>,
) -> (BitVec, Vec<u32>) {
    let states = arena.state_count() as usize;
    let n = arena.graph().n();
    let mut inset = seeds.clone();
    let mut ranks = vec![0u32; states];
    // Out-degree counters for the universal player's states.
    let mut counter = vec![0u32; states];
    for (id, slot) in counter.iter_mut().enumerate() {
        let (prank, v, turn) = arena.decode_id(id);
        *slot = match (side, turn) {
            (Side::Bodyguards, Turn::President) => arena.president_moves(v).len() as u32,
            (Side::President, Turn::Bodyguards) => moves.successors(prank).len() as u32,
            _ => 0,
        };
    }

    let mut frontier: Vec<usize> = inset.iter_ones().collect();
    for &s in &frontier {
        ranks[s] = 1;
    }
    let mut layer = 1u32;
    let mut next: Vec<usize> = Vec::new();
    while !frontier.is_empty() {
        next.clear();
        for &s in &frontier {
            let (prank, v, turn) = arena.decode_id(s);
            match turn {
                Turn::President => {
                    // predecessors are guard states over the same evader
                    // vertex; joint moves are symmetric, so the successor row
                    // of this placement is also its predecessor row
                    for &p2 in moves.successors(prank) {
                        let q = (p2 as u64 * n as u64 + v as u64) as usize * 2;
                        if inset.get(q) || avoid.is_some_and(|a| a.get(q)) {
                            continue;
                        }
                        let joins = match side {
                            Side::Bodyguards => true,
                            Side::President => {
                                counter[q] -= 1;
                                counter[q] == 0
                            }
                        };
                        if joins {
                            inset.set(q, true);
                            ranks[q] = layer + 1;
                            next.push(q);
                        }
                    }
                }
                Turn::Bodyguards => {
                    for &u in arena.president_moves(v) {
                        let q = (prank * n as u64 + u as u64) as usize * 2 + 1;
                        if inset.get(q) || avoid.is_some_and(|a| a.get(q)) {
                            continue;
                        }
                        let joins = match side {
                            Side::President => true,
                            Side::Bodyguards => {
                                counter[q] -= 1;
                                counter[q] == 0
                            }
                        };
                        if joins {
                            inset.set(q, true);
                            ranks[q] = layer + 1;
                            next.push(q);
                        }
                    }
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        layer += 1;
    }
    (inset, ranks)
}

/// Guard attractor: states from which the guards force the play into
/// `target`. `attractor(∅) = ∅` and `attractor(V) = V`.
pub fn attractor(arena: &Arena, moves: &MoveTable, target: &BitVec) -> BitVec {
    attract(arena, moves, target, Side::Bodyguards, None).0
}

pub fn attractor_ranked(arena: &Arena, moves: &MoveTable, target: &BitVec) -> (BitVec, Vec<u32>) {
    attract(arena, moves, target, Side::Bodyguards, None)
}

/// Greatest set of states from which the guards keep every future
/// evader-to-move configuration surrounded: `νY. Safe ∩ Pre(Y)`, computed as
/// the complement of the evader's attractor to the unsafe states.
pub fn eternal_core(arena: &Arena, moves: &MoveTable, mode: Mode) -> BitVec {
    let safe = safe_set(arena, mode);
    let states = arena.state_count() as usize;
    let mut unsafe_seeds = BitVec::zeros(states);
    for s in 0..states {
        if !safe.get(s) {
            unsafe_seeds.set(s, true);
        }
    }
    let (bad, _) = attract(arena, moves, &unsafe_seeds, Side::President, None);
    let mut core = BitVec::zeros(states);
    for s in 0..states {
        if !bad.get(s) {
            core.set(s, true);
        }
    }
    core
}

/// One-step guard-controlled predecessor of `x`.
fn cpre_bodyguards(arena: &Arena, moves: &MoveTable, x: &BitVec) -> BitVec {
    let n = arena.graph().n();
    let mut out = BitVec::zeros(arena.state_count() as usize);
    for prank in 0..arena.placement_count() {
        let row = moves.successors(prank);
        for v in 0..n as Vertex {
            let b_id = arena.state_id(prank, v, Turn::Bodyguards);
            if row
                .iter()
                .any(|&p2| x.get((p2 as u64 * n as u64 + v as u64) as usize * 2 + 1))
            {
                out.set(b_id, true);
            }
            let p_id = b_id + 1;
            if arena
                .president_moves(v)
                .iter()
                .all(|&u| x.get((prank * n as u64 + u as u64) as usize * 2))
            {
                out.set(p_id, true);
            }
        }
    }
    out
}

/// Exact region for the eventually-always objective via the nested fixpoint.
pub fn cobuchi_region(arena: &Arena, moves: &MoveTable, mode: Mode) -> WinRegion {
    let states = arena.state_count() as usize;
    let safe = safe_set(arena, mode);
    let mut x = BitVec::zeros(states);
    let mut ranks = vec![0u32; states];
    let mut core = BitVec::zeros(states);
    let mut round = 0u32;
    loop {
        round += 1;
        let a = cpre_bodyguards(arena, moves, &x);
        // ¬Y = μZ. ¬A ∧ (¬Safe ∨ PreEvader(Z)), an evader attractor to the
        // unsafe non-A states that never enters A.
        let mut seeds = BitVec::zeros(states);
        for s in 0..states {
            if !safe.get(s) && !a.get(s) {
                seeds.set(s, true);
            }
        }
        let (bad, _) = attract(arena, moves, &seeds, Side::President, Some(&a));
        let mut y = BitVec::zeros(states);
        for s in 0..states {
            if !bad.get(s) {
                y.set(s, true);
            }
        }
        if round == 1 {
            core = y.clone();
        }
        if y == x {
            return WinRegion {
                mode,
                method: Method::Exact,
                members: y,
                ranks,
                core,
            };
        }
        for s in y.iter_ones() {
            if ranks[s] == 0 {
                ranks[s] = round;
            }
        }
        x = y;
    }
}

/// Sound under-approximation: guard attractor to the eternal core.
pub fn two_phase_region(arena: &Arena, moves: &MoveTable, mode: Mode) -> WinRegion {
    let core = eternal_core(arena, moves, mode);
    let (members, ranks) = attract(arena, moves, &core, Side::Bodyguards, None);
    WinRegion {
        mode,
        method: Method::TwoPhase,
        members,
        ranks,
        core,
    }
}

pub fn solve_region(arena: &Arena, moves: &MoveTable, mode: Mode, method: Method) -> WinRegion {
    match method {
        Method::Exact => cobuchi_region(arena, moves, mode),
        Method::TwoPhase => two_phase_region(arena, moves, mode),
    }
}

/// Smallest placement rank that wins against every evader start, if any.
/// Guards act first from the setup, so the tested states are guard-to-move.
pub fn initial_win_placement(arena: &Arena, region: &WinRegion) -> Option<u64> {
    let n = arena.graph().n();
    (0..arena.placement_count()).find(|&prank| {
        (0..n as Vertex).all(|v| region.members.get(arena.state_id(prank, v, Turn::Bodyguards)))
    })
}

/// How the evader defeats an insufficient token count.
#[derive(Debug, Clone)]
pub enum Refutation {
    /// Fewer tokens than a maximum-degree neighbourhood needs; parking there
    /// wins without any search.
    ParkAtMaxDegree(Vertex),
    /// Placement-indexed escape answers read off the solved region.
    Region(RegionRefutation),
}

#[derive(Debug, Clone)]
pub struct RegionRefutation {
    n: usize,
    members: BitVec,
}

impl RegionRefutation {
    /// An evader start defeating `prank`, if one exists (always does when the
    /// overall verdict was a loss for a specific placement outside the
    /// region's win set).
    pub fn escape_vertex(&self, prank: u64) -> Option<Vertex> {
        (0..self.n as Vertex)
            .find(|&v| !self.members.get((prank * self.n as u64 + v as u64) as usize * 2))
    }
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub win: bool,
    pub witness: Option<Placement>,
    pub refutation: Option<Refutation>,
}

/// Lowest token count that can possibly win under `mode`: covering a
/// maximum-degree neighbourhood needs `Δ` tokens, plus one for the evader's
/// own vertex in the closed variant.
pub fn degree_lower_bound(g: &Graph, mode: Mode) -> usize {
    match mode {
        Mode::Open => g.max_degree(),
        Mode::Closed => {
            if g.n() == 0 {
                0
            } else {
                g.max_degree() + 1
            }
        }
    }
}

pub fn decide(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Decision, SolveError> {
    if g.n() == 0 {
        // No evader start to defend against.
        return Ok(Decision {
            win: true,
            witness: (k == 0).then(Vec::new),
            refutation: None,
        });
    }
    if opts.degree_prune && k < degree_lower_bound(g, opts.mode) {
        let (degs, max) = g.degree_profile();
        let v = degs.iter().position(|&d| d == max).unwrap() as Vertex;
        return Ok(Decision {
            win: false,
            witness: None,
            refutation: Some(Refutation::ParkAtMaxDegree(v)),
        });
    }
    let arena = Arena::build(g.clone(), k, opts.state_limit)?;
    let moves = MoveTable::build(&arena, opts.workers, opts.move_limit)?;
    let region = solve_region(&arena, &moves, opts.mode, opts.method);
    match initial_win_placement(&arena, &region) {
        Some(prank) => Ok(Decision {
            win: true,
            witness: Some(arena.codec().unrank(prank).expect("rank in range")),
            refutation: None,
        }),
        None => Ok(Decision {
            win: false,
            witness: None,
            refutation: Some(Refutation::Region(RegionRefutation {
                n: g.n(),
                members: region.members,
            })),
        }),
    }
}

#[derive(Debug, Error)]
pub enum NumberError {
    #[error("resource limit at k = {k}; value lies in [{lo}, {hi}]: {source}")]
    Limit {
        k: usize,
        lo: usize,
        hi: usize,
        #[source]
        source: SolveError,
    },
    #[error("search exhausted without a winning k (internal invariant broken)")]
    Exhausted,
}

/// Least `k` such that `k` guards win on `g` under the options' mode.
/// Searches upward from the degree bound (or from 0 when pruning is off so
/// the bound can be observed rather than assumed).
pub fn bodyguard_number(g: &Graph, opts: &SolveOptions) -> Result<usize, NumberError> {
    let upper = match opts.mode {
        Mode::Open => g.n().saturating_sub(1),
        Mode::Closed => g.n(),
    };
    let start = if opts.degree_prune {
        degree_lower_bound(g, opts.mode)
    } else {
        0
    };
    for k in start..=upper {
        match decide(g, k, opts) {
            Ok(d) if d.win => return Ok(k),
            Ok(_) => {}
            Err(source) => {
                return Err(NumberError::Limit {
                    k,
                    lo: k,
                    hi: upper,
                    source,
                })
            }
        }
    }
    if g.n() == 0 {
        return Ok(0);
    }
    Err(NumberError::Exhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::family::{complete, complete_multipartite, cycle, path, star, tree_from_edges, wheel};
    use crate::graphs::Graph;

    fn arena_and_moves(g: &Graph, k: usize) -> (Arena, MoveTable) {
        let arena = Arena::build(g.clone(), k, DEFAULT_STATE_LIMIT).unwrap();
        let moves = MoveTable::build(&arena, 1, DEFAULT_MOVE_LIMIT).unwrap();
        (arena, moves)
    }

    #[test]
    fn safe_set_cases() {
        let c4 = cycle(4).unwrap();
        let (arena, _) = arena_and_moves(&c4, 2);
        let safe = safe_set(&arena, Mode::Open);
        let surrounded_id = arena.state_id(
            arena.codec().rank(&[1, 3]).unwrap(),
            0,
            Turn::President,
        );
        assert!(safe.get(surrounded_id));
        let uncovered_id = arena.state_id(
            arena.codec().rank(&[0, 1]).unwrap(),
            0,
            Turn::President,
        );
        assert!(!safe.get(uncovered_id));
        // every guard-to-move state is safe
        for id in 0..arena.state_count() as usize {
            if id % 2 == 0 {
                assert!(safe.get(id));
            }
        }
    }

    #[test]
    fn attractor_trivial_cases() {
        let (arena, moves) = arena_and_moves(&cycle(5).unwrap(), 2);
        let states = arena.state_count() as usize;
        assert_eq!(attractor(&arena, &moves, &BitVec::zeros(states)).count_ones(), 0);
        assert_eq!(
            attractor(&arena, &moves, &BitVec::ones(states)).count_ones(),
            states
        );
    }

    #[test]
    fn mirror_maintenance_on_a_square() {
        let (arena, moves) = arena_and_moves(&cycle(4).unwrap(), 2);
        let core = eternal_core(&arena, &moves, Mode::Open);
        let id = arena.state_id(arena.codec().rank(&[1, 3]).unwrap(), 0, Turn::President);
        assert!(core.get(id));
    }

    #[test]
    fn hexagon_core_exists_but_is_unreachable() {
        // Two tokens can hold a surround on any cycle by mirroring the
        // evader's rotation, so the core is nonempty even on C_6 — what fails
        // there is reaching it from a fresh setup.
        let (arena, moves) = arena_and_moves(&cycle(6).unwrap(), 2);
        let core = eternal_core(&arena, &moves, Mode::Open);
        let mirror = arena.state_id(arena.codec().rank(&[1, 5]).unwrap(), 0, Turn::President);
        assert!(core.get(mirror));
        let exact = cobuchi_region(&arena, &moves, Mode::Open);
        let two_phase = two_phase_region(&arena, &moves, Mode::Open);
        assert!(initial_win_placement(&arena, &exact).is_none());
        assert!(initial_win_placement(&arena, &two_phase).is_none());
    }

    #[test]
    fn five_cycle_initial_states_reach_core() {
        let (arena, moves) = arena_and_moves(&cycle(5).unwrap(), 2);
        let core = eternal_core(&arena, &moves, Mode::Open);
        let attr = attractor(&arena, &moves, &core);
        let region = cobuchi_region(&arena, &moves, Mode::Open);
        // two-phase is a sound under-approximation of exact
        assert!(attr.is_subset_of(&region.members));
        // on the pentagon every guard-to-move setup state is already in the
        // attractor of the core, whatever the placement
        for prank in 0..arena.placement_count() {
            for v in 0..5 {
                assert!(attr.get(arena.state_id(prank, v, Turn::Bodyguards)));
            }
        }
        // some placement wins against every start, via either method
        let two_phase = two_phase_region(&arena, &moves, Mode::Open);
        assert!(initial_win_placement(&arena, &two_phase).is_some());
        assert!(initial_win_placement(&arena, &region).is_some());
    }

    #[test]
    fn single_token_wins_only_on_an_edge() {
        let d = decide(&path(2).unwrap(), 1, &SolveOptions::default()).unwrap();
        assert!(d.win);
        assert_eq!(d.witness, Some(vec![0]));
        let d = decide(&path(3).unwrap(), 1, &SolveOptions::default()).unwrap();
        assert!(!d.win);
    }

    #[test]
    fn cycle_decisions() {
        let opts = SolveOptions::default();
        assert!(decide(&cycle(5).unwrap(), 2, &opts).unwrap().win);
        assert!(!decide(&cycle(6).unwrap(), 2, &opts).unwrap().win);
        assert!(decide(&cycle(6).unwrap(), 3, &opts).unwrap().win);
    }

    #[test]
    fn complete_graph_needs_all_but_one() {
        let opts = SolveOptions::default();
        let d = decide(&complete(4).unwrap(), 2, &opts).unwrap();
        assert!(!d.win);
        assert!(matches!(
            d.refutation,
            Some(Refutation::ParkAtMaxDegree(_))
        ));
        assert!(decide(&complete(4).unwrap(), 3, &opts).unwrap().win);
        assert_eq!(bodyguard_number(&complete(4).unwrap(), &opts).unwrap(), 3);
    }

    #[test]
    fn prune_agrees_with_search() {
        let opts_pruned = SolveOptions::default();
        let opts_raw = SolveOptions {
            degree_prune: false,
            ..Default::default()
        };
        for g in [
            cycle(5).unwrap(),
            path(4).unwrap(),
            star(4).unwrap(),
            complete(4).unwrap(),
        ] {
            assert_eq!(
                bodyguard_number(&g, &opts_pruned).unwrap(),
                bodyguard_number(&g, &opts_raw).unwrap(),
                "prune changed the answer on {g:?}"
            );
        }
    }

    #[test]
    fn known_family_values() {
        let opts = SolveOptions::default();
        // edgeless boards need no tokens
        assert_eq!(bodyguard_number(&Graph::edgeless(4), &opts).unwrap(), 0);
        assert_eq!(bodyguard_number(&path(2).unwrap(), &opts).unwrap(), 1);
        assert_eq!(bodyguard_number(&path(6).unwrap(), &opts).unwrap(), 2);
        assert_eq!(bodyguard_number(&cycle(4).unwrap(), &opts).unwrap(), 2);
        assert_eq!(bodyguard_number(&cycle(7).unwrap(), &opts).unwrap(), 3);
        assert_eq!(bodyguard_number(&star(4).unwrap(), &opts).unwrap(), 3);
        assert_eq!(bodyguard_number(&wheel(6).unwrap(), &opts).unwrap(), 5);
        assert_eq!(
            bodyguard_number(&complete_multipartite(&[2, 3]).unwrap(), &opts).unwrap(),
            3
        );
        // double star: four leaves
        let t = tree_from_edges(&[(0, 1), (1, 2), (1, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(bodyguard_number(&t, &opts).unwrap(), 4);
    }

    #[test]
    fn closed_variant_squeezes_by_at_most_one() {
        let open = SolveOptions::default();
        let closed = SolveOptions::with_mode(Mode::Closed);
        for g in [path(3).unwrap(), cycle(4).unwrap(), cycle(5).unwrap(), star(4).unwrap()] {
            let b = bodyguard_number(&g, &open).unwrap();
            let bc = bodyguard_number(&g, &closed).unwrap();
            assert!(b <= bc && bc <= b + 1, "sandwich failed on {g:?}: {b} vs {bc}");
        }
        // single vertex: open mode vacuous, closed needs the token
        let k1 = path(1).unwrap();
        assert_eq!(bodyguard_number(&k1, &open).unwrap(), 0);
        assert_eq!(bodyguard_number(&k1, &closed).unwrap(), 1);
    }

    #[test]
    fn refutation_answers_every_placement() {
        let g = cycle(6).unwrap();
        let d = decide(&g, 2, &SolveOptions::default()).unwrap();
        let Some(Refutation::Region(r)) = &d.refutation else {
            panic!("expected a region refutation");
        };
        let codec = crate::arena::PlacementCodec::new(6, 2).unwrap();
        for prank in 0..codec.count() {
            assert!(r.escape_vertex(prank).is_some());
        }
    }

    #[test]
    fn state_limit_reported_with_bracket() {
        let opts = SolveOptions {
            state_limit: 50,
            ..Default::default()
        };
        let err = bodyguard_number(&cycle(6).unwrap(), &opts).unwrap_err();
        match err {
            NumberError::Limit { lo, hi, .. } => {
                assert!(lo <= hi);
                assert_eq!(hi, 5);
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn degree_bound_emerges_without_pruning() {
        // With the prune disabled the search starts at k = 0, so the bound
        // is observed from raw fixpoints rather than assumed.
        let raw = SolveOptions {
            degree_prune: false,
            ..Default::default()
        };
        let mut boards: Vec<Graph> = crate::graphs::enumerate::labeled_graphs(4, true).collect();
        boards.extend([
            cycle(5).unwrap(),
            star(5).unwrap(),
            wheel(5).unwrap(),
            complete_multipartite(&[2, 3]).unwrap(),
        ]);
        for g in boards {
            let b = bodyguard_number(&g, &raw).unwrap();
            assert!(
                b >= g.max_degree(),
                "value {} under max degree {} on {:?}",
                b,
                g.max_degree(),
                g
            );
        }
    }

    #[test]
    fn monotone_in_token_count_small_boards() {
        let opts = SolveOptions::default();
        for g in [path(4).unwrap(), cycle(5).unwrap(), star(4).unwrap()] {
            let mut seen_win = false;
            for k in 0..g.n() {
                let win = decide(&g, k, &opts).unwrap().win;
                if seen_win {
                    assert!(win, "win is not monotone in k on {g:?}");
                }
                seen_win |= win;
            }
        }
    }
}
