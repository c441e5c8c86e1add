//! Memoryless strategy extraction from solved regions, and the region-guided
//! adversary used in playouts.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arena::{Arena, GameState, MoveTable, Turn};
use crate::graphs::Vertex;

use super::certificate::{GraphDoc, StrategyCertificate, CERTIFICATE_VERSION};
use super::{initial_win_placement, WinRegion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("region is empty or wins from no initial placement")]
    NoWinningPlacement,
    #[error("state is outside the winning region; no move is prescribed")]
    StateOutsideRegion,
    #[error("expected a {expected:?}-to-move state")]
    WrongTurn { expected: Turn },
}

/// Extracts the rank-descending positional strategy: at every guard-to-move
/// state of the region, the prescribed joint move minimizes the successor's
/// layer rank, breaking ties by smallest placement rank. Inside the core
/// that means staying in the core; outside it means strict progress toward
/// it through safe layers.
pub fn extract_strategy(
    arena: &Arena,
    moves: &MoveTable,
    region: &WinRegion,
) -> Result<StrategyCertificate, StrategyError> {
    let witness_rank = initial_win_placement(arena, region).ok_or(StrategyError::NoWinningPlacement)?;
    let n = arena.graph().n();
    let mut move_map = BTreeMap::new();
    for id in region.members.iter_ones() {
        let (prank, president, turn) = arena.decode_id(id);
        if turn != Turn::Bodyguards {
            continue;
        }
        let mut best: Option<(u32, u32)> = None; // (rank, successor placement rank)
        for &p2 in moves.successors(prank) {
            let succ = (p2 as u64 * n as u64 + president as u64) as usize * 2 + 1;
            if !region.members.get(succ) {
                continue;
            }
            let cand = (region.ranks[succ], p2);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        let (_, chosen) = best.expect("a region state always has a region successor");
        let state = GameState {
            placement: arena.codec().unrank(prank).expect("rank in range"),
            president,
            turn,
        };
        let target = arena.codec().unrank(chosen as u64).expect("rank in range");
        move_map.insert(state.key(), crate::arena::placement_key(&target));
    }
    let core_keys: Vec<String> = region
        .core
        .iter_ones()
        .map(|id| arena.state_of(id).key())
        .collect();
    let g = arena.graph();
    Ok(StrategyCertificate {
        version: CERTIFICATE_VERSION,
        graph: GraphDoc {
            n: g.n(),
            edges: g.edges(),
        },
        fingerprint: g.fingerprint(),
        k: arena.k(),
        mode: region.mode,
        method: region.method,
        witness_placement: arena
            .codec()
            .unrank(witness_rank)
            .expect("rank in range"),
        core: core_keys,
        moves: move_map,
    })
}

/// The evader's best answer at an evader-to-move state: escape the region if
/// possible, otherwise retreat to the successor with maximal layer rank
/// (slowest guard progress). Ties break toward the smallest vertex id.
pub fn best_response_president(
    arena: &Arena,
    region: &WinRegion,
    state: &GameState,
) -> Result<Vertex, StrategyError> {
    if state.turn != Turn::President {
        return Err(StrategyError::WrongTurn {
            expected: Turn::President,
        });
    }
    let prank = arena
        .codec()
        .rank(&state.placement)
        .map_err(|_| StrategyError::StateOutsideRegion)?;
    let n = arena.graph().n() as u64;
    let succ_id = |u: Vertex| (prank * n + u as u64) as usize * 2;
    for &u in arena.president_moves(state.president) {
        if !region.members.get(succ_id(u)) {
            return Ok(u);
        }
    }
    let mut best: Option<(u32, Vertex)> = None;
    for &u in arena.president_moves(state.president) {
        let rank = region.ranks[succ_id(u)];
        if best.is_none_or(|(r, _)| rank > r) {
            best = Some((rank, u));
        }
    }
    best.map(|(_, u)| u).ok_or(StrategyError::StateOutsideRegion)
}
