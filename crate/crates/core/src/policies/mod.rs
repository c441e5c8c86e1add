//! Scripted positional strategies and their exact verification.
//!
//! A policy fixes one side's behaviour as a pure function of the current
//! state. Fixing a side turns the game into a one-player graph over the
//! reachable states, where the other side ranges over *all* legal moves —
//! verification quantifies like the claims do, it never plays policy against
//! policy. Verdicts come from strongly-connected-component analysis:
//!
//! - a guard policy wins iff no reachable cycle contains an unsafe
//!   evader-to-move state;
//! - an evader policy evades iff no reachable cycle consists of safe states
//!   only (checked on the safe-induced subgraph).
//!
//! Failed verdicts carry a concrete witness cycle.

pub mod evaders;
pub mod guards;

use std::collections::HashMap;

use thiserror::Error;

use crate::arena::{
    joint_move_feasible, joint_successors, surrounded, GameState, Mode, Placement,
    PlacementCodec, RankError, Turn, DEFAULT_STATE_LIMIT,
};
use crate::graphs::{Graph, Vertex};
use crate::util::scc::{component_is_cyclic, tarjan_scc};

/// Guard-side policy: a fixed initial placement plus a positional joint move.
pub trait BodyguardPolicy {
    fn id(&self) -> &'static str;
    fn k(&self) -> usize;
    fn initial_placement(&self) -> Placement;
    /// Target placement from a guard-to-move state. Must be one legal joint
    /// move away; the verifier and playouts recheck that.
    fn step(&self, placement: &Placement, president: Vertex) -> Placement;
}

/// Evader-side policy: a placement-dependent start plus a positional move.
pub trait PresidentPolicy {
    fn id(&self) -> &'static str;
    fn initial_vertex(&self, placement: &Placement) -> Vertex;
    /// Destination vertex from an evader-to-move state; must lie in the
    /// evader's closed neighbourhood.
    fn step(&self, placement: &Placement, president: Vertex) -> Vertex;
}

#[derive(Debug, Error)]
pub enum PolicyError {
    #[error("policy `{policy}` is not applicable: {reason}")]
    Inapplicable { policy: &'static str, reason: String },
    #[error("policy `{policy}` expects k = {expected}, got {got}")]
    KMismatch {
        policy: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("policy returned an illegal move at step {step} from `{state}`: {detail}")]
    IllegalMove {
        step: usize,
        state: String,
        detail: String,
    },
    #[error("explored state count exceeded the limit {0}")]
    StateLimit(u64),
    #[error(transparent)]
    Rank(#[from] RankError),
}

#[derive(Debug, Clone)]
pub struct PolicyVerdict {
    /// For a guard policy: the guards win from the fixed start against every
    /// evader. For an evader policy: the evader survives every placement and
    /// every guard behaviour.
    pub holds: bool,
    /// On failure, one closed walk certifying it (first state repeats after
    /// the last). For guards it contains an unsafe state; for evaders it is
    /// entirely safe.
    pub witness_cycle: Option<Vec<GameState>>,
    pub explored_states: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct NodeKey {
    prank: u64,
    president: Vertex,
    turn: u8,
}

struct PlayGraph {
    placements: Vec<Placement>,
    presidents: Vec<Vertex>,
    turns: Vec<Turn>,
    adj: Vec<Vec<u32>>,
    unsafe_state: Vec<bool>,
}

impl PlayGraph {
    fn state_of(&self, id: u32) -> GameState {
        GameState {
            placement: self.placements[id as usize].clone(),
            president: self.presidents[id as usize],
            turn: self.turns[id as usize],
        }
    }
}

/// Explores the one-player graph induced by fixing one side.
/// `guard_move`: `Some` fixes the guards, `None` leaves them free.
/// `president_move`: symmetric.
#[allow(clippy::type_complexity)]
fn explore(
    g: &Graph,
    k: usize,
    mode: Mode,
    initial: Vec<(Placement, Vertex)>,
    guard_move: Option<&dyn Fn(&Placement, Vertex) -> Placement>,
    president_move: Option<&dyn Fn(&Placement, Vertex) -> Vertex>,
    state_limit: u64,
) -> Result<PlayGraph, PolicyError> {
    let codec = PlacementCodec::new(g.n(), k)?;
    let mut ids: HashMap<NodeKey, u32> = HashMap::new();
    let mut graph = PlayGraph {
        placements: Vec::new(),
        presidents: Vec::new(),
        turns: Vec::new(),
        adj: Vec::new(),
        unsafe_state: Vec::new(),
    };
    let mut work: Vec<u32> = Vec::new();

    let mut intern = |placement: Placement,
                      president: Vertex,
                      turn: Turn,
                      graph: &mut PlayGraph,
                      work: &mut Vec<u32>|
     -> Result<u32, PolicyError> {
        let key = NodeKey {
            prank: codec.rank(&placement)?,
            president,
            turn: turn.bit() as u8,
        };
        if let Some(&id) = ids.get(&key) {
            return Ok(id);
        }
        let id = graph.adj.len() as u32;
        if id as u64 >= state_limit {
            return Err(PolicyError::StateLimit(state_limit));
        }
        ids.insert(key, id);
        graph.unsafe_state.push(
            turn == Turn::President && !surrounded(g, &placement, president, mode),
        );
        graph.placements.push(placement);
        graph.presidents.push(president);
        graph.turns.push(turn);
        graph.adj.push(Vec::new());
        work.push(id);
        Ok(id)
    };

    for (placement, president) in initial {
        intern(placement, president, Turn::Bodyguards, &mut graph, &mut work)?;
    }

    let mut cursor = 0usize;
    while cursor < work.len() {
        let id = work[cursor];
        cursor += 1;
        let placement = graph.placements[id as usize].clone();
        let president = graph.presidents[id as usize];
        match graph.turns[id as usize] {
            Turn::Bodyguards => {
                let targets: Vec<Placement> = match guard_move {
                    Some(f) => {
                        let target = f(&placement, president);
                        if !joint_move_feasible(g, &placement, &target) {
                            return Err(PolicyError::IllegalMove {
                                step: cursor,
                                state: graph.state_of(id).key(),
                                detail: format!(
                                    "joint move to {} is infeasible",
                                    crate::arena::placement_key(&target)
                                ),
                            });
                        }
                        vec![target]
                    }
                    None => joint_successors(g, &placement),
                };
                for t in targets {
                    let succ = intern(t, president, Turn::President, &mut graph, &mut work)?;
                    graph.adj[id as usize].push(succ);
                }
            }
            Turn::President => {
                let moves: Vec<Vertex> = match president_move {
                    Some(f) => {
                        let u = f(&placement, president);
                        if u != president && !g.has_edge(president, u) {
                            return Err(PolicyError::IllegalMove {
                                step: cursor,
                                state: graph.state_of(id).key(),
                                detail: format!("vertex {u} is not a closed neighbour"),
                            });
                        }
                        vec![u]
                    }
                    None => {
                        let mut m = g.neighbors(president).to_vec();
                        m.push(president);
                        m
                    }
                };
                for u in moves {
                    let succ = intern(placement.clone(), u, Turn::Bodyguards, &mut graph, &mut work)?;
                    graph.adj[id as usize].push(succ);
                }
            }
        }
    }
    Ok(graph)
}

/// Any cycle inside the strongly connected component of `start`, beginning
/// and ending at `start`. `adj` must already realize the component relation.
fn cycle_through(adj: &[Vec<u32>], comp: &[u32], start: u32) -> Vec<u32> {
    let c = comp[start as usize];
    // DFS restricted to the component until an edge returns to start.
    let mut stack = vec![(start, 0usize)];
    let mut on_path = vec![false; adj.len()];
    on_path[start as usize] = true;
    while let Some(&mut (v, ref mut ei)) = stack.last_mut() {
        if *ei >= adj[v as usize].len() {
            on_path[v as usize] = false;
            stack.pop();
            continue;
        }
        let w = adj[v as usize][*ei];
        *ei += 1;
        if w == start {
            return stack.iter().map(|&(v, _)| v).collect();
        }
        if comp[w as usize] == c && !on_path[w as usize] {
            on_path[w as usize] = true;
            stack.push((w, 0));
        }
    }
    unreachable!("start lies in a cyclic component");
}

/// Verifies a guard policy: winning iff no reachable cycle contains an
/// unsafe evader-to-move state.
pub fn verify_bodyguard_policy(
    g: &Graph,
    k: usize,
    policy: &dyn BodyguardPolicy,
    mode: Mode,
) -> Result<PolicyVerdict, PolicyError> {
    verify_bodyguard_policy_limited(g, k, policy, mode, DEFAULT_STATE_LIMIT)
}

pub fn verify_bodyguard_policy_limited(
    g: &Graph,
    k: usize,
    policy: &dyn BodyguardPolicy,
    mode: Mode,
    state_limit: u64,
) -> Result<PolicyVerdict, PolicyError> {
    if policy.k() != k {
        return Err(PolicyError::KMismatch {
            policy: policy.id(),
            expected: policy.k(),
            got: k,
        });
    }
    let initial: Vec<(Placement, Vertex)> = (0..g.n() as Vertex)
        .map(|v| (policy.initial_placement(), v))
        .collect();
    let step = |p: &Placement, v: Vertex| policy.step(p, v);
    let graph = explore(g, k, mode, initial, Some(&step), None, state_limit)?;
    let (comp, count) = tarjan_scc(&graph.adj);
    for c in 0..count as u32 {
        let unsafe_member = (0..graph.adj.len())
            .find(|&v| comp[v] == c && graph.unsafe_state[v]);
        if let Some(start) = unsafe_member {
            if component_is_cyclic(&graph.adj, &comp, c) {
                let cycle = cycle_through(&graph.adj, &comp, start as u32);
                return Ok(PolicyVerdict {
                    holds: false,
                    witness_cycle: Some(cycle.into_iter().map(|v| graph.state_of(v)).collect()),
                    explored_states: graph.adj.len(),
                });
            }
        }
    }
    Ok(PolicyVerdict {
        holds: true,
        witness_cycle: None,
        explored_states: graph.adj.len(),
    })
}

/// Verifies an evader policy against all placements and all guard behaviour:
/// evading iff the safe-induced reachable subgraph is acyclic.
pub fn verify_president_policy(
    g: &Graph,
    k: usize,
    policy: &dyn PresidentPolicy,
    mode: Mode,
) -> Result<PolicyVerdict, PolicyError> {
    verify_president_policy_limited(g, k, policy, mode, DEFAULT_STATE_LIMIT)
}

pub fn verify_president_policy_limited(
    g: &Graph,
    k: usize,
    policy: &dyn PresidentPolicy,
    mode: Mode,
    state_limit: u64,
) -> Result<PolicyVerdict, PolicyError> {
    let codec = PlacementCodec::new(g.n(), k)?;
    let mut initial = Vec::with_capacity(codec.count() as usize);
    for prank in 0..codec.count() {
        let placement = codec.unrank(prank)?;
        let start = policy.initial_vertex(&placement);
        initial.push((placement, start));
    }
    let step = |p: &Placement, v: Vertex| policy.step(p, v);
    let graph = explore(g, k, mode, initial, None, Some(&step), state_limit)?;
    // Restrict to safe states; any cycle there is a guard win.
    let safe_adj: Vec<Vec<u32>> = (0..graph.adj.len())
        .map(|v| {
            if graph.unsafe_state[v] {
                Vec::new()
            } else {
                graph.adj[v]
                    .iter()
                    .copied()
                    .filter(|&w| !graph.unsafe_state[w as usize])
                    .collect()
            }
        })
        .collect();
    let (comp, count) = tarjan_scc(&safe_adj);
    for c in 0..count as u32 {
        if component_is_cyclic(&safe_adj, &comp, c) {
            let start = (0..safe_adj.len()).find(|&v| comp[v] == c).unwrap() as u32;
            let cycle = cycle_through(&safe_adj, &comp, start);
            return Ok(PolicyVerdict {
                holds: false,
                witness_cycle: Some(cycle.into_iter().map(|v| graph.state_of(v)).collect()),
                explored_states: graph.adj.len(),
            });
        }
    }
    Ok(PolicyVerdict {
        holds: true,
        witness_cycle: None,
        explored_states: graph.adj.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// A state repeated; the field is the index of its first occurrence.
    Lasso { loop_start: usize },
    StepBudget,
}

#[derive(Debug, Clone)]
pub struct Playout {
    pub states: Vec<GameState>,
    /// One flag per evader-to-move state visited, in order: was that
    /// configuration surrounded?
    pub surround_flags: Vec<bool>,
    pub termination: Termination,
}

/// Deterministic alternating simulation of two policies. Stops at the first
/// repeated state or after `max_steps` moves, whichever comes first.
pub fn playout(
    g: &Graph,
    guards: &dyn BodyguardPolicy,
    president: &dyn PresidentPolicy,
    mode: Mode,
    max_steps: usize,
) -> Result<Playout, PolicyError> {
    let mut seen: HashMap<GameState, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut flags = Vec::new();
    let placement = guards.initial_placement();
    let start = president.initial_vertex(&placement);
    let mut current = GameState {
        placement,
        president: start,
        turn: Turn::Bodyguards,
    };
    loop {
        if let Some(&first) = seen.get(&current) {
            return Ok(Playout {
                states,
                surround_flags: flags,
                termination: Termination::Lasso { loop_start: first },
            });
        }
        seen.insert(current.clone(), states.len());
        states.push(current.clone());
        if states.len() > max_steps {
            return Ok(Playout {
                states,
                surround_flags: flags,
                termination: Termination::StepBudget,
            });
        }
        current = match current.turn {
            Turn::Bodyguards => {
                let target = guards.step(&current.placement, current.president);
                if !joint_move_feasible(g, &current.placement, &target) {
                    return Err(PolicyError::IllegalMove {
                        step: states.len() - 1,
                        state: current.key(),
                        detail: format!(
                            "joint move to {} is infeasible",
                            crate::arena::placement_key(&target)
                        ),
                    });
                }
                let next = GameState {
                    placement: target,
                    president: current.president,
                    turn: Turn::President,
                };
                flags.push(surrounded(g, &next.placement, next.president, mode));
                next
            }
            Turn::President => {
                let u = president.step(&current.placement, current.president);
                if u != current.president && !g.has_edge(current.president, u) {
                    return Err(PolicyError::IllegalMove {
                        step: states.len() - 1,
                        state: current.key(),
                        detail: format!("vertex {u} is not a closed neighbour"),
                    });
                }
                GameState {
                    placement: current.placement,
                    president: u,
                    turn: Turn::Bodyguards,
                }
            }
        };
    }
}
