//! Exportable strategy certificates and their standalone checker.
//!
//! A certificate carries the board, a witness initial placement, the core
//! membership, and one prescribed joint move per covered guard-to-move
//! state. `verify_certificate` re-establishes the winning claim without
//! re-solving: move legality by matching feasibility (an independent route
//! from the generator's enumeration), closure of the covered set, surround
//! checks inside the core, and absence of reachable cycles through unsafe
//! states in the strategy-fixed play graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arena::{
    joint_move_feasible, parse_placement_key, surrounded, GameState, Mode,
    Placement, PlacementCodec, Turn,
};
use crate::graphs::{Graph, GraphError, Vertex};
use crate::util::scc::{component_is_cyclic, tarjan_scc};

use super::Method;

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategyCertificate {
    pub version: u32,
    pub graph: GraphDoc,
    pub fingerprint: String,
    pub k: usize,
    pub mode: Mode,
    pub method: Method,
    pub witness_placement: Placement,
    /// State keys of the eternal-core membership.
    pub core: Vec<String>,
    /// Guard-to-move state key → prescribed successor placement key.
    pub moves: std::collections::BTreeMap<String, String>,
}

impl StrategyCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("unsupported certificate version {0}")]
    Version(u32),
    #[error("embedded graph is invalid: {0}")]
    Graph(#[from] GraphError),
    #[error("fingerprint mismatch: stated {stated}, computed {computed}")]
    Fingerprint { stated: String, computed: String },
    #[error("unparseable state key `{0}`")]
    BadKey(String),
    #[error("state key `{0}` does not match the certificate's k or board")]
    KeyOutOfRange(String),
    #[error("illegal prescribed move at `{state}` -> {target}")]
    IllegalMove { state: String, target: String },
    #[error("strategy leaves the covered set: `{state}` reaches uncovered `{missing}`")]
    ClosureViolation { state: String, missing: String },
    #[error("witness placement does not cover evader start {president}")]
    WitnessGap { president: Vertex },
    #[error("core state `{0}` is not surrounded")]
    CoreUnsafe(String),
    #[error("core is not closed: `{state}` leaves it via `{successor}`")]
    CoreEscape { state: String, successor: String },
    #[error("strategy admits a cycle through unsafe state `{0}`")]
    UnsafeCycle(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub covered_states: usize,
    pub core_states: usize,
    pub play_graph_nodes: usize,
}

/// Node of the strategy-fixed play graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    prank: u64,
    president: Vertex,
    turn: u8,
}

pub fn verify_certificate(cert: &StrategyCertificate) -> Result<CertificateReport, CertificateError> {
    if cert.version != CERTIFICATE_VERSION {
        return Err(CertificateError::Version(cert.version));
    }
    let g = Graph::from_edges(cert.graph.n, &cert.graph.edges)?;
    let computed = g.fingerprint();
    if computed != cert.fingerprint {
        return Err(CertificateError::Fingerprint {
            stated: cert.fingerprint.clone(),
            computed,
        });
    }
    let codec = PlacementCodec::new(g.n(), cert.k)
        .map_err(|_| CertificateError::KeyOutOfRange("placement space".into()))?;
    let rank_of = |tokens: &[Vertex], key: &str| -> Result<u64, CertificateError> {
        codec
            .rank(tokens)
            .map_err(|_| CertificateError::KeyOutOfRange(key.to_string()))
    };

    // Parse and index the covered guard states and their prescribed targets.
    let mut node_ids: HashMap<Node, u32> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut intern = |node: Node, nodes: &mut Vec<Node>| -> u32 {
        *node_ids.entry(node).or_insert_with(|| {
            nodes.push(node);
            (nodes.len() - 1) as u32
        })
    };

    struct Entry {
        state: GameState,
        prank: u64,
        target: Placement,
        target_rank: u64,
    }
    let mut entries: Vec<Entry> = Vec::new();
    for (key, target_key) in &cert.moves {
        let state =
            GameState::parse_key(key).ok_or_else(|| CertificateError::BadKey(key.clone()))?;
        if state.turn != Turn::Bodyguards
            || state.placement.len() != cert.k
            || state.president as usize >= g.n()
        {
            return Err(CertificateError::KeyOutOfRange(key.clone()));
        }
        let target = parse_placement_key(target_key)
            .ok_or_else(|| CertificateError::BadKey(target_key.clone()))?;
        let prank = rank_of(&state.placement, key)?;
        let target_rank = rank_of(&target, target_key)?;
        if !joint_move_feasible(&g, &state.placement, &target) {
            return Err(CertificateError::IllegalMove {
                state: key.clone(),
                target: target_key.clone(),
            });
        }
        entries.push(Entry {
            state,
            prank,
            target,
            target_rank,
        });
    }

    let guard_node = |e: &Entry| Node {
        prank: e.prank,
        president: e.state.president,
        turn: 0,
    };
    let covered: HashMap<Node, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (guard_node(e), i))
        .collect();

    // Witness coverage: every evader start answered from the witness placement.
    let witness_rank = rank_of(&cert.witness_placement, "witness")?;
    for v in 0..g.n() as Vertex {
        if !covered.contains_key(&Node {
            prank: witness_rank,
            president: v,
            turn: 0,
        }) {
            return Err(CertificateError::WitnessGap { president: v });
        }
    }

    // Closure plus play-graph construction: guard node -> its move's evader
    // node -> all evader answers, which must be covered guard nodes again.
    let mut adj: Vec<Vec<u32>> = Vec::new();
    let mut unsafe_flag: Vec<bool> = Vec::new();
    let mut key_of: Vec<String> = Vec::new();
    {
        let mut push_node = |node: Node,
                             nodes: &mut Vec<Node>,
                             adj: &mut Vec<Vec<u32>>,
                             unsafe_flag: &mut Vec<bool>,
                             key_of: &mut Vec<String>,
                             placement: &[Vertex]|
         -> u32 {
            let id = intern(node, nodes);
            if id as usize == adj.len() {
                adj.push(Vec::new());
                let is_unsafe =
                    node.turn == 1 && !surrounded(&g, placement, node.president, cert.mode);
                unsafe_flag.push(is_unsafe);
                key_of.push(
                    GameState {
                        placement: placement.to_vec(),
                        president: node.president,
                        turn: if node.turn == 0 {
                            Turn::Bodyguards
                        } else {
                            Turn::President
                        },
                    }
                    .key(),
                );
            }
            id
        };

        for (i, e) in entries.iter().enumerate() {
            let from = push_node(
                guard_node(e),
                &mut nodes,
                &mut adj,
                &mut unsafe_flag,
                &mut key_of,
                &e.state.placement,
            );
            debug_assert_eq!(covered[&guard_node(e)], i);
            let mid = push_node(
                Node {
                    prank: e.target_rank,
                    president: e.state.president,
                    turn: 1,
                },
                &mut nodes,
                &mut adj,
                &mut unsafe_flag,
                &mut key_of,
                &e.target,
            );
            adj[from as usize].push(mid);
            // evader answers from the mid state
            let mut answers: Vec<Vertex> = g.neighbors(e.state.president).to_vec();
            answers.push(e.state.president);
            for u in answers {
                let next = Node {
                    prank: e.target_rank,
                    president: u,
                    turn: 0,
                };
                if !covered.contains_key(&next) {
                    return Err(CertificateError::ClosureViolation {
                        state: key_of[mid as usize].clone(),
                        missing: GameState {
                            placement: e.target.clone(),
                            president: u,
                            turn: Turn::Bodyguards,
                        }
                        .key(),
                    });
                }
                let next_id = push_node(
                    next,
                    &mut nodes,
                    &mut adj,
                    &mut unsafe_flag,
                    &mut key_of,
                    &e.target,
                );
                adj[mid as usize].push(next_id);
            }
        }
    }

    // Core checks: parse, membership bookkeeping, surround inside the core,
    // and closure of the core under the strategy.
    let mut core_nodes: std::collections::HashSet<Node> = std::collections::HashSet::new();
    for key in &cert.core {
        let state =
            GameState::parse_key(key).ok_or_else(|| CertificateError::BadKey(key.clone()))?;
        if state.placement.len() != cert.k || state.president as usize >= g.n() {
            return Err(CertificateError::KeyOutOfRange(key.clone()));
        }
        let prank = rank_of(&state.placement, key)?;
        if state.turn == Turn::President
            && !surrounded(&g, &state.placement, state.president, cert.mode)
        {
            return Err(CertificateError::CoreUnsafe(key.clone()));
        }
        core_nodes.insert(Node {
            prank,
            president: state.president,
            turn: state.turn.bit() as u8,
        });
    }
    for e in &entries {
        if core_nodes.contains(&guard_node(e)) {
            let mid = Node {
                prank: e.target_rank,
                president: e.state.president,
                turn: 1,
            };
            if !core_nodes.contains(&mid) {
                return Err(CertificateError::CoreEscape {
                    state: e.state.key(),
                    successor: GameState {
                        placement: e.target.clone(),
                        president: e.state.president,
                        turn: Turn::President,
                    }
                    .key(),
                });
            }
        }
    }

    // Any cycle of the play graph through an unsafe state refutes the
    // eventually-always claim.
    let (comp, count) = tarjan_scc(&adj);
    for c in 0..count as u32 {
        let has_unsafe = (0..adj.len()).any(|v| comp[v] == c && unsafe_flag[v]);
        if has_unsafe && component_is_cyclic(&adj, &comp, c) {
            let witness = (0..adj.len())
                .find(|&v| comp[v] == c && unsafe_flag[v])
                .unwrap();
            return Err(CertificateError::UnsafeCycle(key_of[witness].clone()));
        }
    }

    Ok(CertificateReport {
        covered_states: entries.len(),
        core_states: cert.core.len(),
        play_graph_nodes: adj.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::{Arena, MoveTable, DEFAULT_MOVE_LIMIT, DEFAULT_STATE_LIMIT};
    use crate::graphs::family::{complete, cycle};
    use crate::solver::{cobuchi_region, extract_strategy, two_phase_region};

    fn certificate_for(g: Graph, k: usize, method_two_phase: bool) -> StrategyCertificate {
        let arena = Arena::build(g, k, DEFAULT_STATE_LIMIT).unwrap();
        let moves = MoveTable::build(&arena, 1, DEFAULT_MOVE_LIMIT).unwrap();
        let region = if method_two_phase {
            two_phase_region(&arena, &moves, Mode::Open)
        } else {
            cobuchi_region(&arena, &moves, Mode::Open)
        };
        extract_strategy(&arena, &moves, &region).unwrap()
    }

    #[test]
    fn extracted_certificates_verify() {
        for (g, k, two_phase) in [
            (cycle(5).unwrap(), 2, false),
            (cycle(5).unwrap(), 2, true),
            (cycle(7).unwrap(), 3, true),
            (complete(4).unwrap(), 3, false),
        ] {
            let cert = certificate_for(g, k, two_phase);
            let report = verify_certificate(&cert).unwrap();
            assert!(report.covered_states > 0);
        }
    }

    #[test]
    fn json_round_trip_verifies() {
        let cert = certificate_for(cycle(5).unwrap(), 2, false);
        let reparsed = StrategyCertificate::from_json(&cert.to_json()).unwrap();
        assert!(verify_certificate(&reparsed).is_ok());
    }

    #[test]
    fn tampered_move_is_rejected() {
        let mut cert = certificate_for(cycle(5).unwrap(), 2, false);
        // Redirect some prescribed move to an unreachable placement.
        let key = cert.moves.keys().next().unwrap().clone();
        let state = GameState::parse_key(&key).unwrap();
        let far = (0..5u16)
            .find(|&v| {
                cert.graph.edges.iter().all(|&(a, b)| {
                    !(a == state.placement[0] && b == v) && !(a == v && b == state.placement[0])
                }) && v != state.placement[0]
            })
            .unwrap();
        cert.moves.insert(key, crate::arena::placement_key(&[far, far]));
        assert!(matches!(
            verify_certificate(&cert),
            Err(CertificateError::IllegalMove { .. })
        ));
    }

    #[test]
    fn tampered_fingerprint_is_rejected() {
        let mut cert = certificate_for(cycle(5).unwrap(), 2, false);
        cert.fingerprint = "deadbeefdeadbeef".into();
        assert!(matches!(
            verify_certificate(&cert),
            Err(CertificateError::Fingerprint { .. })
        ));
    }

    #[test]
    fn dropped_state_breaks_closure() {
        let mut cert = certificate_for(cycle(5).unwrap(), 2, false);
        // Remove a state the strategy provably reaches: the stay-answer to
        // the first prescribed move.
        let (key, target_key) = cert.moves.iter().next().unwrap();
        let state = GameState::parse_key(key).unwrap();
        let victim = GameState {
            placement: crate::arena::parse_placement_key(target_key).unwrap(),
            president: state.president,
            turn: Turn::Bodyguards,
        }
        .key();
        cert.moves.remove(&victim).expect("victim is covered");
        assert!(matches!(
            verify_certificate(&cert),
            Err(CertificateError::ClosureViolation { .. }) | Err(CertificateError::WitnessGap { .. })
        ));
    }
}
