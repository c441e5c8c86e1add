//! Game positions and legal-move generation.
//!
//! A position is `(placement, evader vertex, side to move)`. With `P` the
//! number of placements, state ids are laid out as
//! `(placement_rank * n + president) * 2 + turn`, a bijection onto
//! `[0, P * n * 2)`. Guards are indistinguishable, so placements are sorted
//! multisets; that divides the state space by up to `k!`.

mod matching;
mod moves;
mod placement;

pub use matching::{joint_move_assignment, joint_move_feasible};
pub use moves::{joint_successors, MoveTable};
pub use placement::{Placement, PlacementCodec, RankError};

use thiserror::Error;

use crate::graphs::{Graph, Vertex};

/// Default ceiling on arena state counts (`placements * n * 2`).
pub const DEFAULT_STATE_LIMIT: u64 = 50_000_000;
/// Default ceiling on materialized joint-move table entries.
pub const DEFAULT_MOVE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Bodyguards = 0,
    President = 1,
}

impl Turn {
    pub fn bit(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Turn::Bodyguards => 'B',
            Turn::President => 'P',
        }
    }
}

/// Surround test variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every vertex of the evader's open neighbourhood hosts a token.
    Open,
    /// Additionally the evader's own vertex hosts a token.
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub placement: Placement,
    pub president: Vertex,
    pub turn: Turn,
}

impl GameState {
    /// The exchange key format used by certificate and transcript files:
    /// `placement=[v1,v2,...];president=v;turn=B|P`.
    pub fn key(&self) -> String {
        format!(
            "placement={};president={};turn={}",
            placement_key(&self.placement),
            self.president,
            self.turn.letter()
        )
    }

    pub fn parse_key(key: &str) -> Option<GameState> {
        let mut placement = None;
        let mut president = None;
        let mut turn = None;
        for part in key.split(';') {
            let (name, value) = part.split_once('=')?;
            match name {
                "placement" => placement = Some(parse_placement_key(value)?),
                "president" => president = Some(value.parse().ok()?),
                "turn" => {
                    turn = Some(match value {
                        "B" => Turn::Bodyguards,
                        "P" => Turn::President,
                        _ => return None,
                    })
                }
                _ => return None,
            }
        }
        Some(GameState {
            placement: placement?,
            president: president?,
            turn: turn?,
        })
    }
}

/// `[v1,v2,...]` with sorted entries and no spaces.
pub fn placement_key(tokens: &[Vertex]) -> String {
    let mut s = String::from("[");
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&t.to_string());
    }
    s.push(']');
    s
}

pub fn parse_placement_key(text: &str) -> Option<Placement> {
    let inner = text.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.parse().ok()).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArenaError {
    #[error("arena needs {needed} states, limit is {limit}")]
    StateLimit { needed: u64, limit: u64 },
    #[error("joint-move table needs more than {limit} entries")]
    MoveLimit { limit: u64 },
    #[error(transparent)]
    Rank(#[from] RankError),
}

/// Immutable board-plus-token-count context: state indexing and
/// precomputed closed neighbourhoods. Move generation is pure; the solver
/// materializes a [`MoveTable`] separately when it wants stored successors.
#[derive(Debug, Clone)]
pub struct Arena {
    graph: Graph,
    k: usize,
    codec: PlacementCodec,
    states: u64,
    /// `N[v]`, sorted ascending (so `v` is included).
    closed: Vec<Vec<Vertex>>,
}

impl Arena {
    pub fn build(graph: Graph, k: usize, state_limit: u64) -> Result<Self, ArenaError> {
        let n = graph.n();
        let codec = PlacementCodec::new(n, k)?;
        let states = codec
            .count()
            .checked_mul(n as u64 * 2)
            .ok_or(ArenaError::StateLimit {
                needed: u64::MAX,
                limit: state_limit,
            })?;
        if states > state_limit {
            return Err(ArenaError::StateLimit {
                needed: states,
                limit: state_limit,
            });
        }
        let closed = (0..n as Vertex)
            .map(|v| {
                let mut c = graph.neighbors(v).to_vec();
                let pos = c.binary_search(&v).unwrap_err();
                c.insert(pos, v);
                c
            })
            .collect();
        Ok(Arena {
            graph,
            k,
            codec,
            states,
            closed,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn codec(&self) -> &PlacementCodec {
        &self.codec
    }

    pub fn placement_count(&self) -> u64 {
        self.codec.count()
    }

    pub fn state_count(&self) -> u64 {
        self.states
    }

    /// `N[v]` sorted; the evader's legal destinations from `v`.
    pub fn president_moves(&self, v: Vertex) -> &[Vertex] {
        &self.closed[v as usize]
    }

    #[inline]
    pub fn state_id(&self, prank: u64, president: Vertex, turn: Turn) -> usize {
        debug_assert!((president as usize) < self.graph.n());
        ((prank * self.graph.n() as u64 + president as u64) * 2 + turn.bit() as u64) as usize
    }

    pub fn id_of(&self, state: &GameState) -> Result<usize, RankError> {
        let prank = self.codec.rank(&state.placement)?;
        Ok(self.state_id(prank, state.president, state.turn))
    }

    /// Decomposes a state id into `(placement rank, president, turn)`.
    #[inline]
    pub fn decode_id(&self, id: usize) -> (u64, Vertex, Turn) {
        let turn = if id & 1 == 0 {
            Turn::Bodyguards
        } else {
            Turn::President
        };
        let rest = (id >> 1) as u64;
        let n = self.graph.n() as u64;
        ((rest / n), (rest % n) as Vertex, turn)
    }

    pub fn state_of(&self, id: usize) -> GameState {
        let (prank, president, turn) = self.decode_id(id);
        GameState {
            placement: self.codec.unrank(prank).expect("id in range"),
            president,
            turn,
        }
    }
}

/// Whether the configuration is surrounded under `mode`. Vacuously true for
/// an isolated evader in open mode; that convention makes the game value of
/// an edgeless board come out as zero tokens.
pub fn surrounded(g: &Graph, tokens: &[Vertex], president: Vertex, mode: Mode) -> bool {
    let words = g.words_per_row();
    let mut occ = vec![0u64; words];
    for &t in tokens {
        occ[t as usize / 64] |= 1 << (t as usize % 64);
    }
    let row = g.neighbor_row(president);
    if row.iter().zip(&occ).any(|(nbr, o)| nbr & !o != 0) {
        return false;
    }
    match mode {
        Mode::Open => true,
        Mode::Closed => occ[president as usize / 64] >> (president as usize % 64) & 1 == 1,
    }
}
