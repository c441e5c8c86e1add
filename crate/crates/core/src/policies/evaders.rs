//! Evader-side scripted policies, including the simple adversaries the
//! playout command offers.

use crate::arena::{surrounded, Mode, Placement};
use crate::graphs::{family, Graph, Vertex};

use super::{PolicyError, PresidentPolicy};

fn inapplicable(policy: &'static str, reason: impl Into<String>) -> PolicyError {
    PolicyError::Inapplicable {
        policy,
        reason: reason.into(),
    }
}

// ---------------------------------------------------------------------------
// cycle evader vs two tokens
// ---------------------------------------------------------------------------

/// Outruns the farther token: starts at circular distance at least three
/// from one token and keeps fleeing the designated (farthest) token, so that
/// token never reaches the evader's neighbourhood and one side of the
/// neighbourhood stays uncovered forever.
#[derive(Debug)]
pub struct CycleEvader {
    n: usize,
}

impl CycleEvader {
    pub fn new(g: &Graph, k: usize) -> Result<Self, PolicyError> {
        let n = g.n();
        let reference = family::cycle(n).map_err(|e| inapplicable("evader-cycle", e.to_string()))?;
        if reference.edges() != g.edges() {
            return Err(inapplicable("evader-cycle", "board is not the canonical cycle"));
        }
        if n <= 5 {
            return Err(inapplicable("evader-cycle", "needs a cycle of order at least 6"));
        }
        if k != 2 {
            return Err(PolicyError::KMismatch {
                policy: "evader-cycle",
                expected: 2,
                got: k,
            });
        }
        Ok(CycleEvader { n })
    }

    fn dist(&self, a: Vertex, b: Vertex) -> usize {
        let cw = (b as usize + self.n - a as usize) % self.n;
        cw.min(self.n - cw)
    }

    /// The token the evader runs from: maximal distance, ties broken by the
    /// smaller clockwise gap.
    fn designated(&self, placement: &Placement, p: Vertex) -> Vertex {
        *placement
            .iter()
            .max_by_key(|&&t| {
                let cw = (t as usize + self.n - p as usize) % self.n;
                (self.dist(p, t), std::cmp::Reverse(cw))
            })
            .expect("placement is nonempty")
    }
}

impl PresidentPolicy for CycleEvader {
    fn id(&self) -> &'static str {
        "evader-cycle"
    }

    fn initial_vertex(&self, placement: &Placement) -> Vertex {
        // smallest start with some token at distance >= 3
        (0..self.n as Vertex)
            .find(|&v| placement.iter().any(|&t| self.dist(v, t) >= 3))
            .unwrap_or(0)
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Vertex {
        let threat = self.designated(placement, president);
        let candidates = [
            president,
            ((president as usize + 1) % self.n) as Vertex,
            ((president as usize + self.n - 1) % self.n) as Vertex,
        ];
        *candidates
            .iter()
            .max_by_key(|&&m| self.dist(m, threat))
            .expect("nonempty candidates")
    }
}

// ---------------------------------------------------------------------------
// tree evader vs (leaves - 1) tokens
// ---------------------------------------------------------------------------

/// Waits on a center vertex; when surrounded, descends into a subtree that
/// holds more tree leaves than tokens (one exists by counting), and walks
/// back toward the center as soon as a surround fails. The failed-surround
/// condition is pinned to "not surrounded in the current configuration",
/// which is exactly the end of the previous guard turn.
pub struct TreeEvader {
    g: Graph,
    center: Vertex,
    leaves: Vec<Vertex>,
    dist: Vec<Vec<u32>>,
}

impl TreeEvader {
    pub fn new(g: Graph, k: usize) -> Result<Self, PolicyError> {
        if !g.is_tree() || g.n() < 2 {
            return Err(inapplicable("evader-tree", "board is not a tree"));
        }
        let leaves = g.leaf_set();
        if leaves.len() < 2 {
            return Err(inapplicable("evader-tree", "tree has fewer than two leaves"));
        }
        if k + 1 != leaves.len() {
            return Err(PolicyError::KMismatch {
                policy: "evader-tree",
                expected: leaves.len() - 1,
                got: k,
            });
        }
        let dist: Vec<Vec<u32>> = (0..g.n() as Vertex).map(|v| g.distances_from(v)).collect();
        let center = (0..g.n() as Vertex)
            .min_by_key(|&v| {
                let ecc = dist[v as usize].iter().max().copied().unwrap_or(0);
                (ecc, v)
            })
            .expect("tree has a vertex");
        Ok(TreeEvader {
            g,
            center,
            leaves,
            dist,
        })
    }

    fn d(&self, a: Vertex, b: Vertex) -> u32 {
        self.dist[a as usize][b as usize]
    }

    fn step_toward(&self, x: Vertex, y: Vertex) -> Vertex {
        if x == y {
            return x;
        }
        *self
            .g
            .neighbors(x)
            .iter()
            .find(|&&w| self.d(w, y) + 1 == self.d(x, y))
            .expect("tree paths always descend")
    }

    /// Leaves and tokens inside the component of `T - p` rooted at neighbour
    /// `u`. Tokens co-located with the evader count nowhere.
    fn component_counts(&self, placement: &Placement, p: Vertex, u: Vertex) -> (usize, usize) {
        let in_comp = |w: Vertex| w != p && self.d(w, u) + 1 == self.d(w, p);
        let leaves = self.leaves.iter().filter(|&&w| in_comp(w)).count();
        let tokens = placement.iter().filter(|&&w| in_comp(w)).count();
        (leaves, tokens)
    }
}

impl PresidentPolicy for TreeEvader {
    fn id(&self) -> &'static str {
        "evader-tree"
    }

    fn initial_vertex(&self, _placement: &Placement) -> Vertex {
        self.center
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Vertex {
        let p = president;
        if !surrounded(&self.g, placement, p, Mode::Open) {
            // surround failed at the end of the guards' turn: regroup
            return if p == self.center {
                p
            } else {
                self.step_toward(p, self.center)
            };
        }
        // Surrounded: descend into a leaf-rich subtree, preferring directions
        // away from the center and non-leaf entry points.
        let mut candidates: Vec<(bool, bool, Vertex)> = Vec::new();
        for &u in self.g.neighbors(p) {
            let (leaves, tokens) = self.component_counts(placement, p, u);
            if leaves > tokens {
                let away = self.d(u, self.center) > self.d(p, self.center);
                let entry_is_leaf = self.g.degree(u) == 1;
                candidates.push((away, entry_is_leaf, u));
            }
        }
        // prefer away-from-center, then non-leaf entries, then smallest id
        candidates.sort_by_key(|&(away, leaf, u)| (std::cmp::Reverse(away), leaf, u));
        match candidates.first() {
            Some(&(_, _, u)) => u,
            None => {
                if p == self.center {
                    p
                } else {
                    self.step_toward(p, self.center)
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// hypercube evader vs d tokens
// ---------------------------------------------------------------------------

/// Keeps the farthest token at Hamming distance at least three: starting at
/// odd distance at least three from some token, and whenever the designated
/// token closes to distance two, flipping a coordinate outside the two
/// differing ones. A token stuck at distance three can never help cover the
/// evader's neighbourhood, and `d - 1` tokens cannot cover `d` neighbours.
#[derive(Debug)]
pub struct HypercubeEvader {
    d: usize,
}

impl HypercubeEvader {
    pub fn new(g: &Graph, k: usize) -> Result<Self, PolicyError> {
        let n = g.n();
        let d = n.trailing_zeros() as usize;
        if n < 8 || n != 1 << d {
            return Err(inapplicable("evader-hypercube", "board order is not 2^d with d >= 3"));
        }
        let reference = family::hypercube(d).map_err(|e| inapplicable("evader-hypercube", e.to_string()))?;
        if reference.edges() != g.edges() {
            return Err(inapplicable(
                "evader-hypercube",
                "board is not the canonical hypercube",
            ));
        }
        if k != d {
            return Err(PolicyError::KMismatch {
                policy: "evader-hypercube",
                expected: d,
                got: k,
            });
        }
        Ok(HypercubeEvader { d })
    }

    fn dist(a: Vertex, b: Vertex) -> u32 {
        (a ^ b).count_ones()
    }

    fn designated(&self, placement: &Placement, p: Vertex) -> Vertex {
        *placement
            .iter()
            .max_by_key(|&&t| (Self::dist(p, t), std::cmp::Reverse(t)))
            .expect("placement is nonempty")
    }
}

impl PresidentPolicy for HypercubeEvader {
    fn id(&self) -> &'static str {
        "evader-hypercube"
    }

    fn initial_vertex(&self, placement: &Placement) -> Vertex {
        let n = 1u32 << self.d;
        (0..n as Vertex)
            .find(|&v| {
                placement
                    .iter()
                    .any(|&t| Self::dist(v, t) >= 3 && Self::dist(v, t) % 2 == 1)
            })
            .unwrap_or(0)
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Vertex {
        let threat = self.designated(placement, president);
        let d = Self::dist(president, threat);
        if d >= 3 {
            return president;
        }
        if d == 2 {
            // flip the lowest coordinate outside the differing pair
            let differing = president ^ threat;
            for b in 0..self.d {
                if differing >> b & 1 == 0 {
                    return president ^ (1 << b);
                }
            }
        }
        // Degenerate (every token nearby): flip toward maximal distance.
        (0..self.d)
            .map(|b| president ^ (1 << b))
            .max_by_key(|&w| (Self::dist(w, threat), std::cmp::Reverse(w)))
            .unwrap_or(president)
    }
}

// ---------------------------------------------------------------------------
// playout adversaries
// ---------------------------------------------------------------------------

/// Parks on the first token-free vertex (or vertex 0) and never moves.
pub struct StayPolicy;

impl PresidentPolicy for StayPolicy {
    fn id(&self) -> &'static str {
        "stay"
    }

    fn initial_vertex(&self, placement: &Placement) -> Vertex {
        let mut v = 0;
        while placement.binary_search(&v).is_ok() {
            v += 1;
        }
        v
    }

    fn step(&self, _placement: &Placement, president: Vertex) -> Vertex {
        president
    }
}

/// Locally hill-climbs away from the tokens: prefers moves maximizing the
/// distance to the nearest token, then the number of uncovered neighbours.
pub struct GreedyEscape {
    g: Graph,
    dist: Vec<Vec<u32>>,
}

impl GreedyEscape {
    pub fn new(g: Graph) -> Self {
        let dist = (0..g.n() as Vertex).map(|v| g.distances_from(v)).collect();
        GreedyEscape { g, dist }
    }

    fn score(&self, placement: &Placement, v: Vertex) -> (u32, usize, std::cmp::Reverse<Vertex>) {
        let nearest = placement
            .iter()
            .map(|&t| self.dist[v as usize][t as usize])
            .min()
            .unwrap_or(u32::MAX);
        let uncovered = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&w| placement.binary_search(&w).is_err())
            .count();
        (nearest, uncovered, std::cmp::Reverse(v))
    }
}

impl PresidentPolicy for GreedyEscape {
    fn id(&self) -> &'static str {
        "greedy-escape"
    }

    fn initial_vertex(&self, placement: &Placement) -> Vertex {
        (0..self.g.n() as Vertex)
            .max_by_key(|&v| self.score(placement, v))
            .unwrap_or(0)
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Vertex {
        let mut moves = self.g.neighbors(president).to_vec();
        moves.push(president);
        moves
            .into_iter()
            .max_by_key(|&v| self.score(placement, v))
            .unwrap_or(president)
    }
}

// ---------------------------------------------------------------------------
// region-guided adversary
// ---------------------------------------------------------------------------

/// Plays the solved game optimally against the guards: starts outside their
/// winning region when any start escapes it, and afterwards always takes the
/// best-response move read off the region.
pub struct RegionResponse {
    arena: crate::arena::Arena,
    region: crate::solver::WinRegion,
}

impl RegionResponse {
    pub fn new(arena: crate::arena::Arena, region: crate::solver::WinRegion) -> Self {
        RegionResponse { arena, region }
    }
}

impl PresidentPolicy for RegionResponse {
    fn id(&self) -> &'static str {
        "best-response"
    }

    fn initial_vertex(&self, placement: &Placement) -> Vertex {
        let n = self.arena.graph().n();
        let prank = match self.arena.codec().rank(placement) {
            Ok(r) => r,
            Err(_) => return 0,
        };
        let start_id =
            |v: Vertex| self.arena.state_id(prank, v, crate::arena::Turn::Bodyguards);
        if let Some(v) = (0..n as Vertex).find(|&v| !self.region.members.get(start_id(v))) {
            return v;
        }
        (0..n as Vertex)
            .max_by_key(|&v| (self.region.ranks[start_id(v)], std::cmp::Reverse(v)))
            .unwrap_or(0)
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Vertex {
        let state = crate::arena::GameState {
            placement: placement.clone(),
            president,
            turn: crate::arena::Turn::President,
        };
        crate::solver::best_response_president(&self.arena, &self.region, &state)
            .unwrap_or(president)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::family::{cycle, hypercube, path, tree_from_edges};
    use crate::policies::verify_president_policy;

    #[test]
    fn cycle_evader_escapes_two_tokens() {
        for n in [6usize, 7, 10] {
            let g = cycle(n).unwrap();
            let policy = CycleEvader::new(&g, 2).unwrap();
            let verdict = verify_president_policy(&g, 2, &policy, Mode::Open).unwrap();
            assert!(verdict.holds, "evader should survive on C_{n}");
        }
    }

    #[test]
    fn cycle_evader_preconditions() {
        assert!(CycleEvader::new(&cycle(5).unwrap(), 2).is_err());
        assert!(matches!(
            CycleEvader::new(&cycle(6).unwrap(), 3).unwrap_err(),
            PolicyError::KMismatch { .. }
        ));
    }

    #[test]
    fn tree_evader_on_spider_and_path() {
        // spider with three legs of length two, vs two tokens
        let g = tree_from_edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let policy = TreeEvader::new(g.clone(), 2).unwrap();
        assert!(verify_president_policy(&g, 2, &policy, Mode::Open).unwrap().holds);

        // a path has two leaves: one token is not enough
        let g = path(5).unwrap();
        let policy = TreeEvader::new(g.clone(), 1).unwrap();
        assert!(verify_president_policy(&g, 1, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn tree_evader_on_double_star() {
        let g = tree_from_edges(&[(0, 1), (1, 2), (1, 3), (0, 4), (0, 5)]).unwrap();
        let policy = TreeEvader::new(g.clone(), 3).unwrap();
        assert!(verify_president_policy(&g, 3, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn hypercube_evader_survives_d_tokens() {
        let g = hypercube(3).unwrap();
        let policy = HypercubeEvader::new(&g, 3).unwrap();
        assert!(verify_president_policy(&g, 3, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn hypercube_evader_preconditions() {
        let g = hypercube(3).unwrap();
        assert!(matches!(
            HypercubeEvader::new(&g, 4).unwrap_err(),
            PolicyError::KMismatch { .. }
        ));
        assert!(HypercubeEvader::new(&cycle(8).unwrap(), 3).is_err());
    }
}
