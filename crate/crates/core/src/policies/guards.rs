//! Guard-side scripted policies.
//!
//! All of them are positional: wherever the underlying strategy description
//! speaks of history ("the vertex the evader came from", "direction of
//! rotation"), the information is recovered from the current configuration
//! under a documented convention. Clockwise on a cycle means increasing
//! vertex index.

use crate::arena::Placement;
use crate::graphs::{family, Graph, Vertex};

use super::{BodyguardPolicy, PolicyError};

fn inapplicable(policy: &'static str, reason: impl Into<String>) -> PolicyError {
    PolicyError::Inapplicable {
        policy,
        reason: reason.into(),
    }
}

fn insert_sorted(mut tokens: Placement, v: Vertex) -> Placement {
    let pos = tokens.partition_point(|&x| x <= v);
    tokens.insert(pos, v);
    tokens
}

fn remove_one(mut tokens: Placement, v: Vertex) -> Placement {
    if let Ok(pos) = tokens.binary_search(&v) {
        tokens.remove(pos);
    }
    tokens
}

// ---------------------------------------------------------------------------
// universal: n-1 tokens on any board
// ---------------------------------------------------------------------------

/// Covers every vertex but one and keeps the uncovered vertex equal to the
/// evader's position: when the evader steps onto a token, the whole chain of
/// tokens on a shortest path to the hole shifts one step, which as a multiset
/// is just "hole moves to the evader". Wins on any board with `n - 1` tokens.
pub struct UniversalPolicy {
    g: Graph,
}

impl UniversalPolicy {
    pub fn new(g: Graph) -> Result<Self, PolicyError> {
        if g.n() < 1 {
            return Err(inapplicable("universal", "board has no vertices"));
        }
        Ok(UniversalPolicy { g })
    }
}

impl BodyguardPolicy for UniversalPolicy {
    fn id(&self) -> &'static str {
        "universal"
    }

    fn k(&self) -> usize {
        self.g.n() - 1
    }

    fn initial_placement(&self) -> Placement {
        (0..(self.g.n() - 1) as Vertex).collect()
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Placement {
        let n = self.g.n();
        let mut covered = vec![false; n];
        for &t in placement {
            covered[t as usize] = true;
        }
        let Some(hole) = (0..n).find(|&v| !covered[v]) else {
            return placement.clone();
        };
        let hole = hole as Vertex;
        if hole == president {
            return placement.clone();
        }
        // Shift along a shortest evader-to-hole path; unreachable hole (other
        // component) cannot ever border the evader, so staying is safe.
        let dist = self.g.distances_from(hole);
        if dist[president as usize] == u32::MAX {
            return placement.clone();
        }
        insert_sorted(remove_one(placement.clone(), president), hole)
    }
}

// ---------------------------------------------------------------------------
// multipartite: occupy every part except the evader's
// ---------------------------------------------------------------------------

pub struct MultipartitePolicy {
    parts: Vec<usize>,
    part_of: Vec<usize>,
    n: usize,
}

impl MultipartitePolicy {
    /// `parts` must be ascending and `g` must be the canonical complete
    /// multipartite board on those parts (contiguous id blocks).
    pub fn new(g: &Graph, parts: &[usize]) -> Result<Self, PolicyError> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(inapplicable("multipartite", "parts must be ascending"));
        }
        let reference = family::complete_multipartite(parts)
            .map_err(|e| inapplicable("multipartite", e.to_string()))?;
        if reference.n() != g.n() || reference.edges() != g.edges() {
            return Err(inapplicable(
                "multipartite",
                "board is not the complete multipartite graph on the given parts",
            ));
        }
        let mut part_of = Vec::with_capacity(g.n());
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        Ok(MultipartitePolicy {
            parts: parts.to_vec(),
            part_of,
            n: g.n(),
        })
    }

    fn goal(&self, evader_part: usize) -> Placement {
        let outside: Vec<Vertex> = (0..self.n as Vertex)
            .filter(|&v| self.part_of[v as usize] != evader_part)
            .collect();
        let surplus = self.k() - outside.len();
        let mut goal = outside;
        // Spare tokens stack on the largest vertex outside the evader's part.
        let anchor = *goal.last().expect("at least two parts exist");
        for _ in 0..surplus {
            goal.push(anchor);
        }
        goal.sort_unstable();
        goal
    }
}

impl BodyguardPolicy for MultipartitePolicy {
    fn id(&self) -> &'static str {
        "multipartite"
    }

    fn k(&self) -> usize {
        self.n - self.parts[0]
    }

    fn initial_placement(&self) -> Placement {
        self.goal(0)
    }

    fn step(&self, _placement: &Placement, president: Vertex) -> Placement {
        self.goal(self.part_of[president as usize])
    }
}

// ---------------------------------------------------------------------------
// tree: one token per leaf
// ---------------------------------------------------------------------------

/// Each token serves one leaf and walks toward the evader along the unique
/// path, halting adjacent. Token identities are recovered positionally: an
/// assignment of tokens to leaves such that every token lies on its leaf's
/// evader path exists in every reachable state (tokens start on their leaves
/// and homing keeps them on the path), and the lexicographically least such
/// assignment is used.
pub struct TreePolicy {
    g: Graph,
    leaves: Vec<Vertex>,
    dist: Vec<Vec<u32>>,
}

impl TreePolicy {
    pub fn new(g: Graph) -> Result<Self, PolicyError> {
        if !g.is_tree() {
            return Err(inapplicable("tree", "board is not a tree"));
        }
        if g.n() < 3 {
            return Err(inapplicable("tree", "needs at least three vertices"));
        }
        let leaves = g.leaf_set();
        let dist = (0..g.n() as Vertex).map(|v| g.distances_from(v)).collect();
        Ok(TreePolicy { g, leaves, dist })
    }

    fn d(&self, a: Vertex, b: Vertex) -> u32 {
        self.dist[a as usize][b as usize]
    }

    fn on_path(&self, x: Vertex, a: Vertex, b: Vertex) -> bool {
        self.d(a, x) + self.d(x, b) == self.d(a, b)
    }

    /// Next vertex on the unique path from `x` toward `y` (`x` when equal).
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

    /// Lexicographically least token→leaf assignment keeping every token on
    /// its leaf's evader path, if one exists.
    fn assignment(&self, tokens: &[Vertex], president: Vertex) -> Option<Vec<usize>> {
        let l = self.leaves.len();
        let mut chosen = vec![usize::MAX; l];
        let mut used = vec![false; tokens.len()];
        fn rec(
            pol: &TreePolicy,
            tokens: &[Vertex],
            president: Vertex,
            li: usize,
            chosen: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if li == pol.leaves.len() {
                return true;
            }
            let leaf = pol.leaves[li];
            for ti in 0..tokens.len() {
                if used[ti] || !pol.on_path(tokens[ti], leaf, president) {
                    continue;
                }
                used[ti] = true;
                chosen[li] = ti;
                if rec(pol, tokens, president, li + 1, chosen, used) {
                    return true;
                }
                used[ti] = false;
            }
            false
        }
        rec(self, tokens, president, 0, &mut chosen, &mut used).then_some(chosen)
    }
}

impl BodyguardPolicy for TreePolicy {
    fn id(&self) -> &'static str {
        "tree"
    }

    fn k(&self) -> usize {
        self.leaves.len()
    }

    fn initial_placement(&self) -> Placement {
        self.leaves.clone()
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Placement {
        let moves: Vec<Vertex> = match self.assignment(placement, president) {
            Some(chosen) => {
                let mut next = vec![Vertex::MAX; placement.len()];
                for (li, &ti) in chosen.iter().enumerate() {
                    let t = placement[ti];
                    let leaf = self.leaves[li];
                    next[ti] = if t == president {
                        // the evader stepped onto this token; fall back toward
                        // the served leaf
                        self.step_toward(t, leaf)
                    } else if self.d(t, president) == 1 {
                        t
                    } else {
                        self.step_toward(t, president)
                    };
                }
                next
            }
            // Foreign state (not policy-reachable): plain homing.
            None => placement
                .iter()
                .map(|&t| {
                    if self.d(t, president) <= 1 {
                        t
                    } else {
                        self.step_toward(t, president)
                    }
                })
                .collect(),
        };
        let mut out = moves;
        out.sort_unstable();
        out
    }
}

// ---------------------------------------------------------------------------
// cycle: 2 tokens up to order 5, 3 beyond
// ---------------------------------------------------------------------------

/// On short cycles two tokens occupy both evader neighbours whenever a single
/// joint move can do it. On longer cycles a third token enables a pincer:
/// tokens not yet near the evader chase him with fixed opposite rotations
/// (the sum of the two directed gaps drops by two every round, whatever he
/// does), and a token that gets within distance two becomes a sticky shadow
/// he can never shake. Two shadows split onto his two sides, at which point
/// the cover-both branch takes over permanently.
pub struct CyclePolicy {
    n: usize,
    k: usize,
}

impl CyclePolicy {
    pub fn new(g: &Graph, k: usize) -> Result<Self, PolicyError> {
        let n = g.n();
        let reference = family::cycle(n).map_err(|e| inapplicable("cycle", e.to_string()))?;
        if reference.edges() != g.edges() {
            return Err(inapplicable("cycle", "board is not the canonical cycle"));
        }
        if k != 2 && k != 3 {
            return Err(PolicyError::KMismatch {
                policy: "cycle",
                expected: if n <= 5 { 2 } else { 3 },
                got: k,
            });
        }
        Ok(CyclePolicy { n, k })
    }

    fn cw(&self, v: Vertex) -> Vertex {
        ((v as usize + 1) % self.n) as Vertex
    }

    fn ccw(&self, v: Vertex) -> Vertex {
        ((v as usize + self.n - 1) % self.n) as Vertex
    }

    fn dist(&self, a: Vertex, b: Vertex) -> usize {
        let cw = (b as usize + self.n - a as usize) % self.n;
        cw.min(self.n - cw)
    }

    /// Step from `x` toward `y` along the shorter arc; clockwise on a tie.
    fn step_shorter(&self, x: Vertex, y: Vertex) -> Vertex {
        if x == y {
            return x;
        }
        let cw_gap = (y as usize + self.n - x as usize) % self.n;
        if cw_gap <= self.n - cw_gap {
            self.cw(x)
        } else {
            self.ccw(x)
        }
    }

    /// Occupy both evader neighbours in one joint move if possible.
    fn cover_both(&self, placement: &Placement, president: Vertex) -> Option<Placement> {
        let a = self.ccw(president);
        let b = self.cw(president);
        let reach = |t: Vertex, target: Vertex| self.dist(t, target) <= 1;
        for i in 0..placement.len() {
            for j in 0..placement.len() {
                if i == j {
                    continue;
                }
                if reach(placement[i], a) && reach(placement[j], b) {
                    let mut next = placement.clone();
                    next[i] = a;
                    next[j] = b;
                    next.sort_unstable();
                    return Some(next);
                }
            }
        }
        None
    }
}

impl BodyguardPolicy for CyclePolicy {
    fn id(&self) -> &'static str {
        "cycle"
    }

    fn k(&self) -> usize {
        self.k
    }

    fn initial_placement(&self) -> Placement {
        if self.k == 2 {
            vec![0, 2]
        } else {
            let mut p = vec![0, (self.n / 3) as Vertex, (2 * self.n / 3) as Vertex];
            p.sort_unstable();
            p
        }
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Placement {
        if let Some(next) = self.cover_both(placement, president) {
            return next;
        }
        if self.k == 2 {
            return placement.clone();
        }
        let p = president;
        let ahead_gap = |t: Vertex| (t as usize + self.n - p as usize) % self.n;
        let behind_gap = |t: Vertex| (p as usize + self.n - t as usize) % self.n;
        // Shadows: within distance two at the start of the guard turn. A
        // shadow moved to distance <= 1, so the evader's move leaves it
        // within two again: promotion is permanent.
        let mut shadows: Vec<usize> = (0..placement.len())
            .filter(|&i| self.dist(placement[i], p) <= 2)
            .collect();
        shadows.sort_by_key(|&i| (self.dist(placement[i], p), i));
        let chasers: Vec<usize> = (0..placement.len()).filter(|i| !shadows.contains(i)).collect();

        let mut next = placement.clone();
        match shadows.len() {
            0 => {}
            1 => {
                // track the evader himself, halting adjacent
                let i = shadows[0];
                next[i] = if self.dist(placement[i], p) <= 1 && placement[i] != p {
                    placement[i]
                } else if placement[i] == p {
                    self.cw(p)
                } else {
                    self.step_shorter(placement[i], p)
                };
            }
            _ => {
                // two shadows take opposite sides: the more-behind one owns
                // the counterclockwise neighbour
                let (a, b) = (shadows[0], shadows[1]);
                let (minus, plus) = if (behind_gap(placement[a]), a) <= (behind_gap(placement[b]), b)
                {
                    (a, b)
                } else {
                    (b, a)
                };
                next[minus] = self.step_shorter(placement[minus], self.ccw(p));
                next[plus] = self.step_shorter(placement[plus], self.cw(p));
            }
        }
        // Chasers run fixed rotations. With two or more, the nearest-ahead
        // approaches counterclockwise and the rest clockwise, so the evader's
        // rotation stalls at most one direction per round. A lone chaser
        // heads for whichever side of the evader holds no other token,
        // wrapping around his back rather than queueing behind the shadows.
        match chasers.len() {
            0 => {}
            1 => {
                let i = chasers[0];
                let others_ahead = (0..placement.len())
                    .filter(|&j| j != i)
                    .all(|j| ahead_gap(placement[j]) <= behind_gap(placement[j]));
                let others_behind = (0..placement.len())
                    .filter(|&j| j != i)
                    .all(|j| behind_gap(placement[j]) < ahead_gap(placement[j]));
                let self_ahead = ahead_gap(placement[i]) <= behind_gap(placement[i]);
                let go_cw = if others_ahead {
                    true
                } else if others_behind {
                    false
                } else {
                    !self_ahead
                };
                next[i] = if go_cw {
                    self.cw(placement[i])
                } else {
                    self.ccw(placement[i])
                };
            }
            _ => {
                let ahead = chasers
                    .iter()
                    .copied()
                    .min_by_key(|&i| (ahead_gap(placement[i]), i))
                    .expect("nonempty");
                for &i in &chasers {
                    next[i] = if i == ahead {
                        self.ccw(placement[i])
                    } else {
                        self.cw(placement[i])
                    };
                }
            }
        }
        next.sort_unstable();
        next
    }
}

// ---------------------------------------------------------------------------
// strong grid: one token per nonzero offset vector
// ---------------------------------------------------------------------------

/// King-move grids: every token owns a nonzero offset in `{-1,0,1}^d` and
/// escorts the vertex `anchor + offset`, clamped into the board (the padded
/// retraction). The whole formation stays exactly on the escort positions of
/// a single anchor vertex, and the anchor makes one king step toward the
/// evader per turn — one-cop pursuit lifted to the formation, so each
/// coordinate locks at a wall and never unlocks. Once the anchor reaches the
/// evader the escorts are his entire neighbourhood and follow every move.
/// The anchor is recovered positionally: it is the vertex whose escort
/// multiset equals the current placement.
pub struct StrongGridPolicy {
    dims: Vec<usize>,
    offsets: Vec<Vec<i32>>,
}

impl StrongGridPolicy {
    /// `dims` are the path orders, outermost coordinate first; all must be
    /// at least 3. `g` must be the iterated strong product of those paths
    /// (left-associated, row-major ids).
    pub fn new(g: &Graph, dims: &[usize]) -> Result<Self, PolicyError> {
        if dims.is_empty() || dims.iter().any(|&d| d < 3) {
            return Err(inapplicable(
                "strong-grid",
                "all path orders must be at least 3",
            ));
        }
        let mut reference = family::path(dims[0]).expect("path order checked");
        for &d in &dims[1..] {
            let next = family::path(d).expect("path order checked");
            reference = crate::graphs::product(&reference, &next, crate::graphs::ProductKind::Strong)
                .map_err(|e| inapplicable("strong-grid", e.to_string()))?;
        }
        if reference.n() != g.n() || reference.edges() != g.edges() {
            return Err(inapplicable(
                "strong-grid",
                "board is not the strong product of the given paths",
            ));
        }
        let d = dims.len();
        let mut offsets = Vec::new();
        for code in 0..3usize.pow(d as u32) {
            let mut c = code;
            let mut offset = vec![0i32; d];
            for i in (0..d).rev() {
                offset[i] = (c % 3) as i32 - 1;
                c /= 3;
            }
            if offset.iter().any(|&x| x != 0) {
                offsets.push(offset);
            }
        }
        Ok(StrongGridPolicy {
            dims: dims.to_vec(),
            offsets,
        })
    }

    fn coords_of(&self, v: Vertex) -> Vec<usize> {
        let mut rest = v as usize;
        let mut out = vec![0usize; self.dims.len()];
        for i in (0..self.dims.len()).rev() {
            out[i] = rest % self.dims[i];
            rest /= self.dims[i];
        }
        out
    }

    fn id_of(&self, coords: &[usize]) -> Vertex {
        let mut id = 0usize;
        for (i, &c) in coords.iter().enumerate() {
            id = id * self.dims[i] + c;
        }
        id as Vertex
    }

    fn targets(&self, president: Vertex) -> Placement {
        let p = self.coords_of(president);
        let mut out: Placement = self
            .offsets
            .iter()
            .map(|offset| {
                let coords: Vec<usize> = p
                    .iter()
                    .zip(offset)
                    .zip(&self.dims)
                    .map(|((&pc, &o), &dim)| (pc as i64 + o as i64).clamp(0, dim as i64 - 1) as usize)
                    .collect();
                self.id_of(&coords)
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl BodyguardPolicy for StrongGridPolicy {
    fn id(&self) -> &'static str {
        "strong-grid"
    }

    fn k(&self) -> usize {
        self.offsets.len()
    }

    fn initial_placement(&self) -> Placement {
        let center: Vec<usize> = self.dims.iter().map(|&d| d / 2).collect();
        self.targets(self.id_of(&center))
    }

    fn step(&self, placement: &Placement, president: Vertex) -> Placement {
        let n: usize = self.dims.iter().product();
        let anchor = (0..n as Vertex).find(|&q| self.targets(q) == *placement);
        if let Some(q) = anchor {
            let qc = self.coords_of(q);
            let pc = self.coords_of(president);
            let stepped: Vec<usize> = qc
                .iter()
                .zip(&pc)
                .map(|(&a, &b)| match a.cmp(&b) {
                    std::cmp::Ordering::Less => a + 1,
                    std::cmp::Ordering::Greater => a - 1,
                    std::cmp::Ordering::Equal => a,
                })
                .collect();
            return self.targets(self.id_of(&stepped));
        }
        // Foreign configuration (not reachable under this policy): plain
        // rank-aligned homing toward the evader's escort positions.
        let targets = self.targets(president);
        let mut next: Placement = placement
            .iter()
            .zip(&targets)
            .map(|(&t, &goal)| {
                let tc = self.coords_of(t);
                let gc = self.coords_of(goal);
                let stepped: Vec<usize> = tc
                    .iter()
                    .zip(&gc)
                    .map(|(&a, &b)| match a.cmp(&b) {
                        std::cmp::Ordering::Less => a + 1,
                        std::cmp::Ordering::Greater => a - 1,
                        std::cmp::Ordering::Equal => a,
                    })
                    .collect();
                self.id_of(&stepped)
            })
            .collect();
        next.sort_unstable();
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::Mode;
    use crate::graphs::family::{complete, complete_multipartite, cycle, path, star, tree_from_edges};
    use crate::policies::{playout, verify_bodyguard_policy, Termination};
    use crate::policies::evaders::StayPolicy;

    #[test]
    fn universal_wins_on_complete_graph() {
        let g = complete(4).unwrap();
        let policy = UniversalPolicy::new(g.clone()).unwrap();
        let verdict = verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn universal_wins_on_cycle_and_path() {
        let g = cycle(5).unwrap();
        let policy = UniversalPolicy::new(g.clone()).unwrap();
        assert!(verify_bodyguard_policy(&g, 4, &policy, Mode::Open).unwrap().holds);
        let g = path(4).unwrap();
        let policy = UniversalPolicy::new(g.clone()).unwrap();
        assert!(verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn universal_playout_surrounds_from_first_answer() {
        let g = complete(4).unwrap();
        let policy = UniversalPolicy::new(g.clone()).unwrap();
        let stay = StayPolicy;
        let run = playout(&g, &policy, &stay, Mode::Open, 100).unwrap();
        assert!(matches!(run.termination, Termination::Lasso { .. }));
        assert!(run.surround_flags.iter().all(|&f| f));
    }

    #[test]
    fn multipartite_k_and_verification() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        let policy = MultipartitePolicy::new(&g, &[2, 3]).unwrap();
        assert_eq!(policy.k(), 3);
        assert!(verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap().holds);
        let g = complete_multipartite(&[1, 2, 3]).unwrap();
        let policy = MultipartitePolicy::new(&g, &[1, 2, 3]).unwrap();
        assert_eq!(policy.k(), 5);
        assert!(verify_bodyguard_policy(&g, 5, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn multipartite_wrong_k_is_rejected() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        let policy = MultipartitePolicy::new(&g, &[2, 3]).unwrap();
        let err = verify_bodyguard_policy(&g, 2, &policy, Mode::Open).unwrap_err();
        assert!(matches!(err, PolicyError::KMismatch { expected: 3, got: 2, .. }));
    }

    #[test]
    fn tree_policy_on_star_and_double_star() {
        let g = star(4).unwrap();
        let policy = TreePolicy::new(g.clone()).unwrap();
        assert_eq!(policy.k(), 3);
        assert!(verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap().holds);

        let g = tree_from_edges(&[(0, 1), (1, 2), (1, 3), (0, 4), (0, 5)]).unwrap();
        let policy = TreePolicy::new(g.clone()).unwrap();
        assert_eq!(policy.k(), 4);
        assert!(verify_bodyguard_policy(&g, 4, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn tree_policy_on_spider() {
        // three legs of length two
        let g = tree_from_edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let policy = TreePolicy::new(g.clone()).unwrap();
        assert_eq!(policy.k(), 3);
        assert!(verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap().holds);
    }

    #[test]
    fn tree_policy_rejects_non_trees() {
        assert!(TreePolicy::new(cycle(4).unwrap()).is_err());
        assert!(TreePolicy::new(path(2).unwrap()).is_err());
    }

    #[test]
    fn cycle_policy_small_orders() {
        for n in [3usize, 4, 5] {
            let g = cycle(n).unwrap();
            let policy = CyclePolicy::new(&g, 2).unwrap();
            let verdict = verify_bodyguard_policy(&g, 2, &policy, Mode::Open).unwrap();
            assert!(verdict.holds, "two tokens should win on C_{n}");
        }
    }

    #[test]
    fn cycle_policy_three_tokens_on_long_cycles() {
        for n in [6usize, 7, 8, 10] {
            let g = cycle(n).unwrap();
            let policy = CyclePolicy::new(&g, 3).unwrap();
            let verdict = verify_bodyguard_policy(&g, 3, &policy, Mode::Open).unwrap();
            assert!(verdict.holds, "three tokens should win on C_{n}");
        }
    }

    #[test]
    fn cycle_policy_two_tokens_fail_beyond_five() {
        let g = cycle(8).unwrap();
        let policy = CyclePolicy::new(&g, 2).unwrap();
        let verdict = verify_bodyguard_policy(&g, 2, &policy, Mode::Open).unwrap();
        assert!(!verdict.holds);
        let cycle_states = verdict.witness_cycle.unwrap();
        assert!(!cycle_states.is_empty());
        // the witness cycle contains an unsafe evader-to-move state
        assert!(cycle_states.iter().any(|s| {
            s.turn == crate::arena::Turn::President
                && !crate::arena::surrounded(&g, &s.placement, s.president, Mode::Open)
        }));
    }

    #[test]
    fn strong_grid_policy_taxes_and_k() {
        let g = crate::graphs::product(
            &path(3).unwrap(),
            &path(3).unwrap(),
            crate::graphs::ProductKind::Strong,
        )
        .unwrap();
        let policy = StrongGridPolicy::new(&g, &[3, 3]).unwrap();
        assert_eq!(policy.k(), 8);
        // wrong k is a mismatch, as is a wrong board
        assert!(matches!(
            verify_bodyguard_policy(&g, 7, &policy, Mode::Open).unwrap_err(),
            PolicyError::KMismatch { .. }
        ));
        assert!(StrongGridPolicy::new(&g, &[3, 4]).is_err());
        assert!(StrongGridPolicy::new(&cycle(9).unwrap(), &[3, 3]).is_err());
    }
}
