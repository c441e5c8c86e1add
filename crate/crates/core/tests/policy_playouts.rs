//! Long randomized playouts: policies must never emit an illegal move on
//! their precondition domains, whatever the other side does. The random
//! sides are seeded, so failures replay.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::cell::RefCell;

use bodyguards_core::arena::{joint_successors, Mode, Placement};
use bodyguards_core::graphs::family::{
    complete, complete_multipartite, cycle, hypercube, path, tree_from_edges,
};
use bodyguards_core::graphs::{product, Graph, ProductKind, Vertex};
use bodyguards_core::policies::evaders::{CycleEvader, HypercubeEvader, TreeEvader};
use bodyguards_core::policies::guards::{
    CyclePolicy, MultipartitePolicy, StrongGridPolicy, TreePolicy, UniversalPolicy,
};
use bodyguards_core::policies::{playout, BodyguardPolicy, PresidentPolicy, Termination};

struct RandomPresident {
    g: Graph,
    rng: RefCell<StdRng>,
}

impl RandomPresident {
    fn new(g: Graph, seed: u64) -> Self {
        RandomPresident {
            g,
            rng: RefCell::new(StdRng::seed_from_u64(seed)),
        }
    }
}

impl PresidentPolicy for RandomPresident {
    fn id(&self) -> &'static str {
        "random-president"
    }

    fn initial_vertex(&self, _placement: &Placement) -> Vertex {
        self.rng.borrow_mut().random_range(0..self.g.n() as Vertex)
    }

    fn step(&self, _placement: &Placement, president: Vertex) -> Vertex {
        let mut moves = self.g.neighbors(president).to_vec();
        moves.push(president);
        moves[self.rng.borrow_mut().random_range(0..moves.len())]
    }
}

struct RandomGuards {
    g: Graph,
    start: Placement,
    rng: RefCell<StdRng>,
}

impl RandomGuards {
    fn new(g: Graph, start: Placement, seed: u64) -> Self {
        RandomGuards {
            g,
            start,
            rng: RefCell::new(StdRng::seed_from_u64(seed)),
        }
    }
}

impl BodyguardPolicy for RandomGuards {
    fn id(&self) -> &'static str {
        "random-guards"
    }

    fn k(&self) -> usize {
        self.start.len()
    }

    fn initial_placement(&self) -> Placement {
        self.start.clone()
    }

    fn step(&self, placement: &Placement, _president: Vertex) -> Placement {
        let succ = joint_successors(&self.g, placement);
        succ[self.rng.borrow_mut().random_range(0..succ.len())].clone()
    }
}

/// Drives a guard policy against seeded random evaders for a total of at
/// least 10^4 steps; `playout` itself rejects any illegal policy move.
fn exercise_guard_policy(g: &Graph, policy: &dyn BodyguardPolicy) {
    let mut total = 0usize;
    let mut seed = 17u64;
    while total < 10_000 {
        let evader = RandomPresident::new(g.clone(), seed);
        let run = playout(g, policy, &evader, Mode::Open, 2_000)
            .expect("guard policy emitted an illegal move");
        total += run.states.len();
        // lassos are legal runs too; only count real steps
        if let Termination::Lasso { .. } = run.termination {
            total += 1;
        }
        seed += 1;
    }
}

fn exercise_evader_policy(g: &Graph, k: usize, policy: &dyn PresidentPolicy) {
    let codec = bodyguards_core::arena::PlacementCodec::new(g.n(), k).unwrap();
    let mut total = 0usize;
    let mut seed = 91u64;
    while total < 10_000 {
        let prank = seed % codec.count();
        let start = codec.unrank(prank).unwrap();
        let guards = RandomGuards::new(g.clone(), start, seed);
        let run = playout(g, &guards, policy, Mode::Open, 2_000)
            .expect("evader policy emitted an illegal move");
        total += run.states.len();
        seed += 1;
    }
}

#[test]
fn universal_policy_moves_stay_legal() {
    for g in [complete(5).unwrap(), cycle(6).unwrap(), path(5).unwrap()] {
        let policy = UniversalPolicy::new(g.clone()).unwrap();
        exercise_guard_policy(&g, &policy);
    }
}

#[test]
fn multipartite_policy_moves_stay_legal() {
    let g = complete_multipartite(&[2, 3]).unwrap();
    let policy = MultipartitePolicy::new(&g, &[2, 3]).unwrap();
    exercise_guard_policy(&g, &policy);
}

#[test]
fn tree_policy_moves_stay_legal() {
    let g = tree_from_edges(&[(0, 1), (1, 2), (1, 3), (0, 4), (0, 5)]).unwrap();
    let policy = TreePolicy::new(g.clone()).unwrap();
    exercise_guard_policy(&g, &policy);
}

#[test]
fn cycle_policy_moves_stay_legal() {
    for (n, k) in [(5usize, 2usize), (8, 3), (11, 3)] {
        let g = cycle(n).unwrap();
        let policy = CyclePolicy::new(&g, k).unwrap();
        exercise_guard_policy(&g, &policy);
    }
}

#[test]
fn strong_grid_policy_moves_stay_legal() {
    let g = product(&path(3).unwrap(), &path(3).unwrap(), ProductKind::Strong).unwrap();
    let policy = StrongGridPolicy::new(&g, &[3, 3]).unwrap();
    exercise_guard_policy(&g, &policy);
}

#[test]
fn evader_policies_moves_stay_legal() {
    let g = cycle(8).unwrap();
    let policy = CycleEvader::new(&g, 2).unwrap();
    exercise_evader_policy(&g, 2, &policy);

    let g = tree_from_edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    let policy = TreeEvader::new(g.clone(), 2).unwrap();
    exercise_evader_policy(&g, 2, &policy);

    let g = hypercube(3).unwrap();
    let policy = HypercubeEvader::new(&g, 3).unwrap();
    exercise_evader_policy(&g, 3, &policy);
}
