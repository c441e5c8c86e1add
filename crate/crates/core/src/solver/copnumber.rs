//! Classical capture game on the same arena machinery.
//!
//! Cops win by co-locating a cop with the robber at any point; that makes
//! the objective plain alternating reachability into the co-location states,
//! solved with one backward attractor per token count. Conventions: cops
//! place first, robber places with full knowledge, cops move first, both
//! sides may stay.

use crate::arena::{Arena, MoveTable, Placement, Turn};
use crate::graphs::{Graph, Vertex};
use crate::util::BitVec;

use super::{attractor, NumberError, SolveError, SolveOptions};

fn cop_win(g: &Graph, k: usize, opts: &SolveOptions) -> Result<bool, SolveError> {
    let arena = Arena::build(g.clone(), k, opts.state_limit)?;
    let moves = MoveTable::build(&arena, opts.workers, opts.move_limit)?;
    let n = g.n();
    let states = arena.state_count() as usize;
    let mut target = BitVec::zeros(states);
    let mut tokens: Placement = Vec::with_capacity(k);
    for prank in 0..arena.placement_count() {
        arena.codec().unrank_into(prank, &mut tokens);
        for &t in &tokens {
            target.set(arena.state_id(prank, t, Turn::Bodyguards), true);
            target.set(arena.state_id(prank, t, Turn::President), true);
        }
    }
    let attr = attractor(&arena, &moves, &target);
    Ok((0..arena.placement_count()).any(|prank| {
        (0..n as Vertex).all(|r| attr.get(arena.state_id(prank, r, Turn::Bodyguards)))
    }))
}

/// Least number of cops that capture the robber on `g`. Zero only on the
/// empty vertex set; `n` cops always suffice (the robber is placed onto one).
pub fn cop_number(g: &Graph, opts: &SolveOptions) -> Result<usize, NumberError> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=g.n() {
        match cop_win(g, k, opts) {
            Ok(true) => return Ok(k),
            Ok(false) => {}
            Err(source) => {
                return Err(NumberError::Limit {
                    k,
                    lo: k,
                    hi: g.n(),
                    source,
                })
            }
        }
    }
    Err(NumberError::Exhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::family::{complete, cycle, path, star, tree_from_edges};
    use crate::graphs::{product, ProductKind};

    #[test]
    fn trees_need_one_cop() {
        let opts = SolveOptions::default();
        assert_eq!(cop_number(&path(6).unwrap(), &opts).unwrap(), 1);
        assert_eq!(cop_number(&star(5).unwrap(), &opts).unwrap(), 1);
        let spider =
            tree_from_edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(cop_number(&spider, &opts).unwrap(), 1);
    }

    #[test]
    fn long_cycles_need_two() {
        let opts = SolveOptions::default();
        assert_eq!(cop_number(&cycle(3).unwrap(), &opts).unwrap(), 1);
        assert_eq!(cop_number(&cycle(4).unwrap(), &opts).unwrap(), 2);
        assert_eq!(cop_number(&cycle(6).unwrap(), &opts).unwrap(), 2);
    }

    #[test]
    fn complete_graphs_need_one() {
        let opts = SolveOptions::default();
        assert_eq!(cop_number(&complete(5).unwrap(), &opts).unwrap(), 1);
        assert_eq!(cop_number(&path(1).unwrap(), &opts).unwrap(), 1);
    }

    #[test]
    fn grid_needs_two() {
        let opts = SolveOptions::default();
        let grid = product(&path(3).unwrap(), &path(4).unwrap(), ProductKind::Cartesian).unwrap();
        assert_eq!(cop_number(&grid, &opts).unwrap(), 2);
    }

    #[test]
    fn king_grid_needs_one() {
        let opts = SolveOptions::default();
        let king = product(&path(3).unwrap(), &path(3).unwrap(), ProductKind::Strong).unwrap();
        assert_eq!(cop_number(&king, &opts).unwrap(), 1);
    }

    #[test]
    fn disconnected_board_needs_one_per_component() {
        let opts = SolveOptions::default();
        let g = crate::graphs::Graph::edgeless(3);
        assert_eq!(cop_number(&g, &opts).unwrap(), 3);
    }
}
