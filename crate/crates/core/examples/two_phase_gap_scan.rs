//! Scans boards for any strict gap between the exact winning region and the
//! two-phase under-approximation (attractor of the eternal core). The
//! two-phase method is only proven sound here, not complete; this probe
//! reports any instance where the two differ. Run with `--release`.
use bodyguards_core::arena::{Arena, Mode, MoveTable};
use bodyguards_core::graphs::enumerate::labeled_graphs;
use bodyguards_core::graphs::family::{cycle, hypercube, path};
use bodyguards_core::graphs::{product, ProductKind};
use bodyguards_core::solver::{cobuchi_region, initial_win_placement, two_phase_region};

fn main() {
    let mut boards = Vec::new();
    for n in 2..=5 {
        boards.extend(labeled_graphs(n, true));
    }
    boards.push(cycle(6).unwrap());
    boards.push(cycle(8).unwrap());
    boards.push(hypercube(3).unwrap());
    boards.push(product(&path(3).unwrap(), &path(3).unwrap(), ProductKind::Cartesian).unwrap());
    boards.push(product(&path(2).unwrap(), &path(4).unwrap(), ProductKind::Cartesian).unwrap());
    boards.push(product(&path(3).unwrap(), &path(3).unwrap(), ProductKind::Strong).unwrap());

    let mut instances = 0u64;
    let mut region_gaps = 0u64;
    let mut verdict_gaps = 0u64;
    for g in &boards {
        let kmax = (g.n() - 1).min(4);
        for k in 1..=kmax {
            for mode in [Mode::Open, Mode::Closed] {
                let Ok(arena) = Arena::build(g.clone(), k, 2_000_000) else { continue };
                let Ok(moves) = MoveTable::build(&arena, 2, 20_000_000) else { continue };
                let exact = cobuchi_region(&arena, &moves, mode);
                let under = two_phase_region(&arena, &moves, mode);
                assert!(under.members.is_subset_of(&exact.members));
                instances += 1;
                if under.members.count_ones() != exact.members.count_ones() {
                    region_gaps += 1;
                    println!(
                        "region gap: {:?} k={k} {mode:?}: exact {} vs two-phase {}",
                        g,
                        exact.members.count_ones(),
                        under.members.count_ones()
                    );
                }
                if initial_win_placement(&arena, &exact).is_some()
                    != initial_win_placement(&arena, &under).is_some()
                {
                    verdict_gaps += 1;
                    println!("verdict gap: {:?} k={k} {mode:?}", g);
                }
            }
        }
    }
    println!("instances: {instances}, region gaps: {region_gaps}, verdict gaps: {verdict_gaps}");
}
