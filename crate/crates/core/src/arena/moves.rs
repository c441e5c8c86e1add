//! Joint guard moves.
//!
//! A joint move sends every token to its closed neighbourhood. Successor
//! placements are generated as *distinct multisets*: a level-by-level
//! product over tokens with deduplication after each level, never the raw
//! `∏(deg+1)` assignment stream. The solver materializes one successor list
//! per placement; backward passes reuse the same rows because the joint-move
//! relation is symmetric on an undirected board.

use std::collections::BTreeSet;

use crate::graphs::{Graph, Vertex};

use super::{Arena, ArenaError, Placement};

/// Distinct successor multisets of `tokens`, sorted lexicographically.
/// Reference implementation on explicit token vectors; the packed
/// [`MoveTable`] path below is cross-checked against it.
pub fn joint_successors(g: &Graph, tokens: &[Vertex]) -> Vec<Placement> {
    let mut level: BTreeSet<Placement> = BTreeSet::new();
    level.insert(Vec::new());
    for &t in tokens {
        let mut next = BTreeSet::new();
        let mut dests: Vec<Vertex> = g.neighbors(t).to_vec();
        dests.push(t);
        for partial in &level {
            for &d in &dests {
                let mut ms = partial.clone();
                let pos = ms.partition_point(|&x| x <= d);
                ms.insert(pos, d);
                next.insert(ms);
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Materialized per-placement successor rows in CSR form, indexed by
/// placement rank. Row entries are successor placement ranks, ascending.
#[derive(Debug, Clone)]
pub struct MoveTable {
    offsets: Vec<u64>,
    data: Vec<u32>,
}

/// Per-row lengths plus concatenated entries for one rank chunk.
type RowChunk = (Vec<u64>, Vec<u32>);

impl MoveTable {
    /// Generates all rows. `workers > 1` splits the rank range into chunks;
    /// the output is identical for every worker count.
    pub fn build(arena: &Arena, workers: usize, entry_limit: u64) -> Result<Self, ArenaError> {
        let placements = arena.placement_count();
        if placements > u32::MAX as u64 {
            return Err(ArenaError::MoveLimit { limit: entry_limit });
        }
        let workers = workers.max(1).min(placements.max(1) as usize);
        let chunk = placements.div_ceil(workers.max(1) as u64).max(1);
        let ranges: Vec<(u64, u64)> = (0..workers as u64)
            .map(|w| (w * chunk, ((w + 1) * chunk).min(placements)))
            .filter(|(lo, hi)| lo < hi)
            .collect();

        let mut parts: Vec<RowChunk> = Vec::new();
        if ranges.len() <= 1 {
            parts.push(build_range(arena, 0, placements, entry_limit)?);
        } else {
            let results: Vec<Result<RowChunk, ArenaError>> =
                std::thread::scope(|scope| {
                    let handles: Vec<_> = ranges
                        .iter()
                        .map(|&(lo, hi)| {
                            scope.spawn(move || build_range(arena, lo, hi, entry_limit))
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().unwrap()).collect()
                });
            for r in results {
                parts.push(r?);
            }
        }

        let mut offsets = Vec::with_capacity(placements as usize + 1);
        let mut data = Vec::new();
        offsets.push(0u64);
        for (lens, rows) in parts {
            for len in lens {
                offsets.push(offsets.last().unwrap() + len);
            }
            data.extend_from_slice(&rows);
            if data.len() as u64 > entry_limit {
                return Err(ArenaError::MoveLimit { limit: entry_limit });
            }
        }
        debug_assert_eq!(*offsets.last().unwrap(), data.len() as u64);
        Ok(MoveTable { offsets, data })
    }

    /// Successor placement ranks of placement `prank`, ascending.
    #[inline]
    pub fn successors(&self, prank: u64) -> &[u32] {
        let lo = self.offsets[prank as usize] as usize;
        let hi = self.offsets[prank as usize + 1] as usize;
        &self.data[lo..hi]
    }

    pub fn entry_count(&self) -> u64 {
        self.data.len() as u64
    }
}

/// Builds rows for ranks `[lo, hi)`, returning per-row lengths and the
/// concatenated entries.
fn build_range(
    arena: &Arena,
    lo: u64,
    hi: u64,
    entry_limit: u64,
) -> Result<RowChunk, ArenaError> {
    let k = arena.k();
    let n = arena.graph().n();
    let mut lens = Vec::with_capacity((hi - lo) as usize);
    let mut data = Vec::new();
    let mut tokens: Placement = Vec::with_capacity(k);

    // Packed path: a partial multiset lives in a u128, one byte per token,
    // kept sorted. Applicable whenever ids fit a byte and k fits 16 bytes.
    let packed = n <= 256 && k <= 16;
    let mut level: Vec<u128> = Vec::new();
    let mut next: Vec<u128> = Vec::new();

    for prank in lo..hi {
        arena.codec().unrank_into(prank, &mut tokens);
        if packed {
            level.clear();
            level.push(0);
            for (i, &t) in tokens.iter().enumerate() {
                next.clear();
                for &ms in &level {
                    for &d in arena.president_moves(t) {
                        next.push(insert_sorted_byte(ms, i, d as u8));
                    }
                }
                next.sort_unstable();
                next.dedup();
                std::mem::swap(&mut level, &mut next);
            }
            let start = data.len();
            let mut buf: Placement = Vec::with_capacity(k);
            for &ms in &level {
                buf.clear();
                for i in 0..k {
                    buf.push((ms >> (8 * i) & 0xff) as Vertex);
                }
                data.push(arena.codec().rank_unchecked(&buf) as u32);
            }
            data[start..].sort_unstable();
            lens.push((data.len() - start) as u64);
        } else {
            let succs = joint_successors(arena.graph(), &tokens);
            lens.push(succs.len() as u64);
            for s in succs {
                data.push(arena.codec().rank_unchecked(&s) as u32);
            }
        }
        if data.len() as u64 > entry_limit {
            return Err(ArenaError::MoveLimit { limit: entry_limit });
        }
    }
    Ok((lens, data))
}

/// Inserts byte `d` into the sorted `len`-byte prefix of `ms`.
#[inline]
fn insert_sorted_byte(ms: u128, len: usize, d: u8) -> u128 {
    let mut pos = 0;
    while pos < len && (ms >> (8 * pos) & 0xff) as u8 <= d {
        pos += 1;
    }
    let low_mask: u128 = if pos == 0 { 0 } else { (1u128 << (8 * pos)) - 1 };
    let low = ms & low_mask;
    let high = (ms & !low_mask) << 8;
    low | high | ((d as u128) << (8 * pos))
}
