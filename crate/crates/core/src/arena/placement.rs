//! Guard placements as sorted multisets with a dense combinatorial rank.
//!
//! A placement of `k` tokens over `n` vertices is a non-decreasing vector of
//! vertex ids; the rank is its index in lexicographic order over all
//! `C(n+k-1, k)` such multisets. Ranking is the state-id backbone of the
//! arena, so both directions are table-driven.

use thiserror::Error;

use crate::graphs::Vertex;

/// A sorted token multiset. Kept as a plain vector; invariants are enforced
/// at the ranking boundary.
pub type Placement = Vec<Vertex>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("tokens must be sorted non-decreasing")]
    Unsorted,
    #[error("token {v} out of range (n = {n})")]
    TokenOutOfRange { v: Vertex, n: usize },
    #[error("expected {want} tokens, got {got}")]
    WrongArity { want: usize, got: usize },
    #[error("rank {rank} out of range (count = {count})")]
    RankOutOfRange { rank: u64, count: u64 },
    #[error("placement space overflows: C({n}+{k}-1, {k})")]
    Overflow { n: usize, k: usize },
}

/// Ranking tables for a fixed `(n, k)`.
#[derive(Debug, Clone)]
pub struct PlacementCodec {
    n: usize,
    k: usize,
    count: u64,
    /// `prefix[i][v]` = number of size-`(k-i)` multisets over `[0, n)` whose
    /// first token is `< v`, given position `i` chooses next. Row-major,
    /// `k` rows of `n + 1` entries.
    prefix: Vec<u64>,
}

/// `C(m + j - 1, j)`: multisets of size `j` over `m` values. `None` on overflow.
fn multiset_count(m: usize, j: usize) -> Option<u64> {
    if j == 0 {
        return Some(1);
    }
    if m == 0 {
        return Some(0);
    }
    // C(m+j-1, j) computed incrementally with overflow checks.
    let mut acc: u64 = 1;
    for i in 0..j {
        acc = acc.checked_mul((m + j - 1 - i) as u64)?;
        acc /= (i + 1) as u64;
    }
    Some(acc)
}

impl PlacementCodec {
    pub fn new(n: usize, k: usize) -> Result<Self, RankError> {
        let count = multiset_count(n, k).ok_or(RankError::Overflow { n, k })?;
        let mut prefix = vec![0u64; k * (n + 1)];
        for i in 0..k {
            let tail = k - 1 - i;
            let row = &mut prefix[i * (n + 1)..(i + 1) * (n + 1)];
            for v in 0..n {
                let below = multiset_count(n - v, tail).ok_or(RankError::Overflow { n, k })?;
                row[v + 1] = row[v]
                    .checked_add(below)
                    .ok_or(RankError::Overflow { n, k })?;
            }
        }
        Ok(PlacementCodec { n, k, count, prefix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total number of placements, `C(n+k-1, k)`.
    pub fn count(&self) -> u64 {
        self.count
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.prefix[i * (self.n + 1)..(i + 1) * (self.n + 1)]
    }

    pub fn rank(&self, tokens: &[Vertex]) -> Result<u64, RankError> {
        if tokens.len() != self.k {
            return Err(RankError::WrongArity {
                want: self.k,
                got: tokens.len(),
            });
        }
        let mut rank = 0u64;
        let mut lo: Vertex = 0;
        for (i, &t) in tokens.iter().enumerate() {
            if t < lo {
                return Err(RankError::Unsorted);
            }
            if t as usize >= self.n {
                return Err(RankError::TokenOutOfRange { v: t, n: self.n });
            }
            let row = self.row(i);
            rank += row[t as usize] - row[lo as usize];
            lo = t;
        }
        Ok(rank)
    }

    /// Rank without validation; hot path for already-sorted in-range tokens.
    #[inline]
    pub fn rank_unchecked(&self, tokens: &[Vertex]) -> u64 {
        let mut rank = 0u64;
        let mut lo = 0usize;
        for (i, &t) in tokens.iter().enumerate() {
            let row = self.row(i);
            rank += row[t as usize] - row[lo];
            lo = t as usize;
        }
        rank
    }

    pub fn unrank(&self, mut rank: u64) -> Result<Placement, RankError> {
        if rank >= self.count {
            return Err(RankError::RankOutOfRange {
                rank,
                count: self.count,
            });
        }
        let mut out = Vec::with_capacity(self.k);
        let mut lo = 0usize;
        for i in 0..self.k {
            let row = self.row(i);
            // Largest v with row[v] - row[lo] <= rank; rows are non-decreasing.
            let base = row[lo];
            let mut v = lo;
            while v + 1 < self.n && row[v + 1] - base <= rank {
                v += 1;
            }
            rank -= row[v] - base;
            out.push(v as Vertex);
            lo = v;
        }
        debug_assert_eq!(rank, 0);
        Ok(out)
    }

    /// Writes the unranked tokens into `out` (cleared first). Avoids the
    /// per-call allocation of [`Self::unrank`] in solver loops.
    pub fn unrank_into(&self, mut rank: u64, out: &mut Placement) {
        out.clear();
        let mut lo = 0usize;
        for i in 0..self.k {
            let row = self.row(i);
            let base = row[lo];
            let mut v = lo;
            while v + 1 < self.n && row[v + 1] - base <= rank {
                v += 1;
            }
            rank -= row[v] - base;
            out.push(v as Vertex);
            lo = v;
        }
        debug_assert_eq!(rank, 0);
    }
}
