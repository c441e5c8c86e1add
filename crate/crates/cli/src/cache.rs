//! Verdict cache: one write-once JSON file per solved query, keyed by the
//! board fingerprint plus every solve parameter and the solver version. The
//! canonical edge list is stored alongside so a fingerprint collision can
//! never alias two boards.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use bodyguards_core::arena::Mode;
use bodyguards_core::graphs::{Graph, Vertex};
use bodyguards_core::solver::Method;

pub const SOLVER_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CachedDecision {
    pub win: bool,
    pub witness: Option<Vec<Vertex>>,
    /// For losses: an evader start defeating the smallest-rank placement
    /// (or any placement, when the degree prune applied).
    pub escape_example: Option<Vertex>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    fingerprint: String,
    canonical: String,
    k: usize,
    mode: Mode,
    method: Method,
    version: String,
    decision: CachedDecision,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    fn path_for(&self, g: &Graph, k: usize, mode: Mode, method: Method) -> PathBuf {
        let mode = match mode {
            Mode::Open => "open",
            Mode::Closed => "closed",
        };
        let method = match method {
            Method::Exact => "exact",
            Method::TwoPhase => "twophase",
        };
        self.dir.join(format!(
            "{}-k{}-{}-{}-v{}.json",
            g.fingerprint(),
            k,
            mode,
            method,
            SOLVER_VERSION
        ))
    }

    pub fn lookup(&self, g: &Graph, k: usize, mode: Mode, method: Method) -> Option<CachedDecision> {
        let text = std::fs::read_to_string(self.path_for(g, k, mode, method)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        // every key field must match exactly, including the board itself
        (entry.canonical == g.canonical_string()
            && entry.k == k
            && entry.mode == mode
            && entry.method == method
            && entry.version == SOLVER_VERSION)
            .then_some(entry.decision)
    }

    /// Write-once with atomic rename; concurrent writers of the same key
    /// produce identical content, so the race is harmless.
    pub fn store(
        &self,
        g: &Graph,
        k: usize,
        mode: Mode,
        method: Method,
        decision: &CachedDecision,
    ) -> std::io::Result<()> {
        let entry = CacheEntry {
            fingerprint: g.fingerprint(),
            canonical: g.canonical_string(),
            k,
            mode,
            method,
            version: SOLVER_VERSION.to_string(),
            decision: decision.clone(),
        };
        let target = self.path_for(g, k, mode, method);
        let tmp = target.with_extension(format!("tmp.{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_string(&entry).expect("serializable"))?;
        std::fs::rename(&tmp, &target)?;
        Ok(())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}
