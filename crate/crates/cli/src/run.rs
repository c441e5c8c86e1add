//! Shared command plumbing: board resolution, cached solving, and policy
//! construction from CLI identifiers.

use bodyguards_core::arena::{Arena, Mode, MoveTable};
use bodyguards_core::graphs::{parse_graph_spec, Graph, GraphSpec, ProductKind};
use bodyguards_core::policies::evaders::{
    CycleEvader, GreedyEscape, HypercubeEvader, RegionResponse, StayPolicy, TreeEvader,
};
use bodyguards_core::policies::guards::{
    CyclePolicy, MultipartitePolicy, StrongGridPolicy, TreePolicy, UniversalPolicy,
};
use bodyguards_core::policies::{BodyguardPolicy, PresidentPolicy};
use bodyguards_core::solver::{
    decide, degree_lower_bound, solve_region, Decision, Method, NumberError, Refutation,
    SolveError, SolveOptions,
};

use crate::cache::{Cache, CachedDecision};

pub fn resolve_graph(spec_text: &str) -> Result<(GraphSpec, Graph), String> {
    let spec = parse_graph_spec(spec_text).map_err(|e| e.to_string())?;
    let graph = spec.build().map_err(|e| e.to_string())?;
    Ok((spec, graph))
}

fn summarize(d: &Decision) -> CachedDecision {
    CachedDecision {
        win: d.win,
        witness: d.witness.clone(),
        escape_example: match &d.refutation {
            Some(Refutation::ParkAtMaxDegree(v)) => Some(*v),
            Some(Refutation::Region(r)) => r.escape_vertex(0),
            None => None,
        },
    }
}

/// `decide` with verdict caching. Degree-pruned losses are recomputed rather
/// than cached; they cost nothing.
pub fn decide_cached(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
    cache: Option<&Cache>,
) -> Result<CachedDecision, SolveError> {
    if opts.degree_prune && k < degree_lower_bound(g, opts.mode) {
        return Ok(summarize(&decide(g, k, opts)?));
    }
    if let Some(cache) = cache {
        if let Some(hit) = cache.lookup(g, k, opts.mode, opts.method) {
            return Ok(hit);
        }
    }
    let summary = summarize(&decide(g, k, opts)?);
    if let Some(cache) = cache {
        let _ = cache.store(g, k, opts.mode, opts.method, &summary);
    }
    Ok(summary)
}

/// Least winning token count, through the cache.
pub fn bodyguard_number_cached(
    g: &Graph,
    opts: &SolveOptions,
    cache: Option<&Cache>,
) -> Result<usize, NumberError> {
    let upper = match opts.mode {
        Mode::Open => g.n().saturating_sub(1),
        Mode::Closed => g.n(),
    };
    let start = if opts.degree_prune {
        degree_lower_bound(g, opts.mode)
    } else {
        0
    };
    for k in start..=upper {
        match decide_cached(g, k, opts, cache) {
            Ok(d) if d.win => return Ok(k),
            Ok(_) => {}
            Err(source) => {
                return Err(NumberError::Limit {
                    k,
                    lo: k,
                    hi: upper,
                    source,
                })
            }
        }
    }
    if g.n() == 0 {
        return Ok(0);
    }
    Err(NumberError::Exhausted)
}

/// Flattens a spec of nested strong products of paths into path orders,
/// in id-significance order. Row-major ids make the nesting shape
/// irrelevant.
pub fn strong_path_dims(spec: &GraphSpec) -> Option<Vec<usize>> {
    match spec {
        GraphSpec::Path(n) => Some(vec![*n]),
        GraphSpec::Product(ProductKind::Strong, a, b) => {
            let mut dims = strong_path_dims(a)?;
            dims.extend(strong_path_dims(b)?);
            Some(dims)
        }
        _ => None,
    }
}

pub fn build_guard_policy(
    id: &str,
    spec: &GraphSpec,
    g: &Graph,
    k: usize,
) -> Result<Box<dyn BodyguardPolicy>, String> {
    match id {
        "universal" => Ok(Box::new(UniversalPolicy::new(g.clone()).map_err(|e| e.to_string())?)),
        "multipartite" => {
            let GraphSpec::KPartite(parts) = spec else {
                return Err("policy `multipartite` needs a kpartite:... board spec".into());
            };
            Ok(Box::new(
                MultipartitePolicy::new(g, parts).map_err(|e| e.to_string())?,
            ))
        }
        "tree" => Ok(Box::new(TreePolicy::new(g.clone()).map_err(|e| e.to_string())?)),
        "cycle" => Ok(Box::new(CyclePolicy::new(g, k).map_err(|e| e.to_string())?)),
        "strong-grid" => {
            let dims = strong_path_dims(spec)
                .ok_or("policy `strong-grid` needs a strong(path:..,path:..) board spec")?;
            Ok(Box::new(
                StrongGridPolicy::new(g, &dims).map_err(|e| e.to_string())?,
            ))
        }
        other => Err(format!("unknown bodyguard policy `{other}`")),
    }
}

pub fn build_president_policy(
    id: &str,
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<Box<dyn PresidentPolicy>, String> {
    match id {
        "evader-cycle" => Ok(Box::new(CycleEvader::new(g, k).map_err(|e| e.to_string())?)),
        "evader-tree" => Ok(Box::new(
            TreeEvader::new(g.clone(), k).map_err(|e| e.to_string())?,
        )),
        "evader-hypercube" => Ok(Box::new(
            HypercubeEvader::new(g, k).map_err(|e| e.to_string())?,
        )),
        "stay" => Ok(Box::new(StayPolicy)),
        "greedy-escape" => Ok(Box::new(GreedyEscape::new(g.clone()))),
        "best-response" => {
            let arena =
                Arena::build(g.clone(), k, opts.state_limit).map_err(|e| e.to_string())?;
            let moves =
                MoveTable::build(&arena, opts.workers, opts.move_limit).map_err(|e| e.to_string())?;
            let region = solve_region(&arena, &moves, opts.mode, opts.method);
            Ok(Box::new(RegionResponse::new(arena, region)))
        }
        other => Err(format!("unknown president policy `{other}`")),
    }
}

/// Exposed for reporting: `exact` / `two-phase` flag spellings.
pub fn method_name(method: Method) -> &'static str {
    match method {
        Method::Exact => "exact",
        Method::TwoPhase => "two-phase",
    }
}
