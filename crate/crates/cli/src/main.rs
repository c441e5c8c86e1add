//! Command-line front end.
//!
//! Exit codes: 0 = answer computed (including negative verdicts),
//! 1 = usage error, 2 = resource limit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use bodyguards_cli::cache::Cache;
use bodyguards_cli::run::{
    bodyguard_number_cached, build_guard_policy, build_president_policy, decide_cached,
    resolve_graph,
};
use bodyguards_cli::suites::{run_suite, SuiteOptions};
use bodyguards_core::arena::{Mode, Turn, DEFAULT_MOVE_LIMIT, DEFAULT_STATE_LIMIT};
use bodyguards_core::policies::{
    playout, verify_bodyguard_policy_limited, verify_president_policy_limited, PolicyError,
    Termination,
};
use bodyguards_core::solver::{
    cop_number, extract_strategy, solve_region, verify_certificate, Method, NumberError,
    SolveError, SolveOptions, StrategyCertificate,
};

#[derive(Parser)]
#[command(name = "bodyguards", version, about = "Exact solver and strategy toolkit for the guard-surround pursuit game", disable_help_subcommand = true)]
struct CliArgs {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct SolveArgs {
    /// Board spec, e.g. `cycle:7`, `cart(path:4,path:4)`, `tree:0-1;1-2`, `file:g.json`
    #[arg(long)]
    graph: String,
    /// Surround variant
    #[arg(long, default_value = "open", value_parser = parse_mode)]
    mode: Mode,
    /// Region computation
    #[arg(long, default_value = "exact", value_parser = parse_method)]
    method: Method,
    /// Ceiling on arena states
    #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
    state_limit: u64,
    /// Worker threads (env BODYGUARDS_WORKERS overrides the default)
    #[arg(long)]
    workers: Option<usize>,
    /// Verdict cache directory
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "open" => Ok(Mode::Open),
        "closed" => Ok(Mode::Closed),
        _ => Err("expected `open` or `closed`".into()),
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    match s {
        "exact" => Ok(Method::Exact),
        "two-phase" => Ok(Method::TwoPhase),
        _ => Err("expected `exact` or `two-phase`".into()),
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether k guards win on the board
    Decide {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        k: usize,
    },
    /// Compute the least winning guard count
    Number {
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Compute the capture-game cop number
    Copnumber {
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Solve and write a strategy certificate
    Strategy {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        k: usize,
        /// Certificate output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-check a certificate without solving
    VerifyCertificate {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Verify a scripted policy by cycle analysis
    VerifyPolicy {
        #[command(flatten)]
        solve: SolveArgs,
        /// universal | multipartite | tree | cycle | strong-grid |
        /// evader-cycle | evader-tree | evader-hypercube
        #[arg(long)]
        policy: String,
        #[arg(long)]
        k: usize,
        /// Witness-cycle output path (JSON lines of state keys)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deterministic playout of two policies
    Play {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        k: usize,
        /// Guard policy id
        #[arg(long)]
        bodyguards: String,
        /// Evader policy id (also: stay | greedy-escape | best-response)
        #[arg(long)]
        president: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Transcript output path (JSON lines, one state per line)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a registered suite
    Suite {
        /// paper-values | exhaustive-n6 | inequalities | policies
        #[arg(long)]
        name: String,
        /// Results JSON path
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        state_limit: u64,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_RESOURCE: u8 = 2;

fn main() -> ExitCode {
    let args = match CliArgs::try_parse() {
        Ok(args) => args,
        Err(e) => {
            // keep clap's rendered help/error text but own the exit code
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return ExitCode::from(if is_help { EXIT_OK } else { EXIT_USAGE });
        }
    };
    match dispatch(args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CmdError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CmdError {
    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => EXIT_USAGE,
            CmdError::Resource(_) => EXIT_RESOURCE,
            CmdError::Io(_) => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl ToString) -> CmdError {
    CmdError::Usage(msg.to_string())
}

impl From<SolveError> for CmdError {
    fn from(e: SolveError) -> Self {
        CmdError::Resource(e.to_string())
    }
}

impl From<PolicyError> for CmdError {
    fn from(e: PolicyError) -> Self {
        match e {
            PolicyError::StateLimit(_) => CmdError::Resource(e.to_string()),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

fn default_workers() -> usize {
    std::env::var("BODYGUARDS_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn solve_options(args: &SolveArgs) -> SolveOptions {
    SolveOptions {
        mode: args.mode,
        method: args.method,
        state_limit: args.state_limit,
        move_limit: DEFAULT_MOVE_LIMIT,
        workers: args.workers.unwrap_or_else(default_workers),
        degree_prune: true,
    }
}

fn open_cache(dir: &Option<PathBuf>) -> Result<Option<Cache>, CmdError> {
    Ok(match dir {
        Some(d) => Some(Cache::open(d)?),
        None => None,
    })
}

fn dispatch(args: CliArgs) -> Result<u8, CmdError> {
    match args.cmd {
        Cmd::Decide { solve, k } => {
            let (_, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            let cache = open_cache(&solve.cache_dir)?;
            let d = decide_cached(&g, k, &opts, cache.as_ref())?;
            println!(
                "{}",
                json!({
                    "win": d.win,
                    "witness": d.witness,
                    "escape_example": d.escape_example,
                })
            );
            Ok(EXIT_OK)
        }
        Cmd::Number { solve } => {
            let (_, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            let cache = open_cache(&solve.cache_dir)?;
            match bodyguard_number_cached(&g, &opts, cache.as_ref()) {
                Ok(b) => {
                    println!("{}", json!({ "B": b, "bracket": [b, b] }));
                    Ok(EXIT_OK)
                }
                Err(NumberError::Limit { lo, hi, source, .. }) => {
                    println!("{}", json!({ "B": null, "bracket": [lo, hi] }));
                    eprintln!("resource limit: {source}");
                    Ok(EXIT_RESOURCE)
                }
                Err(e) => Err(usage(e)),
            }
        }
        Cmd::Copnumber { solve } => {
            let (_, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            match cop_number(&g, &opts) {
                Ok(c) => {
                    println!("{}", json!({ "c": c }));
                    Ok(EXIT_OK)
                }
                Err(NumberError::Limit { lo, hi, source, .. }) => {
                    println!("{}", json!({ "c": null, "bracket": [lo, hi] }));
                    eprintln!("resource limit: {source}");
                    Ok(EXIT_RESOURCE)
                }
                Err(e) => Err(usage(e)),
            }
        }
        Cmd::Strategy { solve, k, out } => {
            let (_, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            let arena = bodyguards_core::arena::Arena::build(g.clone(), k, opts.state_limit)
                .map_err(SolveError::from)?;
            let moves =
                bodyguards_core::arena::MoveTable::build(&arena, opts.workers, opts.move_limit)
                    .map_err(SolveError::from)?;
            let region = solve_region(&arena, &moves, opts.mode, opts.method);
            let cert = extract_strategy(&arena, &moves, &region)
                .map_err(|e| usage(format!("no strategy: {e}")))?;
            std::fs::write(&out, cert.to_json())?;
            println!(
                "{}",
                json!({
                    "written": out,
                    "covered_states": cert.moves.len(),
                    "core_states": cert.core.len(),
                    "witness_placement": cert.witness_placement,
                })
            );
            Ok(EXIT_OK)
        }
        Cmd::VerifyCertificate { cert } => {
            let text = std::fs::read_to_string(&cert)?;
            let cert = StrategyCertificate::from_json(&text)
                .map_err(|e| usage(format!("unreadable certificate: {e}")))?;
            match verify_certificate(&cert) {
                Ok(report) => {
                    println!(
                        "{}",
                        json!({
                            "valid": true,
                            "covered_states": report.covered_states,
                            "core_states": report.core_states,
                            "play_graph_nodes": report.play_graph_nodes,
                        })
                    );
                }
                Err(e) => {
                    println!("{}", json!({ "valid": false, "error": e.to_string() }));
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::VerifyPolicy {
            solve,
            policy,
            k,
            out,
        } => {
            let (spec, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            let evader = policy.starts_with("evader-");
            let verdict = if evader {
                let p = build_president_policy(&policy, &g, k, &opts).map_err(usage)?;
                verify_president_policy_limited(&g, k, p.as_ref(), opts.mode, opts.state_limit)?
            } else {
                let p = build_guard_policy(&policy, &spec, &g, k).map_err(usage)?;
                verify_bodyguard_policy_limited(&g, k, p.as_ref(), opts.mode, opts.state_limit)?
            };
            if let (Some(path), Some(cycle)) = (&out, &verdict.witness_cycle) {
                let mut lines = String::new();
                for s in cycle {
                    lines.push_str(&json!({ "state": s.key() }).to_string());
                    lines.push('\n');
                }
                std::fs::write(path, lines)?;
            }
            println!(
                "{}",
                json!({
                    "policy": policy,
                    "role": if evader { "president" } else { "bodyguards" },
                    "holds": verdict.holds,
                    "verdict": match (evader, verdict.holds) {
                        (false, true) => "winning",
                        (false, false) => "losing",
                        (true, true) => "evading",
                        (true, false) => "caught",
                    },
                    "explored_states": verdict.explored_states,
                    "witness_cycle": verdict.witness_cycle.as_ref().map(|c| {
                        c.iter().map(|s| s.key()).collect::<Vec<_>>()
                    }),
                })
            );
            Ok(EXIT_OK)
        }
        Cmd::Play {
            solve,
            k,
            bodyguards,
            president,
            steps,
            out,
        } => {
            let (spec, g) = resolve_graph(&solve.graph).map_err(usage)?;
            let opts = solve_options(&solve);
            let guards = build_guard_policy(&bodyguards, &spec, &g, k).map_err(usage)?;
            if guards.k() != k {
                return Err(usage(format!(
                    "policy `{bodyguards}` plays k = {}, got --k {k}",
                    guards.k()
                )));
            }
            let evader = build_president_policy(&president, &g, k, &opts).map_err(usage)?;
            let run = playout(&g, guards.as_ref(), evader.as_ref(), opts.mode, steps)?;
            if let Some(path) = &out {
                let mut lines = String::new();
                let mut flag_iter = run.surround_flags.iter();
                for s in &run.states {
                    let surrounded = if s.turn == Turn::President {
                        flag_iter.next().copied()
                    } else {
                        None
                    };
                    lines.push_str(
                        &json!({ "state": s.key(), "surrounded": surrounded }).to_string(),
                    );
                    lines.push('\n');
                }
                std::fs::write(path, lines)?;
            }
            let tail_all_safe = match run.termination {
                Termination::Lasso { loop_start } => {
                    let mut flags = Vec::new();
                    let mut fi = 0usize;
                    for (i, s) in run.states.iter().enumerate() {
                        if s.turn == Turn::President {
                            if i >= loop_start {
                                flags.push(run.surround_flags[fi]);
                            }
                            fi += 1;
                        }
                    }
                    Some(flags.iter().all(|&f| f))
                }
                Termination::StepBudget => None,
            };
            println!(
                "{}",
                json!({
                    "steps": run.states.len(),
                    "termination": match run.termination {
                        Termination::Lasso { .. } => "lasso",
                        Termination::StepBudget => "budget",
                    },
                    "loop_start": match run.termination {
                        Termination::Lasso { loop_start } => Some(loop_start),
                        Termination::StepBudget => None,
                    },
                    "surround_checks": run.surround_flags.len(),
                    "surrounded_checks": run.surround_flags.iter().filter(|&&f| f).count(),
                    "loop_all_surrounded": tail_all_safe,
                })
            );
            Ok(EXIT_OK)
        }
        Cmd::Suite {
            name,
            out,
            workers,
            seed,
            state_limit,
            cache_dir,
        } => {
            let opts = SuiteOptions {
                workers: workers.unwrap_or_else(default_workers),
                seed,
                state_limit,
                move_limit: DEFAULT_MOVE_LIMIT,
                cache_dir,
            };
            let report = run_suite(&name, &opts).map_err(usage)?;
            if let Some(path) = &out {
                std::fs::write(path, report.to_json())?;
            }
            print!("{}", report.table());
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_USAGE })
        }
    }
}
