//! Exact solving, strategy synthesis, and policy verification for a
//! two-player token-surrounding pursuit game on finite simple graphs.
//!
//! One side controls `k` indistinguishable guard tokens, the other a single
//! evader token. Guards are placed first, the evader second, and the guards
//! move first; each turn every token may stay or move to an adjacent vertex.
//! The guards win when, from some turn on, they occupy the evader's whole
//! open neighbourhood at the end of every one of their turns (the closed
//! variant also requires the evader's own vertex).
//!
//! The crate is organized around four layers:
//! - [`graphs`]: boards — construction, a text DSL, products, retractions;
//! - [`arena`]: compact game-state encoding and legal-move generation;
//! - [`solver`]: exact fixpoint solving, guard numbers, cop numbers, and
//!   exportable strategy certificates;
//! - [`policies`]: scripted strategies for both sides, verified against the
//!   game semantics by cycle analysis rather than trusted.

pub mod arena;
pub mod graphs;
pub mod policies;
pub mod solver;
pub mod util;
