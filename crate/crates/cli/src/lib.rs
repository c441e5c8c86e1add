//! Library side of the command-line front end: the verdict cache, the
//! reproduction suites, and shared command plumbing. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod cache;
pub mod run;
pub mod suites;
