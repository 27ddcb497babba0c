//! Three small declarative engines and the contest problems built on them.
//!
//! - [`fd`]: finite-domain variables over integer intervals, bounds
//!   propagation for `|x2*y3 - x3*y2| = a`, and depth-first labeling.
//! - [`tabling`]: memo tables for recursive evaluators, either caching one
//!   value per key or keeping the minimum over all derivations.
//! - [`planner`]: iterative-deepening search for a cheapest plan under a
//!   resource limit, with a per-bound visited-state table.
//!
//! [`problems`] maps each contest problem onto one engine, [`oracles`] holds
//! brute-force references for cross-checking, [`io`] reads and writes the
//! contest file formats and [`harness`] ties them together for the CLI.

pub mod fd;
pub mod gen;
pub mod harness;
pub mod io;
pub mod oracles;
pub mod planner;
pub mod problems;
pub mod tabling;

pub use harness::{Engine, Problem};
