//! Exact anti-van der Waerden numbers of finite graphs.
//!
//! For a graph `G` and an integer `k >= 2`, a *k-term progression* (k-AP) is
//! a sequence of k distinct vertices whose consecutive graph distances are
//! all equal to some finite d >= 1. An exact r-coloring uses each of the r
//! colors at least once, and a k-AP is *rainbow* when its vertices carry k
//! distinct colors. The anti-van der Waerden number `aw(G,k)` is the least r
//! such that every exact r-coloring of `G` contains a rainbow k-AP, with
//! `aw(G,k) = n + 1` when no rainbow k-AP can be forced at all.
//!
//! The crate computes `aw` exactly by a pruned depth-first search over exact
//! colorings ([`solver`]), evaluates the known closed forms for structured
//! families ([`formulas`]), constructs the certified extremal colorings
//! behind the lower bounds ([`colorings`]), analyzes tree structure
//! ([`tree`]), bridges distance colorings to Ramsey-style path search
//! ([`ramsey`]), and replays the published results claim by claim on
//! exhaustive corpora ([`verify`]) or probes open conjectures ([`scan`]).
//!
//! ```
//! use awgraph::generators::{generate, FamilySpec};
//! use awgraph::solver::{aw, SearchConfig};
//!
//! let g = generate(&FamilySpec::parse("path:9").unwrap()).unwrap();
//! let res = aw(&g, 3, &SearchConfig::default()).unwrap();
//! assert_eq!(res.aw, 4);
//! // The witness is an exact 3-coloring of P_9 with no rainbow 3-AP.
//! assert!(res.extremal.is_some());
//! ```
//!
//! The `examples/` directory is the guided tour; each example is runnable
//! with `cargo run --example <name>`:
//!
//! - `compute_aw`: solve families or graph files, with witness colorings
//! - `enumerate_aps`: list the k-term progressions of a graph
//! - `extremal_enumeration`: all rainbow-free colorings, raw or up to symmetry
//! - `certified_colorings`: the constructions behind the lower bounds
//! - `bounds_report`: every bound rule that fires for a graph
//! - `tree_structure`: diameters, bijacent vertices, leaf reductions, audits
//! - `distance_ramsey`: representative-based rainbow search via path Ramsey
//! - `prime_table`: regenerate the bundled cycle prime classification table
//! - `verify_suite`: run the verification suites end to end
//! - `scan_conjectures`: budgeted scans of the open conjectures
//! - `graph_io`: the text format for graphs and colorings

// Vertex loops often index several parallel arrays at once; enumerate()
// rewrites would obscure which array drives the bound.
#![allow(clippy::needless_range_loop)]

pub mod ap;
pub mod coloring;
pub mod colorings;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod ramsey;
pub mod scan;
pub mod solver;
pub mod tree;
pub mod verify;

pub use crate::coloring::Coloring;
pub use crate::error::{Error, Result};
pub use crate::graph::Graph;
pub use crate::solver::{aw, AwResult, SearchConfig};
