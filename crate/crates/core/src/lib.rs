//! Vertex connectivity of direct (Kronecker) products of graphs.
//!
//! For every graph `G` and `n >= 3`,
//! `κ(G × K_n) = min{ n·κ(G), (n − 1)·δ(G) }`. The crate provides:
//!
//! - [`graph`]: immutable simple graphs with the structural predicates
//!   needed here (components, odd cycles, vertex deletion).
//! - [`product`]: complete graphs, direct products and their layers.
//! - [`connectivity`]: exact κ via vertex-split max flow, lexicographically
//!   smallest minimum cuts, and a brute-force oracle.
//! - [`theorem`]: the closed form, separators attaining it, the layer
//!   quotient `G*` and executable checks of the supporting lemmas.
//! - [`io`], [`random`], [`report`], [`sweep`]: graph6 / edge-list I/O,
//!   seeded generators, JSON-lines reports and verification sweeps.

pub mod connectivity;
pub mod error;
pub mod graph;
pub mod io;
pub mod product;
pub mod random;
pub mod report;
pub mod sweep;
pub mod theorem;

pub use connectivity::{
    brute_force_kappa, is_separator, kappa, min_vertex_cut, CutWitness, Residual,
};
pub use error::{Error, Result};
pub use graph::{Graph, OddCycleStatus, Vertex};
pub use io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use product::{complete_graph, direct_product, product_with_complete, Layer, ProductGraph};
pub use report::{Verdict, VerificationReport};
pub use sweep::{run_sweep, SweepConfig, SweepMode};
pub use theorem::{
    build_quotient, formula_kappa_product, kappa_product_fast, witness_cut, Branch, FormulaResult,
    Oracle, ProductCut, QuotientGraph, WitnessBranch,
};
