//! Altermatic lower bounds for chromatic numbers of general Kneser graphs.
//!
//! For a hypergraph `H` on `[n]` and `k >= 1`, `χ(KG(H)) >= n - alt(H, k) + k - 1`, where
//! `alt(H, k)` minimizes over vertex orderings the longest alternation of a sign vector whose
//! restricted Kneser graph is `(k-1)`-colorable. The crate computes that bound exactly, colors
//! small graphs exactly, and turns the combinatorial proof of the bound into an auditor:
//! handed a coloring of `KG(H)` with too few colors, [`proof::audit`] walks the proof's
//! path-following graph until it exposes two disjoint hyperedges of the same color.

pub mod altermatic;
pub mod colorer;
pub mod error;
pub mod hypercore;
pub mod kneser;
pub mod limits;
pub mod oracle;
pub mod par;
pub mod proof;
pub mod vset;

pub use altermatic::{
    alt_min, alt_sigma, feasible, lower_bound, verify_theorem, AltMinOptions, AltReport,
    OrderingSelection, SigmaMode, Verification,
};
pub use colorer::{chromatic_at_most, chromatic_number, is_proper, Coloring};
pub use error::{Error, Result};
pub use hypercore::{
    alt, apply_order, restrict, subset_of, support_size, Hypergraph, LinearOrder, Restriction,
    Sign, SignVector, SimpleGraph,
};
pub use kneser::{complete_uniform, kneser_graph, random_hypergraph, schrijver_hypergraph};
pub use limits::Limits;
pub use par::Parallelism;
pub use vset::VertexSet;
