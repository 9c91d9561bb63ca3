//! Robust MST covers.
//!
//! For a weighted complete graph `G` and `k >= 1`, `M_k(G)` is the union of
//! the minimum spanning trees of every induced subgraph left after deleting
//! `k - 1` vertices. This crate computes it two ways (a generalized Kruskal
//! scan driven by vertex-connectivity queries, and direct enumeration),
//! and provides the surrounding tooling: k-construction orders, edge-maximal
//! extension, weight embeddings, k-minimality, and instance generators.
//!
//! ```
//! use mkcover::{cover::mk_fast, generators::fixture_c4};
//!
//! let report = mk_fast(&fixture_c4(), 2).unwrap();
//! assert_eq!(report.cover_size(), 4);
//! assert_eq!(report.bound, 5);
//! ```

pub mod connectivity;
pub mod constructible;
pub mod cover;
pub mod error;
pub mod generators;
pub mod graph;
pub mod mst;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, SimpleGraph, Weight, WeightMode, WeightedGraph};
