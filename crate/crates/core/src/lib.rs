//! Vertex connectivity of directed and undirected graphs.
//!
//! The crate decides `k`-connectivity and computes exact or `(1+eps)`-approximate
//! vertex connectivity. The building blocks are:
//!
//! - [`graph`]: the immutable [`DiGraph`] everything reads, plus parsing.
//! - [`pair`]: exact `(x, y)` vertex connectivity by unit-capacity augmenting paths.
//! - [`local`]: the local flow primitive. It decides whether a small-volume
//!   vertex cut exists around a seed vertex while only reading a neighbourhood
//!   of that vertex.
//! - [`framework`]: the sampling driver that combines pair flows and local
//!   flows, and the `kappa` search built on top of it.
//! - [`sparsify`]: forest decompositions giving sparse connectivity certificates.
//! - [`embedding`]: random modular convex embeddings and the rank-based
//!   approximation.
//! - [`oracle`]: brute-force ground truth used by tests.
//!
//! ```
//! use vcut::{gen, framework::{kappa, KappaMode}};
//!
//! let g = gen::cycle(7, false);
//! let res = kappa(&g, KappaMode::Exact, 7, 3.0).unwrap();
//! assert_eq!(res.kappa, 2);
//! ```

pub mod cli;
pub mod embedding;
pub mod error;
pub mod framework;
pub mod gen;
pub mod graph;
pub mod local;
pub mod oracle;
pub mod pair;
pub mod scc;
pub mod sparsify;
pub mod triple;

pub use error::{Result, VcError};
pub use framework::VcAnswer;
pub use graph::{DegreeStats, DiGraph, GraphFormat};
pub use triple::SeparationTriple;
