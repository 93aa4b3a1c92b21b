//! Exact combinatorial topology for independence complexes of graphs.
//!
//! For a graph `G` and an integer `n >= 1`, the independence complex `I_n(G)`
//! consists of the vertex sets `U` whose induced subgraph has independence
//! number smaller than `n`. This crate builds these complexes, computes their
//! rational homology and Leray numbers, decides `d`-collapsibility by
//! exhaustive search with checkable witnesses, and computes rainbow
//! independent set numbers `f_G(n)`.
//!
//! Modules:
//! - [`graphs`]: simple graphs on at most 64 vertices, predicates and generators.
//! - [`complexes`]: simplicial complexes held by their missing faces.
//! - [`homology`]: reduced Betti numbers over the rationals and Leray numbers.
//! - [`collapse`]: elementary `d`-collapses and collapsibility numbers.
//! - [`rainbow`]: rainbow independent sets and `f_G(n)`.
//! - [`verify`]: bound checkers and the reproduction suite behind the CLI.

pub mod collapse;
pub mod complexes;
pub mod error;
pub mod graphs;
pub mod homology;
pub mod rainbow;
pub mod set;
pub mod verify;

pub use error::{Error, Result};
pub use set::VertexSet;
