//! Plane triangulations of small order and their domination numbers.
//!
//! The crate enumerates plane triangulations up to isomorphism, computes
//! exact domination (`γ`) and connected domination (`γ_c`) numbers with
//! certificates, and builds the extremal families around the `γ_c <= n/3`
//! question.

pub mod census;
pub mod embedding;
pub mod error;
pub mod families;
pub mod generator;
pub mod graph;
pub mod solvers;

pub use embedding::{CanonicalCode, Face, PlaneTriangulation};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
