//! Exact controllability of graphs and vertex subsets.
//!
//! A pair `(X, S)` of a graph and a subset of its vertices is *controllable*
//! when the walk matrix `W = (z, Az, ..., A^{v-1}z)` built from the
//! characteristic vector `z` of `S` is invertible. This crate decides that
//! (and the equivalent pole-counting and coprimality characterizations) in
//! exact arithmetic, and builds the surrounding objects: cones, path
//! extensions, orthogonal `Q` matrices between isomorphic pairs, canonical
//! vertex orderings, Laplacian edge pairs and small discrete linear systems.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, reporting and
//! the command line live in the companion `ctrlgraph` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod control;
mod error;
pub mod graph;
pub mod iso;
pub mod laplacian;
pub mod lti;

pub use algebra::{IntPoly, Matrix, RationalFunction, Scalar};
pub use control::{ControllabilityReport, PairSpec, Verdicts, WalkMatrix};
pub use error::{Error, Result};
pub use graph::{Graph, Radius, VertexSet};
