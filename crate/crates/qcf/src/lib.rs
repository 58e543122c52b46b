//! Spectral extremal toolkit for C4-free k-cyclic graphs.
//!
//! The crate constructs the extremal families, computes signless
//! Laplacian (Q = D + A) and Laplacian (L = D - A) spectral radii,
//! evaluates the closed-form bounds and polynomial families, enumerates
//! small graph classes exhaustively with exact isomorphism rejection,
//! and verifies the extremal ordering claims over those classes.

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod g6;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Variant};
