//! Exact combinatorics of degeneration data on Fano lattice 3-polytopes.
//!
//! The crate builds integral affine models of Fano threefolds from a polytope
//! `P`, a generalised fan `Σ`, edge labels and ray data, and computes the
//! numerical invariants of the associated torus fibrations: node counts, Euler
//! number, anticanonical degree, Betti numbers and Fano index.

pub mod degeneration;
pub mod discriminant;
pub mod error;
pub mod fan;
pub mod gamma;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod minkowski;
pub mod polygon;
pub mod polytope;

pub use error::{Error, Result};
