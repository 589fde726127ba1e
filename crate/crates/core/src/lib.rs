//! Exact polyhedral and combinatorial algorithms for monomial ideals: integral
//! closure and normality, symbolic powers and resurgence, edge ideals and
//! edge subrings of graphs, Ehrhart-theoretic invariants, and evaluation codes
//! over small finite fields.
//!
//! All arithmetic is exact. Every search is bounded by a [`Budget`] and fails
//! with [`Error::Budget`] instead of running away.

pub mod arith;
pub mod budget;
pub mod clutter;
pub mod error;
pub mod monomial;
pub mod polyhedra;
pub mod closure;
pub mod graphs;
pub mod symbolic;
pub mod invariants;
pub mod codes;
pub mod io;
pub mod cli;

pub use budget::Budget;
pub use clutter::{Clutter, Graph};
pub use error::{Error, Result};
pub use monomial::{ExponentVector, MonomialIdeal};
