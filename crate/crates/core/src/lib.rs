//! Finite machinery behind initial-segment constructions: semilattices and
//! their duals, congruence lattices of finite algebras, staged colored-graph
//! lattice representations, the homogeneity property, and finite-depth tree
//! scaffolding.

pub mod error;
pub mod homogeneity;
pub mod io;
pub mod order;
pub mod partition;
pub mod pudlak;
pub mod tree;

pub use error::{Error, Result};
pub use order::{FiniteLattice, FiniteUsl, UslHom};
pub use partition::{FiniteAlgebra, Partition};
pub use pudlak::{ColoredGraph, RepSequence, RuleVariant};
