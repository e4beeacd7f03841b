//! Partitions of finite carriers, finite algebras and their congruence lattices.

pub mod algebra;
pub mod clfa;
pub mod conlat;
pub mod iso;
#[allow(clippy::module_inception)]
pub mod partition;

pub use algebra::{
    is_congruence, principal_congruence, CongruenceViolation, FiniteAlgebra, Operation,
};
pub use clfa::{clfa_verify, ClfaVerdict};
pub use conlat::{congruence_lattice, CongruenceLattice, CongruenceReport, DEFAULT_MAX_CARRIER};
pub use iso::lattice_isomorphic;
pub use partition::{all_partitions, Partition, UnionFind};
