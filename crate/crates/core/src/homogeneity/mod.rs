//! The homogeneity property of a family of equivalence relations and the
//! witness chains behind it.

mod chain;
mod maps;
mod structure;

pub use chain::{homogeneity_check, malcev_chain, HomogeneityReport, WitnessChain};
pub use maps::{relation_preserving_maps, DEFAULT_MAX_CARRIER, DEFAULT_MAX_MAPS};
pub use structure::{premise_holds, RelStructure};
