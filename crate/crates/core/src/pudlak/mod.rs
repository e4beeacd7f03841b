//! Staged colored-graph representations of finite lattices.

mod build;
mod dot;
mod embed;
mod graph;
mod relations;
mod verify;

pub use build::{
    admissible_pairs, pentagon_count, pudlak_expand, pudlak_seed, RepSequence, RuleVariant,
};
pub use dot::render_dot;
pub use embed::{build_dual_sequence, default_shift, recolor_embed, DualSequence};
pub use graph::{ColoredGraph, Edge};
pub use relations::{
    check_persistence, equiv_relation, extract_functions, Persistence, RepFunctions,
};
pub use verify::{
    rep_verify, JoinStabilization, JoinStatus, Outcome, PairViolation, RepReport, Separation,
    StageReport,
};
