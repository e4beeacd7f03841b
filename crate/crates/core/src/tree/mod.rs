//! Finite-depth string spaces over a staged representation, root-shifted
//! trees on them, and the branch strings `g`, `g_k` they induce.

mod branch;
mod map;
mod strings;

pub use branch::{build_g, check_reduction, BranchBuild, Nest, Reduction};
pub use map::{subtree_shift, PadLayer, TreeCheck, TreeMap};
pub use strings::{count_strings, enumerate_strings, string_iter, StringIter, ThetaString};
