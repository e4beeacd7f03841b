use std::path::PathBuf;

use clap::{Parser, Subcommand};
use inseg_core::order::Family;
use inseg_core::RuleVariant;

#[derive(Debug, Parser)]
#[command(
    name = "inseg",
    version,
    about = "Finite lattices, their representations and congruence machinery"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the five bounded-semilattice equations on a lattice file.
    LatticeCheck {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a standard lattice.
    LatticeMake {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the dual of a lattice.
    LatticeDual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Galois adjoint of a homomorphism file.
    Adjoint {
        hom: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient of a lattice by an ideal.
    Quotient {
        #[arg(long)]
        lattice: PathBuf,
        /// Comma-separated ideal members.
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Semilattice presented by a preorder and a join table.
    Present {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Congruence lattice of a finite algebra.
    Congruence {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that an algebra's congruence lattice is isomorphic to a lattice.
    Clfa {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the staged colored-graph representation of a lattice.
    PudlakBuild {
        #[arg(long)]
        lattice: PathBuf,
        /// Number of expansions after the seed.
        #[arg(long, default_value_t = 2)]
        stages: usize,
        /// Seed edge color; the top by default.
        #[arg(long)]
        seed_color: Option<usize>,
        #[arg(long, default_value_t = RuleVariant::B)]
        rule_variant: RuleVariant,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a stored representation against its lattice.
    PudlakVerify {
        #[arg(long)]
        graph: PathBuf,
        /// Deepest stage to check; the last stored stage by default.
        #[arg(long)]
        depth: Option<usize>,
        /// Stages allowed for join stabilization.
        #[arg(long, default_value_t = 2)]
        join_bound: usize,
        #[arg(long, default_value_t = RuleVariant::B)]
        rule_variant: RuleVariant,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide homogeneity of a relation structure or of an algebra's congruences.
    Homogeneity {
        #[arg(long, conflicts_with = "algebra", required_unless_present = "algebra")]
        structure: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a nest of root-shifted trees and check the reduction law on one branch.
    TreeDemo {
        #[arg(long)]
        lattice: PathBuf,
        /// Shifted trees stacked on the identity tree.
        #[arg(long, default_value_t = 1)]
        levels: usize,
        /// Comma-separated branch choices; all zeros by default.
        #[arg(long, value_delimiter = ',')]
        branch: Option<Vec<usize>>,
        /// Comma-separated strictly increasing shift values.
        #[arg(long, value_delimiter = ',')]
        shift: Option<Vec<usize>>,
        /// Number of expansions of the base representation.
        #[arg(long, default_value_t = 2)]
        stages: usize,
        #[arg(long, default_value_t = RuleVariant::B)]
        rule_variant: RuleVariant,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering of a graph file.
    RenderDot {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
