use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::ColoredGraph;
use crate::error::{Error, Result};
use crate::order::FiniteLattice;

/// Which pentagons are glued onto a host edge.
///
/// Both variants attach a fresh path colored `s, t, s, t` (nonzero `s`, `t`)
/// across the host edge; they differ in the admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum RuleVariant {
    /// Host colored `a`, path `b, c, b, c` whenever `c <= a ∨ b`.
    A,
    /// Host colored `c`, path `a, b, a, b` whenever `c <= a ∨ b`.
    #[default]
    B,
}

impl RuleVariant {
    pub fn admits(self, l: &FiniteLattice, host: usize, s: usize, t: usize) -> bool {
        match self {
            RuleVariant::A => l.leq(t, l.join(host, s)),
            RuleVariant::B => l.leq(host, l.join(s, t)),
        }
    }
}

impl FromStr for RuleVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(RuleVariant::A),
            "B" | "b" => Ok(RuleVariant::B),
            other => Err(Error::Format(format!("unknown rule variant {other:?}"))),
        }
    }
}

impl fmt::Display for RuleVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleVariant::A => "A",
            RuleVariant::B => "B",
        })
    }
}

/// Ordered pairs `(s, t)` of nonzero colors admissible on a host edge, lexicographic.
pub fn admissible_pairs(
    l: &FiniteLattice,
    host: usize,
    variant: RuleVariant,
) -> Vec<(usize, usize)> {
    let nonzero: Vec<usize> = l.elements().filter(|&x| x != l.unit()).collect();
    nonzero
        .iter()
        .flat_map(|&s| nonzero.iter().map(move |&t| (s, t)))
        .filter(|&(s, t)| variant.admits(l, host, s, t))
        .collect()
}

/// Pentagons the next expansion of `g` will add.
pub fn pentagon_count(l: &FiniteLattice, g: &ColoredGraph, variant: RuleVariant) -> usize {
    let per_color: Vec<usize> = l
        .elements()
        .map(|c| admissible_pairs(l, c, variant).len())
        .collect();
    g.edges().iter().map(|e| per_color[e.color]).sum()
}

/// A single edge of the given nonzero color between two stage-0 vertices.
pub fn pudlak_seed(l: &FiniteLattice, color: usize) -> Result<ColoredGraph> {
    if !l.contains(color) {
        return Err(Error::OutOfRange(format!("seed color {color}")));
    }
    if color == l.unit() {
        return Err(Error::InvalidSeedColor);
    }
    ColoredGraph::new(vec![0, 0], vec![super::Edge { u: 0, v: 1, color }], l)
}

/// Glues one pentagon onto every edge for every admissible pair.
///
/// Fresh vertices are numbered by (edge index, s, t); the input is an exact
/// prefix of the output. Refuses to grow past `max_vertices`.
pub fn pudlak_expand(
    l: &FiniteLattice,
    g: &ColoredGraph,
    variant: RuleVariant,
    max_vertices: usize,
) -> Result<ColoredGraph> {
    let pentagons = pentagon_count(l, g, variant);
    let total = g.vertex_count() + 3 * pentagons;
    if total > max_vertices {
        return Err(Error::SizeExceeded {
            what: "vertex count",
            actual: total,
            limit: max_vertices,
        });
    }
    let pairs: Vec<Vec<(usize, usize)>> = l
        .elements()
        .map(|c| admissible_pairs(l, c, variant))
        .collect();
    let stage = g.stage_count();
    let mut out = g.clone();
    for e in g.edges() {
        for &(s, t) in &pairs[e.color] {
            let p = out.push_vertex(stage);
            let q = out.push_vertex(stage);
            let r = out.push_vertex(stage);
            out.push_edge(e.u, p, s);
            out.push_edge(p, q, t);
            out.push_edge(q, r, s);
            out.push_edge(r, e.v, t);
        }
    }
    Ok(out)
}

/// The chain `Θ_0 ⊆ Θ_1 ⊆ ...` over a color lattice, stored as its last
/// stage plus per-stage vertex and edge counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSequence {
    lattice: FiniteLattice,
    graph: ColoredGraph,
    seed_color: usize,
    variant: RuleVariant,
    vertex_counts: Vec<usize>,
    edge_counts: Vec<usize>,
}

impl RepSequence {
    pub fn seed(lattice: FiniteLattice, seed_color: usize, variant: RuleVariant) -> Result<Self> {
        let graph = pudlak_seed(&lattice, seed_color)?;
        Ok(RepSequence {
            lattice,
            graph,
            seed_color,
            variant,
            vertex_counts: vec![2],
            edge_counts: vec![1],
        })
    }

    /// Seeds and expands to `stages` stages in total (`stages >= 1`).
    pub fn build(
        lattice: FiniteLattice,
        seed_color: usize,
        variant: RuleVariant,
        stages: usize,
        max_vertices: usize,
    ) -> Result<Self> {
        if stages == 0 {
            return Err(Error::InvalidSize(0));
        }
        let mut r = Self::seed(lattice, seed_color, variant)?;
        while r.stage_count() < stages {
            r.expand(max_vertices)?;
        }
        Ok(r)
    }

    /// Like [`RepSequence::build`] but stops early, without error, when the
    /// next stage would exceed the cap. Returns whether it stopped early.
    pub fn build_within(
        lattice: FiniteLattice,
        seed_color: usize,
        variant: RuleVariant,
        stages: usize,
        max_vertices: usize,
    ) -> Result<(Self, bool)> {
        let mut r = Self::seed(lattice, seed_color, variant)?;
        while r.stage_count() < stages {
            match r.expand(max_vertices) {
                Ok(()) => {}
                Err(Error::SizeExceeded { .. }) => return Ok((r, true)),
                Err(e) => return Err(e),
            }
        }
        Ok((r, false))
    }

    /// Reconstructs a sequence from a stored graph; stage boundaries come from the vertex tags.
    pub fn from_graph(
        lattice: FiniteLattice,
        graph: ColoredGraph,
        variant: RuleVariant,
    ) -> Result<Self> {
        if graph.vertex_count() < 2 || graph.edges().is_empty() {
            return Err(Error::Format("graph has no seed edge".into()));
        }
        let seed_color = graph.edges()[0].color;
        let stages = graph.stage_count();
        let vertex_counts = (0..stages)
            .map(|j| graph.vertex_stages().partition_point(|&s| s <= j))
            .collect();
        let edge_counts = (0..stages)
            .map(|j| {
                (0..graph.edges().len())
                    .take_while(|&i| graph.edge_stage(i) <= j)
                    .count()
            })
            .collect();
        Ok(RepSequence {
            lattice,
            graph,
            seed_color,
            variant,
            vertex_counts,
            edge_counts,
        })
    }

    pub fn expand(&mut self, max_vertices: usize) -> Result<()> {
        self.graph = pudlak_expand(&self.lattice, &self.graph, self.variant, max_vertices)?;
        self.vertex_counts.push(self.graph.vertex_count());
        self.edge_counts.push(self.graph.edges().len());
        Ok(())
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// The last (largest) stage.
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn seed_color(&self) -> usize {
        self.seed_color
    }

    pub fn variant(&self) -> RuleVariant {
        self.variant
    }

    pub fn stage_count(&self) -> usize {
        self.vertex_counts.len()
    }

    pub fn last_stage(&self) -> usize {
        self.stage_count() - 1
    }

    pub fn vertex_count(&self, stage: usize) -> usize {
        self.vertex_counts[stage]
    }

    pub fn edge_count(&self, stage: usize) -> usize {
        self.edge_counts[stage]
    }

    pub fn vertex_counts(&self) -> &[usize] {
        &self.vertex_counts
    }

    pub fn stage(&self, j: usize) -> ColoredGraph {
        self.graph.prefix(j)
    }
}
