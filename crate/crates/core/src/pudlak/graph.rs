use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::order::FiniteLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

/// Undirected edge-colored graph whose vertices carry the stage that created them.
///
/// Vertices are numbered in creation order, so stage tags are nondecreasing
/// and each stage is a prefix of the vertex and edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    stages: Vec<usize>,
    edges: Vec<Edge>,
}

impl ColoredGraph {
    /// Validates endpoints, colors (nonzero, in range), duplicates and stage order.
    pub fn new(stages: Vec<usize>, edges: Vec<Edge>, lattice: &FiniteLattice) -> Result<Self> {
        if stages.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Format("vertex stages must be nondecreasing".into()));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.u >= stages.len() || e.v >= stages.len() {
                return Err(Error::Format(format!(
                    "edge {i} has an endpoint outside the vertex set"
                )));
            }
            if e.u == e.v {
                return Err(Error::Format(format!("edge {i} is a loop")));
            }
            if !lattice.contains(e.color) {
                return Err(Error::Format(format!(
                    "edge {i} color {} outside the lattice",
                    e.color
                )));
            }
            if e.color == lattice.unit() {
                return Err(Error::Format(format!("edge {i} has the zero color")));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v), e.color)) {
                return Err(Error::Format(format!(
                    "edge {i} duplicates an earlier edge"
                )));
            }
        }
        let g = ColoredGraph { stages, edges };
        if let Some(i) = (1..g.edges.len()).find(|&i| g.edge_stage(i - 1) > g.edge_stage(i)) {
            return Err(Error::Format(format!(
                "edge {i} precedes an edge of an earlier stage"
            )));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.stages.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_stages(&self) -> &[usize] {
        &self.stages
    }

    pub fn vertex_stage(&self, v: usize) -> usize {
        self.stages[v]
    }

    pub fn edge_stage(&self, i: usize) -> usize {
        let e = self.edges[i];
        self.stages[e.u].max(self.stages[e.v])
    }

    /// Number of stages present (highest stage tag + 1).
    pub fn stage_count(&self) -> usize {
        self.stages.last().map_or(0, |s| s + 1)
    }

    /// Subgraph consisting of everything created up to and including `stage`.
    pub fn prefix(&self, stage: usize) -> ColoredGraph {
        let nv = self.stages.partition_point(|&s| s <= stage);
        let ne = (0..self.edges.len())
            .take_while(|&i| self.edge_stage(i) <= stage)
            .count();
        ColoredGraph {
            stages: self.stages[..nv].to_vec(),
            edges: self.edges[..ne].to_vec(),
        }
    }

    /// True when `self` is a prefix of `other` (same vertices, stages and edges).
    pub fn is_subgraph_prefix_of(&self, other: &ColoredGraph) -> bool {
        other.stages.starts_with(&self.stages) && other.edges.starts_with(&self.edges)
    }

    pub fn with_colors(&self, recolor: impl Fn(usize) -> usize) -> ColoredGraph {
        ColoredGraph {
            stages: self.stages.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    color: recolor(e.color),
                    ..*e
                })
                .collect(),
        }
    }

    pub(crate) fn push_vertex(&mut self, stage: usize) -> usize {
        self.stages.push(stage);
        self.stages.len() - 1
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize, color: usize) {
        self.edges.push(Edge { u, v, color });
    }
}
