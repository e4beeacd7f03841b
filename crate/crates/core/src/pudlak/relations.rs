use serde::Serialize;

use super::build::RepSequence;
use super::graph::{ColoredGraph, Edge};
use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::partition::{Partition, UnionFind};

fn connectivity(n: usize, edges: &[Edge], keep: impl Fn(usize) -> bool) -> Partition {
    let mut uf = UnionFind::new(n);
    for e in edges.iter().filter(|e| keep(e.color)) {
        uf.union(e.u, e.v);
    }
    uf.to_partition()
}

/// `x ≡_m y` iff some path joins them using only edges colored `<= m`.
pub fn equiv_relation(g: &ColoredGraph, l: &FiniteLattice, m: usize) -> Partition {
    connectivity(g.vertex_count(), g.edges(), |c| l.leq(c, m))
}

impl RepSequence {
    /// `≡_m` on stage `j`.
    pub fn relation(&self, j: usize, m: usize) -> Partition {
        let edges = &self.graph().edges()[..self.edge_count(j)];
        connectivity(self.vertex_count(j), edges, |c| self.lattice().leq(c, m))
    }

    /// `≡_m` on stage `j` for every `m`, indexed by lattice element.
    pub fn relations(&self, j: usize) -> Vec<Partition> {
        self.lattice()
            .elements()
            .map(|m| self.relation(j, m))
            .collect()
    }

    pub fn functions(&self, j: usize) -> RepFunctions {
        RepFunctions {
            tables: self
                .relations(j)
                .iter()
                .map(|p| p.labels().to_vec())
                .collect(),
        }
    }
}

/// Tables `f_k`, one per lattice element, each sending a vertex to the least
/// vertex of its `≡_k` class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepFunctions {
    tables: Vec<Vec<usize>>,
}

impl RepFunctions {
    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.tables[k][x]
    }

    pub fn table(&self, k: usize) -> &[usize] {
        &self.tables[k]
    }

    pub fn colors(&self) -> usize {
        self.tables.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.tables.first().map_or(0, Vec::len)
    }
}

pub fn extract_functions(g: &ColoredGraph, l: &FiniteLattice) -> RepFunctions {
    RepFunctions {
        tables: l
            .elements()
            .map(|k| equiv_relation(g, l, k).labels().to_vec())
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Persistence {
    Persists,
    /// `f_k` changed on an old vertex: its class merged with one holding an
    /// earlier vertex.
    Broken {
        stage: usize,
        witness: usize,
        before: usize,
        after: usize,
        merged: Vec<usize>,
    },
}

impl Persistence {
    pub fn persists(&self) -> bool {
        matches!(self, Persistence::Persists)
    }
}

/// Whether `f_k` at stage `j + 1` extends `f_k` at stage `j`.
pub fn check_persistence(r: &RepSequence, k: usize, j: usize) -> Result<Persistence> {
    if !r.lattice().contains(k) {
        return Err(Error::OutOfRange(format!("color {k}")));
    }
    if j + 1 >= r.stage_count() {
        return Err(Error::Precondition(format!(
            "stages {j} and {} must both exist",
            j + 1
        )));
    }
    let before = r.relation(j, k);
    let after = r.relation(j + 1, k);
    for x in 0..before.len() {
        if before.label(x) != after.label(x) {
            let merged = (0..after.len()).filter(|&y| after.same(x, y)).collect();
            return Ok(Persistence::Broken {
                stage: j + 1,
                witness: x,
                before: before.label(x),
                after: after.label(x),
                merged,
            });
        }
    }
    Ok(Persistence::Persists)
}
