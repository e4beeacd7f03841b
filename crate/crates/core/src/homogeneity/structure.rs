use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::partition::{congruence_lattice, FiniteAlgebra, Partition};

/// A carrier with one equivalence relation per element of an index lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelStructure {
    n: usize,
    lattice: FiniteLattice,
    relations: Vec<Partition>,
}

impl RelStructure {
    pub fn new(lattice: FiniteLattice, relations: Vec<Partition>) -> Result<Self> {
        if relations.len() != lattice.len() {
            return Err(Error::Format(format!(
                "{} relations for a lattice of {} elements",
                relations.len(),
                lattice.len()
            )));
        }
        let n = relations.first().map_or(0, Partition::len);
        if let Some(p) = relations.iter().find(|p| p.len() != n) {
            return Err(Error::CarrierMismatch(n, p.len()));
        }
        Ok(RelStructure {
            n,
            lattice,
            relations,
        })
    }

    /// Congruences of an algebra indexed by its congruence lattice.
    pub fn congruences(alg: &FiniteAlgebra, max_carrier: usize) -> Result<Self> {
        let con = congruence_lattice(alg, max_carrier)?;
        Self::new(con.to_lattice(), con.congruences().to_vec())
    }

    /// Only the identity relation, indexed by the one-element lattice.
    pub fn discrete(n: usize) -> Self {
        let lattice = FiniteLattice::from_fn(1, 0, Some(0), |_, _| 0).expect("trivial lattice");
        RelStructure {
            n,
            lattice,
            relations: vec![Partition::identity(n)],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn relations(&self) -> &[Partition] {
        &self.relations
    }

    pub fn relation(&self, k: usize) -> &Partition {
        &self.relations[k]
    }

    /// Index pairs `k <= m` whose relations are not nested `≡_k ⊆ ≡_m`.
    pub fn order_violations(&self) -> Vec<(usize, usize)> {
        let l = &self.lattice;
        l.elements()
            .flat_map(|k| l.elements().map(move |m| (k, m)))
            .filter(|&(k, m)| l.leq(k, m) && !self.relations[k].refines(&self.relations[m]))
            .collect()
    }

    pub fn preserves(&self, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().all(|&y| y < self.n)
            && self
                .relations
                .iter()
                .all(|p| (0..self.n).all(|x| p.same(f[x], f[p.label(x)])))
    }

    /// For every index, `a ≡_k b` implies `c ≡_k d`.
    pub fn premise_holds(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.relations.iter().all(|p| !p.same(a, b) || p.same(c, d))
    }
}

pub fn premise_holds(s: &RelStructure, a: usize, b: usize, c: usize, d: usize) -> Result<bool> {
    if let Some(&x) = [a, b, c, d].iter().find(|&&x| x >= s.len()) {
        return Err(Error::OutOfRange(format!("element {x}")));
    }
    Ok(s.premise_holds(a, b, c, d))
}
