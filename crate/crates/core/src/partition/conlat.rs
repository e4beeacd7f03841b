use std::collections::HashMap;

use serde::Serialize;

use super::algebra::{principal_congruence, FiniteAlgebra};
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::order::FiniteLattice;

pub const DEFAULT_MAX_CARRIER: usize = 16;
pub const MAX_CONGRUENCES: usize = 1 << 16;

/// All congruences of an algebra, ordered by (pair count, labels): the
/// identity relation is first and the all relation last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceLattice {
    congruences: Vec<Partition>,
    join: Vec<usize>,
    meet: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub partitions: Vec<String>,
    pub order: Vec<Vec<u8>>,
}

impl CongruenceLattice {
    /// Closes a family of partitions of one carrier under join and tabulates it.
    ///
    /// The meet table requires the family to be closed under intersection too.
    pub fn from_family(family: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let mut all: Vec<Partition> = Vec::new();
        let mut seen: HashMap<Partition, ()> = HashMap::new();
        for p in family {
            if seen.insert(p.clone(), ()).is_none() {
                all.push(p);
            }
        }
        let mut i = 0;
        while i < all.len() {
            for j in 0..i {
                let p = all[i].join(&all[j])?;
                if seen.insert(p.clone(), ()).is_none() {
                    if all.len() >= MAX_CONGRUENCES {
                        return Err(Error::SizeExceeded {
                            what: "congruence count",
                            actual: all.len() + 1,
                            limit: MAX_CONGRUENCES,
                        });
                    }
                    all.push(p);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.pair_count().cmp(&b.pair_count()).then_with(|| a.cmp(b)));

        let index: HashMap<&Partition, usize> =
            all.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let c = all.len();
        let mut join = vec![0; c * c];
        let mut meet = vec![0; c * c];
        for a in 0..c {
            for b in 0..c {
                join[a * c + b] = index[&all[a].join(&all[b])?];
                let m = all[a].meet(&all[b])?;
                meet[a * c + b] = *index.get(&m).ok_or_else(|| {
                    Error::Precondition(format!(
                        "family not closed under meet: {} ∧ {}",
                        all[a], all[b]
                    ))
                })?;
            }
        }
        Ok(CongruenceLattice {
            congruences: all,
            join,
            meet,
        })
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.congruences[i]
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.congruences.iter().position(|q| q == p)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.congruences[a].refines(&self.congruences[b])
    }

    pub fn to_lattice(&self) -> FiniteLattice {
        let c = self.len();
        FiniteLattice::from_fn(c, 0, Some(c - 1), |a, b| self.join[a * c + b])
            .expect("partition joins form a semilattice")
    }

    /// Meet table, consistent with `to_lattice().meet`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn report(&self) -> CongruenceReport {
        CongruenceReport {
            partitions: self.congruences.iter().map(Partition::notation).collect(),
            order: (0..self.len())
                .map(|a| (0..self.len()).map(|b| self.leq(a, b) as u8).collect())
                .collect(),
        }
    }
}

/// Join closure of the principal congruences; the bottom is always included.
pub fn congruence_lattice(alg: &FiniteAlgebra, max_carrier: usize) -> Result<CongruenceLattice> {
    let n = alg.len();
    if n > max_carrier {
        return Err(Error::SizeExceeded {
            what: "algebra carrier",
            actual: n,
            limit: max_carrier,
        });
    }
    let mut family = vec![Partition::identity(n)];
    for a in 0..n {
        for b in a + 1..n {
            family.push(principal_congruence(alg, a, b)?);
        }
    }
    CongruenceLattice::from_family(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::algebra::is_congruence;
    use crate::partition::partition::all_partitions;

    #[test]
    fn one_element_algebra() {
        let c = congruence_lattice(&FiniteAlgebra::set(1).unwrap(), 16).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn klein_has_five_congruences() {
        let c = congruence_lattice(&FiniteAlgebra::klein(), 16).unwrap();
        let names: Vec<String> = c.congruences().iter().map(Partition::notation).collect();
        assert_eq!(names, vec!["0|1|2|3", "01|23", "02|13", "03|12", "0123"]);
    }

    #[test]
    fn bare_set_gives_partition_lattice() {
        for n in 1..=4 {
            let c = congruence_lattice(&FiniteAlgebra::set(n).unwrap(), 16).unwrap();
            let mut expect = all_partitions(n);
            expect.sort();
            let mut got = c.congruences().to_vec();
            got.sort();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn closed_under_operations() {
        for alg in [FiniteAlgebra::s3(), FiniteAlgebra::cyclic(6).unwrap()] {
            let c = congruence_lattice(&alg, 16).unwrap();
            for p in c.congruences() {
                assert!(is_congruence(&alg, p).unwrap().is_none());
            }
            let l = c.to_lattice();
            for a in 0..c.len() {
                for b in 0..c.len() {
                    assert_eq!(l.meet(a, b), c.meet(a, b));
                }
            }
        }
    }

    #[test]
    fn carrier_bound() {
        let e = congruence_lattice(&FiniteAlgebra::set(5).unwrap(), 4).unwrap_err();
        assert!(matches!(e, Error::SizeExceeded { .. }));
    }

    #[test]
    fn report_shape() {
        let r = congruence_lattice(&FiniteAlgebra::cyclic(2).unwrap(), 16)
            .unwrap()
            .report();
        assert_eq!(r.partitions, vec!["0|1", "01"]);
        assert_eq!(r.order, vec![vec![1, 1], vec![0, 1]]);
    }
}
