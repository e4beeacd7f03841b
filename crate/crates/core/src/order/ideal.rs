use serde::Serialize;

use super::hom::{HomKind, UslHom};
use super::usl::{FiniteLattice, FiniteUsl};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum IdealViolation {
    Empty,
    OutOfRange { element: usize },
    NotDownwardClosed { below: usize, member: usize },
    NotJoinClosed { a: usize, b: usize, join: usize },
}

/// A nonempty, downward closed, join closed subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    members: Vec<bool>,
}

impl Ideal {
    pub fn new(l: &FiniteUsl, members: &[usize]) -> Result<Self> {
        match is_ideal(l, members) {
            None => {
                let mut mask = vec![false; l.len()];
                members.iter().for_each(|&a| mask[a] = true);
                Ok(Ideal { members: mask })
            }
            Some(v) => Err(Error::NotIdeal(format!("{v:?}"))),
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members[a]
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.members.len())
            .filter(|&a| self.members[a])
            .collect()
    }
}

/// `None` when `s` is an ideal of `l`, otherwise the first violation found.
pub fn is_ideal(l: &FiniteUsl, s: &[usize]) -> Option<IdealViolation> {
    if let Some(&element) = s.iter().find(|&&a| a >= l.len()) {
        return Some(IdealViolation::OutOfRange { element });
    }
    if s.is_empty() {
        return Some(IdealViolation::Empty);
    }
    let mut mask = vec![false; l.len()];
    s.iter().for_each(|&a| mask[a] = true);
    for member in l.elements().filter(|&a| mask[a]) {
        if let Some(below) = l.elements().find(|&x| l.leq(x, member) && !mask[x]) {
            return Some(IdealViolation::NotDownwardClosed { below, member });
        }
    }
    for a in l.elements().filter(|&a| mask[a]) {
        for b in l.elements().filter(|&b| mask[b]) {
            let join = l.join(a, b);
            if !mask[join] {
                return Some(IdealViolation::NotJoinClosed { a, b, join });
            }
        }
    }
    None
}

/// Result of factoring a semilattice by an ideal.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub lattice: FiniteLattice,
    pub projection: UslHom,
    /// Block of each source element, numbered by least member.
    pub classes: Vec<usize>,
}

/// Quotient by the relation `a E b` iff `a ∨ i = b ∨ i` for some `i` in the ideal.
pub fn quotient_by_ideal(l: &FiniteLattice, ideal: &Ideal) -> Result<Quotient> {
    let members = ideal.members();
    let related = |a: usize, b: usize| members.iter().any(|&i| l.join(a, i) == l.join(b, i));

    let mut classes = vec![usize::MAX; l.len()];
    let mut reps = Vec::new();
    for a in l.elements() {
        if classes[a] == usize::MAX {
            let id = reps.len();
            reps.push(a);
            for b in a..l.len() {
                if related(a, b) {
                    classes[b] = id;
                }
            }
        }
    }

    check_well_defined(l, &classes)?;

    let q = reps.len();
    let join = |x: usize, y: usize| classes[l.join(reps[x], reps[y])];
    let bound = l.bound().map(|z| classes[z]);
    let lattice = FiniteLattice::from_fn(q, classes[l.unit()], bound, join)?;
    let kind = if bound.is_some() {
        HomKind::BuslHom
    } else {
        HomKind::UslHom
    };
    let projection = UslHom::new(l.clone(), lattice.clone(), classes.clone(), kind)?;
    Ok(Quotient {
        lattice,
        projection,
        classes,
    })
}

/// Joins of related pairs must be related.
pub fn check_well_defined(l: &FiniteUsl, classes: &[usize]) -> Result<()> {
    for a0 in l.elements() {
        for b0 in l.elements().filter(|&b0| classes[b0] == classes[a0]) {
            for a1 in l.elements() {
                for b1 in l.elements().filter(|&b1| classes[b1] == classes[a1]) {
                    if classes[l.join(a0, a1)] != classes[l.join(b0, b1)] {
                        return Err(Error::Incompatible(format!(
                            "{a0}~{b0} and {a1}~{b1} but joins are unrelated"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Every ideal of `l`, by brute force over subsets. Only for small carriers.
pub fn all_ideals(l: &FiniteUsl) -> Vec<Vec<usize>> {
    assert!(l.len() <= 20, "subset enumeration on {} elements", l.len());
    (1u32..(1 << l.len()))
        .map(|mask| {
            l.elements()
                .filter(|&a| mask >> a & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s| is_ideal(l, s).is_none())
        .collect()
}
