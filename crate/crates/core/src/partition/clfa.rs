use super::algebra::FiniteAlgebra;
use super::conlat::{congruence_lattice, CongruenceLattice};
use super::iso::lattice_isomorphic;
use crate::error::Result;
use crate::order::FiniteLattice;

#[derive(Debug, Clone)]
pub struct ClfaVerdict {
    pub congruences: CongruenceLattice,
    /// Order isomorphism from the congruence lattice onto the candidate lattice.
    pub witness: Option<Vec<usize>>,
}

impl ClfaVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Checks whether `alg` witnesses that `l` is a congruence lattice of a finite algebra.
pub fn clfa_verify(
    l: &FiniteLattice,
    alg: &FiniteAlgebra,
    max_carrier: usize,
) -> Result<ClfaVerdict> {
    let congruences = congruence_lattice(alg, max_carrier)?;
    let witness = lattice_isomorphic(&congruences.to_lattice(), l);
    Ok(ClfaVerdict {
        congruences,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{make_standard, Family};

    #[test]
    fn m3_from_klein() {
        let m3 = make_standard(Family::Mn, 3).unwrap();
        let v = clfa_verify(&m3, &FiniteAlgebra::klein(), 16).unwrap();
        assert!(v.holds());
        assert_eq!(v.witness, Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn chain2_and_one_point() {
        let c2 = make_standard(Family::Chain, 2).unwrap();
        assert!(!clfa_verify(&c2, &FiniteAlgebra::set(1).unwrap(), 16)
            .unwrap()
            .holds());
        assert!(clfa_verify(&c2, &FiniteAlgebra::set(2).unwrap(), 16)
            .unwrap()
            .holds());
    }
}
