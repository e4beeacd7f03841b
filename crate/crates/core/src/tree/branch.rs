use serde::Serialize;

use super::map::{subtree_shift, TreeMap};
use super::strings::ThetaString;
use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::pudlak::{RepFunctions, RepSequence};

/// A representation of the dual of `L` together with a stack of trees
/// `T_0 = id, T_1, …` over its string space.
///
/// Elements of `L` and colors of the representation share indices; `k <= m`
/// in `L` means `≡_k ⊇ ≡_m`.
#[derive(Debug, Clone)]
pub struct Nest {
    base: RepSequence,
    represented: FiniteLattice,
    functions: Vec<RepFunctions>,
    trees: Vec<TreeMap>,
}

impl Nest {
    pub fn new(base: RepSequence) -> Self {
        let represented = base.lattice().dual();
        let functions = (0..base.stage_count()).map(|j| base.functions(j)).collect();
        let trees = vec![TreeMap::identity_tree(&base)];
        Nest {
            base,
            represented,
            functions,
            trees,
        }
    }

    /// Adds `T_{i+1}` over a string space with the same stage sizes as the base.
    pub fn push(&mut self, root: &ThetaString, shift: Option<&[usize]>) -> Result<&TreeMap> {
        let sizes = self.base.vertex_counts().to_vec();
        self.push_with_domain(root, shift, &sizes)
    }

    pub fn push_with_domain(
        &mut self,
        root: &ThetaString,
        shift: Option<&[usize]>,
        domain_sizes: &[usize],
    ) -> Result<&TreeMap> {
        let next = subtree_shift(self.top(), root, shift, domain_sizes)?;
        self.trees.push(next);
        Ok(self.top())
    }

    pub fn base(&self) -> &RepSequence {
        &self.base
    }

    /// The lattice whose elements index the `g_k`.
    pub fn represented(&self) -> &FiniteLattice {
        &self.represented
    }

    pub fn trees(&self) -> &[TreeMap] {
        &self.trees
    }

    pub fn top(&self) -> &TreeMap {
        self.trees.last().expect("nest has the identity tree")
    }

    /// `f_k` at stage `x` applied to `v`.
    pub fn f(&self, k: usize, x: usize, v: usize) -> usize {
        self.functions[x].apply(k, v)
    }
}

/// A branch through the top tree and the strings it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchBuild {
    pub choices: Vec<usize>,
    pub g: Vec<usize>,
    /// `gk[k][x] = f_k(g(x))` with `f_k` taken at stage `x`.
    pub gk: Vec<Vec<usize>>,
}

pub fn build_g(nest: &Nest, choices: &[usize]) -> Result<BranchBuild> {
    let top = nest.top();
    for (level, &choice) in choices.iter().enumerate() {
        if level >= top.max_len() || choice >= top.domain_sizes()[level] {
            return Err(Error::InvalidChoice { level, choice });
        }
    }
    let g = top.apply(&ThetaString(choices.to_vec()))?.0;
    let gk = nest
        .represented()
        .elements()
        .map(|k| {
            g.iter()
                .enumerate()
                .map(|(x, &v)| nest.f(k, x, v))
                .collect()
        })
        .collect();
    Ok(BranchBuild {
        choices: choices.to_vec(),
        g,
        gk,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Reduction {
    Holds,
    Fails { position: usize },
}

/// Checks `g_k(x) = f_k(g_m(x))` at every built position; requires `k <= m`.
pub fn check_reduction(nest: &Nest, b: &BranchBuild, k: usize, m: usize) -> Result<Reduction> {
    let l = nest.represented();
    if !l.contains(k) || !l.contains(m) {
        return Err(Error::OutOfRange(format!("lattice elements {k}, {m}")));
    }
    if !l.leq(k, m) {
        return Err(Error::Precondition(format!("{k} is not below {m}")));
    }
    match (0..b.g.len()).find(|&x| b.gk[k][x] != nest.f(k, x, b.gk[m][x])) {
        Some(position) => Ok(Reduction::Fails { position }),
        None => Ok(Reduction::Holds),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{make_standard, Family};
    use crate::pudlak::RuleVariant;

    fn nest(family: Family, size: usize, stages: usize) -> Nest {
        let l = make_standard(family, size).unwrap().dual();
        let seed = l.top();
        Nest::new(RepSequence::build(l, seed, RuleVariant::B, stages, 50_000).unwrap())
    }

    #[test]
    fn empty_and_least_branches() {
        let n = nest(Family::Chain, 2, 3);
        let b = build_g(&n, &[]).unwrap();
        assert!(b.g.is_empty());
        let b = build_g(&n, &[0, 0, 0]).unwrap();
        assert_eq!(b.g, vec![0, 0, 0]);
        // the top of L indexes the identity relation
        assert_eq!(b.gk[1], b.g);
        assert_eq!(check_reduction(&n, &b, 1, 1).unwrap(), Reduction::Holds);
        assert_eq!(check_reduction(&n, &b, 0, 1).unwrap(), Reduction::Holds);
        assert!(matches!(
            check_reduction(&n, &b, 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn invalid_choices() {
        let n = nest(Family::Chain, 2, 2);
        assert_eq!(
            build_g(&n, &[2]),
            Err(Error::InvalidChoice {
                level: 0,
                choice: 2
            })
        );
        assert_eq!(
            build_g(&n, &[0, 0, 0]),
            Err(Error::InvalidChoice {
                level: 2,
                choice: 0
            })
        );
    }

    #[test]
    fn b2_atom_below_top() {
        let n = nest(Family::Boolean, 2, 3);
        for b in [vec![1, 22, 679], vec![0, 5, 300], vec![1, 0, 17]] {
            let build = build_g(&n, &b).unwrap();
            for k in 0..4 {
                for x in 0..3 {
                    assert_eq!(build.gk[k][x], n.base().relation(x, k).label(build.g[x]));
                }
            }
            for (k, m) in [(1, 3), (2, 3), (0, 1), (0, 3)] {
                assert_eq!(check_reduction(&n, &build, k, m).unwrap(), Reduction::Holds);
            }
        }
    }

    #[test]
    fn shifted_nest_branch() {
        let mut n = nest(Family::Boolean, 2, 3);
        n.push(&ThetaString(vec![1]), Some(&[0, 1, 2])).unwrap();
        let b = build_g(&n, &[0, 7]).unwrap();
        assert_eq!(b.g, vec![1, 0, 7]);
        assert_eq!(check_reduction(&n, &b, 1, 3).unwrap(), Reduction::Holds);
    }
}
