use serde::Serialize;

use super::build::{RepSequence, RuleVariant};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A pair of colors whose relations disagree, with a vertex pair showing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub m: usize,
    pub n: usize,
    pub witness: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum JoinStatus {
    /// Every `≡_{m∨n}` pair of the stage is in `≡_m ∨ ≡_n` by stage `at`.
    Stabilized { at: usize },
    /// Some pair is still outside `≡_m ∨ ≡_n` at the deepest stage built.
    Unstabilized { witness: (usize, usize) },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JoinStabilization {
    pub m: usize,
    pub n: usize,
    #[serde(flatten)]
    pub status: JoinStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub stage: usize,
    pub vertices: usize,
    pub edges: usize,
    pub zero_is_identity: bool,
    /// Stage `j - 1` relations are contained in the restriction of stage `j` ones.
    pub stage_monotone: bool,
    pub monotonicity: Vec<PairViolation>,
    pub meet_fidelity: Vec<PairViolation>,
    pub join: Vec<JoinStabilization>,
}

/// First stage where `≡_m` relates a pair that `≡_n` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub m: usize,
    pub n: usize,
    pub found: Option<(usize, (usize, usize))>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    /// Nothing wrong yet, but some join pair needs more stages to decide.
    Pending,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepReport {
    pub variant: RuleVariant,
    pub depth: usize,
    pub stages: Vec<StageReport>,
    pub separation: Vec<Separation>,
}

impl RepReport {
    pub fn monotone(&self) -> bool {
        self.stages
            .iter()
            .all(|s| s.zero_is_identity && s.stage_monotone && s.monotonicity.is_empty())
    }

    pub fn meet_faithful(&self) -> bool {
        self.stages.iter().all(|s| s.meet_fidelity.is_empty())
    }

    /// Largest `at - j` over stabilized join pairs.
    pub fn max_join_depth(&self) -> usize {
        self.stages
            .iter()
            .flat_map(|s| {
                s.join.iter().filter_map(move |p| match p.status {
                    JoinStatus::Stabilized { at } => Some(at - s.stage),
                    JoinStatus::Unstabilized { .. } => None,
                })
            })
            .max()
            .unwrap_or(0)
    }

    /// Join pairs must stabilize within `bound` stages whenever the build is
    /// deep enough to tell; shallower ones are pending.
    pub fn join_outcome(&self, bound: usize) -> Outcome {
        let mut out = Outcome::Pass;
        for s in &self.stages {
            for p in &s.join {
                match p.status {
                    JoinStatus::Stabilized { at } if at - s.stage <= bound => {}
                    JoinStatus::Stabilized { .. } => return Outcome::Fail,
                    JoinStatus::Unstabilized { .. } if s.stage + bound <= self.depth => {
                        return Outcome::Fail
                    }
                    JoinStatus::Unstabilized { .. } => out = Outcome::Pending,
                }
            }
        }
        out
    }

    /// Every `m ≰ n` separated, and no later than `by`.
    pub fn separated_by(&self, by: usize) -> bool {
        self.separation
            .iter()
            .all(|s| matches!(s.found, Some((j, _)) if j <= by))
    }

    pub fn separated(&self) -> bool {
        self.separation.iter().all(|s| s.found.is_some())
    }

    pub fn outcome(&self, join_bound: usize) -> Outcome {
        if !self.monotone() || !self.meet_faithful() || !self.separated() {
            return Outcome::Fail;
        }
        self.join_outcome(join_bound)
    }
}

/// Checks stages `0..=depth` of `r` against its color lattice.
pub fn rep_verify(r: &RepSequence, depth: usize) -> Result<RepReport> {
    if depth >= r.stage_count() {
        return Err(Error::Precondition(format!(
            "depth {depth} needs {} stages, sequence has {}",
            depth + 1,
            r.stage_count()
        )));
    }
    let l = r.lattice();
    let parts: Vec<Vec<Partition>> = (0..=depth).map(|j| r.relations(j)).collect();
    let pairs: Vec<(usize, usize)> = l
        .elements()
        .flat_map(|m| (m + 1..l.len()).map(move |n| (m, n)))
        .collect();
    let joined: Vec<Vec<Partition>> = parts
        .iter()
        .map(|ps| {
            pairs
                .iter()
                .map(|&(m, n)| ps[m].join(&ps[n]).expect("same carrier"))
                .collect()
        })
        .collect();

    let mut stages = Vec::with_capacity(depth + 1);
    for j in 0..=depth {
        let ps = &parts[j];
        let zero_is_identity = ps[l.unit()].is_identity();
        let stage_monotone = j == 0
            || l.elements()
                .all(|m| parts[j - 1][m].refines(&ps[m].restrict(r.vertex_count(j - 1))));
        let mut monotonicity = Vec::new();
        for m in l.elements() {
            for n in l.elements() {
                if m != n && l.leq(m, n) {
                    if let Some(witness) = ps[m].excess_over(&ps[n]) {
                        monotonicity.push(PairViolation { m, n, witness });
                    }
                }
            }
        }
        let mut meet_fidelity = Vec::new();
        let mut join = Vec::new();
        for (pi, &(m, n)) in pairs.iter().enumerate() {
            let inter = ps[m].meet(&ps[n]).expect("same carrier");
            let lhs = &ps[l.meet(m, n)];
            if let Some(witness) = inter.excess_over(lhs).or_else(|| lhs.excess_over(&inter)) {
                meet_fidelity.push(PairViolation { m, n, witness });
            }
            let target = &ps[l.join(m, n)];
            let mut status = None;
            let mut last_witness = (0, 0);
            for (jj, jp) in joined.iter().enumerate().skip(j) {
                match target.excess_over(&jp[pi].restrict(r.vertex_count(j))) {
                    None => {
                        status = Some(JoinStatus::Stabilized { at: jj });
                        break;
                    }
                    Some(w) => last_witness = w,
                }
            }
            join.push(JoinStabilization {
                m,
                n,
                status: status.unwrap_or(JoinStatus::Unstabilized {
                    witness: last_witness,
                }),
            });
        }
        stages.push(StageReport {
            stage: j,
            vertices: r.vertex_count(j),
            edges: r.edge_count(j),
            zero_is_identity,
            stage_monotone,
            monotonicity,
            meet_fidelity,
            join,
        });
    }

    let mut separation = Vec::new();
    for m in l.elements() {
        for n in l.elements() {
            if !l.leq(m, n) {
                let found =
                    (0..=depth).find_map(|j| parts[j][m].excess_over(&parts[j][n]).map(|w| (j, w)));
                separation.push(Separation { m, n, found });
            }
        }
    }
    Ok(RepReport {
        variant: r.variant(),
        depth,
        stages,
        separation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{make_standard, named, Family};
    use crate::pudlak::{ColoredGraph, Edge};

    #[test]
    fn two_chain_trivial() {
        let l = make_standard(Family::Chain, 2).unwrap();
        let r = RepSequence::build(l, 1, RuleVariant::B, 4, 10_000).unwrap();
        let rep = rep_verify(&r, 3).unwrap();
        assert_eq!(rep.outcome(2), Outcome::Pass);
        assert!(rep.separated_by(0));
    }

    #[test]
    fn variant_b_passes_corpus() {
        for tag in ["chain3", "b2", "m3", "n5"] {
            let l = named(tag).unwrap();
            let top = l.top();
            let r = RepSequence::build(l, top, RuleVariant::B, 3, 10_000).unwrap();
            let rep = rep_verify(&r, 2).unwrap();
            assert!(rep.monotone(), "{tag}");
            assert!(rep.meet_faithful(), "{tag}");
            assert!(rep.separated_by(1), "{tag}");
            assert!(rep.max_join_depth() <= 1, "{tag}");
            // the deepest stage cannot be decided without a further stage
            assert_ne!(rep.outcome(2), Outcome::Fail, "{tag}");
            let settled = rep.stages[..2].iter().flat_map(|s| &s.join);
            assert!(
                settled
                    .clone()
                    .all(|p| matches!(p.status, JoinStatus::Stabilized { .. })),
                "{tag}"
            );
        }
    }

    #[test]
    fn variant_a_breaks_meet_fidelity_off_chains() {
        for tag in ["b2", "m3", "n5"] {
            let l = named(tag).unwrap();
            let top = l.top();
            let r = RepSequence::build(l, top, RuleVariant::A, 2, 10_000).unwrap();
            let rep = rep_verify(&r, 1).unwrap();
            assert!(!rep.meet_faithful(), "{tag}");
        }
    }

    #[test]
    fn injected_edge_is_caught() {
        let l = make_standard(Family::Boolean, 2).unwrap();
        let r = RepSequence::build(l.clone(), 3, RuleVariant::B, 2, 10_000).unwrap();
        let g = r.graph();
        let mut edges = g.edges().to_vec();
        // one atom's edge doubled by the other atom: ≡_1 ∩ ≡_2 is no longer ≡_0
        let e = *edges.iter().find(|e| e.color == 2).unwrap();
        edges.push(Edge {
            u: e.u,
            v: e.v,
            color: 1,
        });
        let bad = ColoredGraph::new(g.vertex_stages().to_vec(), edges, &l).unwrap();
        let r = RepSequence::from_graph(l, bad, RuleVariant::B).unwrap();
        let rep = rep_verify(&r, 1).unwrap();
        assert!(!rep.meet_faithful());
        assert_eq!(rep.outcome(2), Outcome::Fail);
    }

    #[test]
    fn depth_precondition() {
        let l = make_standard(Family::Chain, 2).unwrap();
        let r = RepSequence::seed(l, 1, RuleVariant::B).unwrap();
        assert!(rep_verify(&r, 1).is_err());
    }
}
