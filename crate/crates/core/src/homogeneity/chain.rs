use std::collections::VecDeque;

use serde::Serialize;

use super::structure::RelStructure;
use crate::error::{Error, Result};

/// Maps `f_0..f_n` and intermediate points `z_1..z_n` linking `{c, d}` back
/// to images of `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessChain {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub z: Vec<usize>,
    pub maps: Vec<Vec<usize>>,
}

impl WitnessChain {
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// Rechecks every condition from scratch, including that each map preserves `s`.
    pub fn verify(&self, s: &RelStructure) -> bool {
        if self.maps.len() != self.z.len() + 1 || !self.maps.iter().all(|f| s.preserves(f)) {
            return false;
        }
        let mut points = vec![self.c];
        points.extend(&self.z);
        points.push(self.d);
        self.maps
            .iter()
            .zip(points.windows(2))
            .all(|(f, w)| same_pair((f[self.a], f[self.b]), (w[0], w[1])))
    }
}

fn same_pair((p, q): (usize, usize), (x, y): (usize, usize)) -> bool {
    (p == x && q == y) || (p == y && q == x)
}

/// Unordered pairs `{f(a), f(b)}`, each with the first map producing it.
struct PairGraph {
    n: usize,
    /// `via[x * n + y]`: index of the first map sending `{a, b}` onto `{x, y}`.
    via: Vec<Option<usize>>,
}

impl PairGraph {
    fn new(n: usize, maps: &[Vec<usize>], a: usize, b: usize) -> Self {
        let mut via = vec![None; n * n];
        for (i, f) in maps.iter().enumerate() {
            let (x, y) = (f[a], f[b]);
            for slot in [x * n + y, y * n + x] {
                via[slot].get_or_insert(i);
            }
        }
        PairGraph { n, via }
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        x != y && self.via[x * self.n + y].is_some()
    }

    fn distances_to(&self, d: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[d] = Some(0);
        let mut queue = VecDeque::from([d]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in 0..self.n {
                if dist[y].is_none() && self.adjacent(x, y) {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Shortest walk from `c` to `d`, lexicographically least among shortest.
    fn path(&self, dist: &[Option<usize>], c: usize, d: usize) -> Option<Vec<usize>> {
        let mut at = c;
        let mut path = vec![c];
        let mut left = dist[c]?;
        while left > 0 {
            at = (0..self.n).find(|&y| dist[y] == Some(left - 1) && self.adjacent(at, y))?;
            path.push(at);
            left -= 1;
        }
        debug_assert_eq!(at, d);
        Some(path)
    }
}

fn chain_from(
    maps: &[Vec<usize>],
    g: &PairGraph,
    dist: &[Option<usize>],
    (a, b, c, d): (usize, usize, usize, usize),
) -> Option<WitnessChain> {
    if c == d {
        // a map sending both a and b to c; the constant map always qualifies
        let f = maps.iter().find(|f| f[a] == c && f[b] == c)?;
        return Some(WitnessChain {
            a,
            b,
            c,
            d,
            z: Vec::new(),
            maps: vec![f.clone()],
        });
    }
    let path = g.path(dist, c, d)?;
    let steps = path
        .windows(2)
        .map(|w| maps[g.via[w[0] * g.n + w[1]].unwrap()].clone())
        .collect();
    Some(WitnessChain {
        a,
        b,
        c,
        d,
        z: path[1..path.len() - 1].to_vec(),
        maps: steps,
    })
}

/// Shortest witness chain for `(a, b, c, d)` using the given preserving maps.
///
/// `Ok(None)` means `{c, d}` is outside the equivalence generated by the
/// images of `{a, b}`, which makes the structure non-homogeneous.
pub fn malcev_chain(
    s: &RelStructure,
    maps: &[Vec<usize>],
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<Option<WitnessChain>> {
    if !super::structure::premise_holds(s, a, b, c, d)? {
        return Err(Error::PremiseFailed { a, b, c, d });
    }
    let g = PairGraph::new(s.len(), maps, a, b);
    let dist = g.distances_to(d);
    Ok(chain_from(maps, &g, &dist, (a, b, c, d)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    pub carrier: usize,
    pub maps: usize,
    pub quadruples: usize,
    pub premises: usize,
    pub max_chain_length: usize,
    pub counterexample: Option<(usize, usize, usize, usize)>,
    #[serde(skip)]
    pub witnesses: Vec<WitnessChain>,
}

/// Runs [`malcev_chain`] on every quadruple satisfying the premise.
pub fn homogeneity_check(s: &RelStructure, maps: &[Vec<usize>]) -> HomogeneityReport {
    let n = s.len();
    let mut report = HomogeneityReport {
        homogeneous: true,
        carrier: n,
        maps: maps.len(),
        quadruples: n.pow(4),
        premises: 0,
        max_chain_length: 0,
        counterexample: None,
        witnesses: Vec::new(),
    };
    for a in 0..n {
        for b in 0..n {
            let g = PairGraph::new(n, maps, a, b);
            let dists: Vec<Vec<Option<usize>>> = (0..n).map(|d| g.distances_to(d)).collect();
            for c in 0..n {
                for (d, dist) in dists.iter().enumerate() {
                    if !s.premise_holds(a, b, c, d) {
                        continue;
                    }
                    report.premises += 1;
                    match chain_from(maps, &g, dist, (a, b, c, d)) {
                        Some(w) => {
                            report.max_chain_length = report.max_chain_length.max(w.len());
                            report.witnesses.push(w);
                        }
                        None => {
                            report.homogeneous = false;
                            report.counterexample.get_or_insert((a, b, c, d));
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::relation_preserving_maps;
    use crate::order::{make_standard, Family};
    use crate::partition::{FiniteAlgebra, Partition};

    fn klein() -> (RelStructure, Vec<Vec<usize>>) {
        let s = RelStructure::congruences(&FiniteAlgebra::klein(), 16).unwrap();
        let maps = relation_preserving_maps(&s, 12, 1 << 20).unwrap();
        (s, maps)
    }

    #[test]
    fn trivial_quadruple() {
        let (s, maps) = klein();
        let w = malcev_chain(&s, &maps, 0, 1, 0, 1).unwrap().unwrap();
        assert_eq!(w.len(), 0);
        assert_eq!(w.maps[0], vec![0, 1, 2, 3]);
        assert!(w.verify(&s));
    }

    #[test]
    fn klein_translation() {
        let (s, maps) = klein();
        let w = malcev_chain(&s, &maps, 0, 1, 2, 3).unwrap().unwrap();
        assert_eq!(w.len(), 0);
        let f = &w.maps[0];
        assert!(same_pair((f[0], f[1]), (2, 3)));
        assert!(w.verify(&s));
        // swapped order is accepted as the same set
        let w = malcev_chain(&s, &maps, 0, 1, 3, 2).unwrap().unwrap();
        assert!(w.verify(&s));
    }

    #[test]
    fn premise_failure_rejected() {
        let (s, maps) = klein();
        assert_eq!(
            malcev_chain(&s, &maps, 0, 1, 0, 2),
            Err(Error::PremiseFailed {
                a: 0,
                b: 1,
                c: 0,
                d: 2
            })
        );
    }

    #[test]
    fn one_point() {
        let s = RelStructure::discrete(1);
        let maps = relation_preserving_maps(&s, 12, 10).unwrap();
        assert!(homogeneity_check(&s, &maps).homogeneous);
    }

    #[test]
    fn non_congruence_family_counterexample() {
        // 01|2|3 and 0|12|3 with their join and meet, indexed by B_2
        let rel = |t: &str| Partition::parse(4, t).unwrap();
        let s = RelStructure::new(
            make_standard(Family::Boolean, 2).unwrap(),
            vec![rel("0|1|2|3"), rel("01|2|3"), rel("0|12|3"), rel("0123")],
        )
        .unwrap();
        let maps = relation_preserving_maps(&s, 12, 1 << 20).unwrap();
        let report = homogeneity_check(&s, &maps);
        assert!(!report.homogeneous);
        assert_eq!(report.counterexample, Some((0, 2, 0, 3)));
        assert_eq!(malcev_chain(&s, &maps, 0, 2, 0, 3).unwrap(), None);
    }
}
