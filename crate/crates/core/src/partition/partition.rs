use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn from_partition(p: &Partition) -> Self {
        let mut uf = UnionFind::new(p.len());
        for x in 0..p.len() {
            uf.union(x, p.label(x));
        }
        uf
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn to_partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// An equivalence relation on `0..n`, stored as the least member of each element's block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    /// Canonicalizes an arbitrary block labelling.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Self {
        let mut least = HashMap::with_capacity(raw.len());
        let labels = raw
            .iter()
            .enumerate()
            .map(|(x, l)| *least.entry(*l).or_insert(x))
            .collect();
        Partition { labels }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n {
                    return Err(Error::Format(format!(
                        "block element {x} outside carrier of {n}"
                    )));
                }
                if owner[x] != usize::MAX {
                    return Err(Error::Format(format!("element {x} in two blocks")));
                }
                owner[x] = i;
            }
        }
        if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Format(format!("element {x} in no block")));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Equivalence closure of a set of pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut uf = UnionFind::new(n);
        for (a, b) in pairs {
            uf.union(a, b);
        }
        uf.to_partition()
    }

    /// Parses block notation like `01|23` (single digits) or `0,1|2,3`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let blocks: Result<Vec<Vec<usize>>> = s
            .split('|')
            .map(|b| {
                let b = b.trim();
                let parsed: std::result::Result<Vec<usize>, _> = if b.contains(',') {
                    b.split(',').map(|t| t.trim().parse::<usize>()).collect()
                } else {
                    b.chars().map(|c| c.to_string().parse::<usize>()).collect()
                };
                parsed.map_err(|_| Error::Format(format!("bad block {b:?}")))
            })
            .collect();
        Self::from_blocks(n, &blocks?)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Least member of the block containing `x`.
    #[inline]
    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn same(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.len()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in self.labels.iter().enumerate() {
            if l == x {
                index[x] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[l]].push(x);
        }
        blocks
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(x, &l)| x == l)
            .count()
    }

    /// Number of ordered pairs in the relation.
    pub fn pair_count(&self) -> usize {
        let mut sizes = vec![0usize; self.len()];
        self.labels.iter().for_each(|&l| sizes[l] += 1);
        sizes.iter().map(|s| s * s).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(x, &l)| x == l)
    }

    /// A pair related here but not in `other`, if any.
    pub fn excess_over(&self, other: &Partition) -> Option<(usize, usize)> {
        (0..self.len())
            .find(|&x| !other.same(self.labels[x], x))
            .map(|x| (self.labels[x], x))
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn refines(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.excess_over(other).is_none()
    }

    fn check_carrier(&self, other: &Partition) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::CarrierMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Intersection of the pair sets.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_carrier(other)?;
        let keyed: Vec<(usize, usize)> = (0..self.len())
            .map(|x| (self.labels[x], other.labels[x]))
            .collect();
        Ok(Partition::from_labels(&keyed))
    }

    /// Transitive closure of the union of the pair sets.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_carrier(other)?;
        let mut uf = UnionFind::from_partition(self);
        for x in 0..other.len() {
            uf.union(x, other.labels[x]);
        }
        Ok(uf.to_partition())
    }

    /// Restriction to the first `n` elements.
    pub fn restrict(&self, n: usize) -> Partition {
        Partition::from_labels(&self.labels[..n])
    }

    /// Block notation: digits run together when every element is a single digit.
    pub fn notation(&self) -> String {
        let sep = if self.len() <= 10 { "" } else { "," };
        self.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.notation())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Every partition of `0..n` (restricted growth strings). Oracle use only.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(x: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
        if x == n {
            out.push(Partition::from_labels(rgs));
            return;
        }
        for b in 0..=max + 1 {
            rgs.push(b);
            rec(x + 1, n, rgs, max.max(b), out);
            rgs.pop();
        }
    }
    assert!(n <= 10, "Bell({n}) partitions requested");
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::identity(0));
        return out;
    }
    let mut rgs = vec![0];
    rec(1, n, &mut rgs, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(4, s).unwrap()
    }

    #[test]
    fn meet_examples() {
        let q = p("01|23");
        assert_eq!(
            q.meet(&Partition::identity(4)).unwrap(),
            Partition::identity(4)
        );
        assert_eq!(q.meet(&p("02|13")).unwrap(), Partition::identity(4));
        assert_eq!(q.meet(&q).unwrap(), q);
    }

    #[test]
    fn join_examples() {
        let q = p("01|23");
        assert_eq!(q.join(&Partition::full(4)).unwrap(), Partition::full(4));
        assert_eq!(q.join(&p("02|13")).unwrap(), Partition::full(4));
        assert_eq!(q.join(&Partition::identity(4)).unwrap(), q);
    }

    #[test]
    fn carrier_mismatch() {
        assert_eq!(
            Partition::full(3).meet(&Partition::full(4)),
            Err(Error::CarrierMismatch(3, 4))
        );
        assert_eq!(
            Partition::full(3).join(&Partition::full(2)),
            Err(Error::CarrierMismatch(3, 2))
        );
    }

    #[test]
    fn canonical_labels_are_least_members() {
        let q = Partition::from_labels(&[7, 3, 7, 3, 9]);
        assert_eq!(q.labels(), &[0, 1, 0, 1, 4]);
        assert_eq!(q.notation(), "02|13|4");
        assert_eq!(q.pair_count(), 4 + 4 + 1);
    }

    #[test]
    fn notation_round_trip_wide() {
        let q = Partition::from_pairs(12, [(0, 11), (3, 10)]);
        assert_eq!(q.notation(), "0,11|1|2|3,10|4|5|6|7|8|9");
        assert_eq!(Partition::parse(12, &q.notation()).unwrap(), q);
    }

    #[test]
    fn bad_blocks_rejected() {
        assert!(Partition::parse(4, "01|12|3").is_err());
        assert!(Partition::parse(4, "01|2").is_err());
        assert!(Partition::parse(4, "01|2|35").is_err());
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn partition_lattice_laws_exhaustive() {
        for n in 1..=4 {
            let all = all_partitions(n);
            for a in &all {
                for b in &all {
                    let m = a.meet(b).unwrap();
                    let j = a.join(b).unwrap();
                    assert_eq!(m, b.meet(a).unwrap());
                    assert_eq!(j, b.join(a).unwrap());
                    assert_eq!(a.meet(&j).unwrap(), *a, "absorption");
                    assert_eq!(a.join(&m).unwrap(), *a, "absorption");
                    assert!(m.refines(a) && a.refines(&j));
                    for c in &all {
                        assert_eq!(a.meet(&b.meet(c).unwrap()).unwrap(), m.meet(c).unwrap());
                        assert_eq!(a.join(&b.join(c).unwrap()).unwrap(), j.join(c).unwrap());
                    }
                }
            }
        }
    }
}
