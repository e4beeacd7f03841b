use super::hom::UslHom;
use super::usl::FiniteLattice;
use crate::error::{Error, Result};

/// A finite truncation `L_0 -> L_1 -> ... -> L_{k-1}` of a direct system.
#[derive(Debug, Clone)]
pub struct DirectSystem {
    levels: Vec<FiniteLattice>,
    homs: Vec<UslHom>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitVerdict {
    /// Pushforwards first agree at this level.
    Equal { level: usize },
    /// No agreement at any level up to the depth. Not a proof of inequality in the limit.
    DistinctUpToDepth,
}

impl DirectSystem {
    pub fn new(levels: Vec<FiniteLattice>, homs: Vec<UslHom>) -> Result<Self> {
        if levels.is_empty() || homs.len() + 1 != levels.len() {
            return Err(Error::Format(format!(
                "{} levels need {} homomorphisms",
                levels.len(),
                levels.len().saturating_sub(1)
            )));
        }
        for (i, h) in homs.iter().enumerate() {
            if h.source() != &levels[i] || h.target() != &levels[i + 1] {
                return Err(Error::Format(format!(
                    "homomorphism {i} does not connect levels {i} and {}",
                    i + 1
                )));
            }
        }
        Ok(DirectSystem { levels, homs })
    }

    /// Every level equal to `l`, every map the identity.
    pub fn constant(l: &FiniteLattice, len: usize) -> Self {
        DirectSystem {
            levels: vec![l.clone(); len],
            homs: vec![UslHom::identity(l); len.saturating_sub(1)],
        }
    }

    pub fn levels(&self) -> &[FiniteLattice] {
        &self.levels
    }

    pub fn homs(&self) -> &[UslHom] {
        &self.homs
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Image of `a ∈ L_from` in `L_to`.
    pub fn push(&self, from: usize, a: usize, to: usize) -> usize {
        (from..to).fold(a, |x, i| self.homs[i].apply(x))
    }
}

/// Decides whether `(i, a)` and `(j, b)` are identified by some level `<= depth`.
pub fn limit_equal(
    d: &DirectSystem,
    (i, a): (usize, usize),
    (j, b): (usize, usize),
    depth: usize,
) -> Result<LimitVerdict> {
    let k = d.len();
    if i >= k || j >= k || depth >= k {
        return Err(Error::OutOfRange(format!(
            "levels ({i}, {j}, depth {depth}) with {k} levels"
        )));
    }
    if depth < i.max(j) {
        return Err(Error::OutOfRange(format!(
            "depth {depth} below level {}",
            i.max(j)
        )));
    }
    if !d.levels[i].contains(a) || !d.levels[j].contains(b) {
        return Err(Error::OutOfRange(format!(
            "element ({i}, {a}) or ({j}, {b})"
        )));
    }
    let start = i.max(j);
    let (mut x, mut y) = (d.push(i, a, start), d.push(j, b, start));
    for level in start..=depth {
        if level > start {
            x = d.homs[level - 1].apply(x);
            y = d.homs[level - 1].apply(y);
        }
        if x == y {
            return Ok(LimitVerdict::Equal { level });
        }
    }
    Ok(LimitVerdict::DistinctUpToDepth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::hom::HomKind;
    use crate::order::standard::{make_standard, Family};

    #[test]
    fn identity_system() {
        let m3 = make_standard(Family::Mn, 3).unwrap();
        let d = DirectSystem::constant(&m3, 3);
        assert_eq!(
            limit_equal(&d, (0, 2), (1, 2), 2).unwrap(),
            LimitVerdict::Equal { level: 1 }
        );
        assert_eq!(
            limit_equal(&d, (0, 1), (0, 2), 2).unwrap(),
            LimitVerdict::DistinctUpToDepth
        );
    }

    #[test]
    fn collapse_at_next_level() {
        let b2 = make_standard(Family::Boolean, 2).unwrap();
        let c2 = make_standard(Family::Chain, 2).unwrap();
        // kill atom 1
        let h = UslHom::new(b2.clone(), c2.clone(), vec![0, 0, 1, 1], HomKind::BuslHom).unwrap();
        let d = DirectSystem::new(vec![b2, c2.clone()], vec![h]).unwrap();
        assert_eq!(
            limit_equal(&d, (0, 0), (0, 1), 0).unwrap(),
            LimitVerdict::DistinctUpToDepth
        );
        assert_eq!(
            limit_equal(&d, (0, 0), (0, 1), 1).unwrap(),
            LimitVerdict::Equal { level: 1 }
        );
        assert_eq!(
            limit_equal(&d, (0, 3), (1, 1), 1).unwrap(),
            LimitVerdict::Equal { level: 1 }
        );
    }

    #[test]
    fn out_of_range() {
        let c2 = make_standard(Family::Chain, 2).unwrap();
        let d = DirectSystem::constant(&c2, 2);
        assert!(limit_equal(&d, (0, 0), (2, 0), 1).is_err());
        assert!(limit_equal(&d, (0, 5), (1, 0), 1).is_err());
        assert!(limit_equal(&d, (1, 0), (1, 0), 0).is_err());
    }
}
