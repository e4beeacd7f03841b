use serde::{Deserialize, Serialize};

use super::usl::{FiniteUsl, UslTable};
use crate::error::{Error, Result};

/// A finite presentation: a preorder and a binary operation on `0..m`, whose
/// quotient by mutual comparability is meant to be an usl.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedUsl {
    pub m: usize,
    pub preorder: Vec<Vec<bool>>,
    pub join: Vec<Vec<usize>>,
}

impl PresentedUsl {
    fn validate(&self) -> Result<()> {
        let m = self.m;
        if m == 0 {
            return Err(Error::Format("empty carrier".into()));
        }
        if self.preorder.len() != m || self.preorder.iter().any(|r| r.len() != m) {
            return Err(Error::Format("preorder is not an m x m table".into()));
        }
        if self.join.len() != m
            || self
                .join
                .iter()
                .any(|r| r.len() != m || r.iter().any(|&v| v >= m))
        {
            return Err(Error::Format(
                "join is not a total m x m table over 0..m".into(),
            ));
        }
        if let Some(a) = (0..m).find(|&a| !self.preorder[a][a]) {
            return Err(Error::NotPreorder(format!("not reflexive at {a}")));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.preorder[a][b] && self.preorder[b][c] && !self.preorder[a][c] {
                        return Err(Error::NotPreorder(format!(
                            "{a}<={b}<={c} but not {a}<={c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct PresentedQuotient {
    pub usl: FiniteUsl,
    /// Class of each carrier element, numbered by least member.
    pub classes: Vec<usize>,
}

/// Collapses `a <=' b & b <=' a` and induces order and join on the classes.
pub fn quotient_presentation(p: &PresentedUsl) -> Result<PresentedQuotient> {
    p.validate()?;
    let m = p.m;
    let equiv = |a: usize, b: usize| p.preorder[a][b] && p.preorder[b][a];

    let mut classes = vec![usize::MAX; m];
    let mut reps = Vec::new();
    for a in 0..m {
        if classes[a] == usize::MAX {
            for b in a..m {
                if equiv(a, b) {
                    classes[b] = reps.len();
                }
            }
            reps.push(a);
        }
    }

    for a in 0..m {
        for a2 in (0..m).filter(|&x| classes[x] == classes[a]) {
            for b in 0..m {
                for b2 in (0..m).filter(|&x| classes[x] == classes[b]) {
                    let (j, j2) = (p.join[a][b], p.join[a2][b2]);
                    if classes[j] != classes[j2] {
                        return Err(Error::Incompatible(format!(
                            "{a}~{a2}, {b}~{b2} but {a}v{b}={j} and {a2}v{b2}={j2} are in different classes"
                        )));
                    }
                }
            }
        }
    }

    let q = reps.len();
    let leq = |x: usize, y: usize| p.preorder[reps[x]][reps[y]];
    let join: Vec<Vec<usize>> = (0..q)
        .map(|x| (0..q).map(|y| classes[p.join[reps[x]][reps[y]]]).collect())
        .collect();
    for x in 0..q {
        for y in 0..q {
            if leq(x, y) != (join[x][y] == y) {
                return Err(Error::Incompatible(format!(
                    "induced join of classes {x},{y} disagrees with the induced order"
                )));
            }
        }
    }
    let unit = (0..q)
        .find(|&x| (0..q).all(|y| leq(x, y)))
        .ok_or_else(|| Error::Incompatible("induced order has no least element".into()))?;

    let usl = FiniteUsl::from_table(&UslTable {
        n: q,
        join,
        unit,
        bound: None,
        meet: None,
    })?;
    Ok(PresentedQuotient { usl, classes })
}
