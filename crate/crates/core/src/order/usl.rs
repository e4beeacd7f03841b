use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw candidate structure as read from a lattice file, before any axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UslTable {
    pub n: usize,
    pub join: Vec<Vec<usize>>,
    pub unit: usize,
    pub bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
}

impl UslTable {
    fn check_shape(&self) -> Result<()> {
        check_square("join", &self.join, self.n)?;
        if let Some(meet) = &self.meet {
            check_square("meet", meet, self.n)?;
        }
        if self.unit >= self.n {
            return Err(Error::Format(format!("unit {} out of range", self.unit)));
        }
        if let Some(z) = self.bound {
            if z >= self.n {
                return Err(Error::Format(format!("bound {z} out of range")));
            }
        }
        Ok(())
    }
}

fn check_square(name: &str, table: &[Vec<usize>], n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Format("empty carrier".into()));
    }
    if table.len() != n {
        return Err(Error::Format(format!(
            "{name} table has {} rows, expected {n}",
            table.len()
        )));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Format(format!(
                "{name} row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::Format(format!(
                "{name} row {a} contains {v}, out of range"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: Vec<usize> },
    NotApplicable,
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        !matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationVerdict {
    pub equation: u8,
    pub law: &'static str,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub equations: Vec<EquationVerdict>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.equations.iter().all(|e| e.verdict.is_pass())
    }

    pub fn first_failure(&self) -> Option<&EquationVerdict> {
        self.equations.iter().find(|e| !e.verdict.is_pass())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.equations {
            match &e.verdict {
                Verdict::Pass => writeln!(f, "eq {} ({}): pass", e.equation, e.law)?,
                Verdict::NotApplicable => writeln!(f, "eq {} ({}): n/a", e.equation, e.law)?,
                Verdict::Fail { witness } => writeln!(
                    f,
                    "eq {} ({}): FAIL witness {:?}",
                    e.equation, e.law, witness
                )?,
            }
        }
        Ok(())
    }
}

/// Checks the five bounded unital semilattice equations exhaustively.
///
/// Witnesses are the least offending tuple in lexicographic order.
pub fn check_busl_axioms(s: &UslTable) -> Result<AxiomReport> {
    s.check_shape()?;
    let n = s.n;
    let j = |a: usize, b: usize| s.join[a][b];

    let assoc = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| j(a, j(b, c)) != j(j(a, b), c))
        .map(|(a, b, c)| vec![a, b, c]);
    let comm = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| j(a, b) != j(b, a))
        .map(|(a, b)| vec![a, b]);
    let idem = (0..n).find(|&a| j(a, a) != a).map(|a| vec![a]);
    let unit = (0..n).find(|&a| j(a, s.unit) != a).map(|a| vec![a]);
    let bound = s
        .bound
        .map(|z| (0..n).find(|&a| j(a, z) != z).map(|a| vec![a]));

    let verdict = |w: Option<Vec<usize>>| match w {
        None => Verdict::Pass,
        Some(witness) => Verdict::Fail { witness },
    };
    Ok(AxiomReport {
        equations: vec![
            EquationVerdict {
                equation: 1,
                law: "associativity",
                verdict: verdict(assoc),
            },
            EquationVerdict {
                equation: 2,
                law: "commutativity",
                verdict: verdict(comm),
            },
            EquationVerdict {
                equation: 3,
                law: "idempotence",
                verdict: verdict(idem),
            },
            EquationVerdict {
                equation: 4,
                law: "unit",
                verdict: verdict(unit),
            },
            EquationVerdict {
                equation: 5,
                law: "bound",
                verdict: match bound {
                    None => Verdict::NotApplicable,
                    Some(w) => verdict(w),
                },
            },
        ],
    })
}

/// A finite unital semilattice, optionally bounded. The order is derived
/// from the join table: `a <= b` iff `a * b = b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteUsl {
    n: usize,
    join: Vec<usize>,
    unit: usize,
    bound: Option<usize>,
}

impl FiniteUsl {
    /// Validates `table` against the axioms and builds the semilattice.
    pub fn from_table(table: &UslTable) -> Result<Self> {
        let report = check_busl_axioms(table)?;
        if let Some(bad) = report.first_failure() {
            return Err(Error::Axioms(format!(
                "eq {} ({}) fails: {:?}",
                bad.equation, bad.law, bad.verdict
            )));
        }
        Ok(Self::from_join_unchecked(
            table.n,
            table.join.iter().flatten().copied().collect(),
            table.unit,
            table.bound,
        ))
    }

    pub(crate) fn from_join_unchecked(
        n: usize,
        join: Vec<usize>,
        unit: usize,
        bound: Option<usize>,
    ) -> Self {
        debug_assert_eq!(join.len(), n * n);
        FiniteUsl {
            n,
            join,
            unit,
            bound,
        }
    }

    /// Builds a semilattice from a closure; the result is axiom-checked.
    pub fn from_fn(
        n: usize,
        unit: usize,
        bound: Option<usize>,
        join: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = UslTable {
            n,
            join: (0..n)
                .map(|a| (0..n).map(|b| join(a, b)).collect())
                .collect(),
            unit,
            bound,
            meet: None,
        };
        Self::from_table(&table)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    /// Greatest element; exists in every finite usl even when no bound is designated.
    pub fn top(&self) -> usize {
        self.bound.unwrap_or_else(|| self.join_all(0..self.n))
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.unit, |acc, x| self.join(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.n
    }

    pub fn with_bound(mut self, bound: Option<usize>) -> Result<Self> {
        if let Some(z) = bound {
            if z >= self.n || self.elements().any(|a| self.join(a, z) != z) {
                return Err(Error::Axioms(format!("{z} is not an absorbing bound")));
            }
        }
        self.bound = bound;
        Ok(self)
    }

    pub fn to_table(&self) -> UslTable {
        UslTable {
            n: self.n,
            join: self.join.chunks(self.n).map(<[usize]>::to_vec).collect(),
            unit: self.unit,
            bound: self.bound,
            meet: None,
        }
    }

    /// Greatest lower bound of `a` and `b`, if one exists.
    pub fn glb(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = self
            .elements()
            .filter(|&x| self.leq(x, a) && self.leq(x, b))
            .collect();
        let cand = self.join_all(lower.iter().copied());
        (self.leq(cand, a) && self.leq(cand, b)).then_some(cand)
    }
}

/// A finite usl together with its meet table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    usl: FiniteUsl,
    meet: Vec<usize>,
}

impl Deref for FiniteLattice {
    type Target = FiniteUsl;

    fn deref(&self) -> &FiniteUsl {
        &self.usl
    }
}

impl FiniteLattice {
    /// Computes all meets as greatest lower bounds.
    pub fn from_usl(usl: FiniteUsl) -> Result<Self> {
        let n = usl.len();
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = usl.glb(a, b).ok_or(Error::NotDualizable(a, b))?;
            }
        }
        Ok(FiniteLattice { usl, meet })
    }

    /// Uses a supplied meet table, rejecting it unless every entry is the greatest lower bound.
    pub fn with_meet(usl: FiniteUsl, meet: &[Vec<usize>]) -> Result<Self> {
        let computed = Self::from_usl(usl)?;
        for a in 0..computed.len() {
            for b in 0..computed.len() {
                if meet[a][b] != computed.meet(a, b) {
                    return Err(Error::NotDualizable(a, b));
                }
            }
        }
        Ok(computed)
    }

    pub fn from_table(table: &UslTable) -> Result<Self> {
        let usl = FiniteUsl::from_table(table)?;
        match &table.meet {
            Some(m) => Self::with_meet(usl, m),
            None => Self::from_usl(usl),
        }
    }

    pub fn from_fn(
        n: usize,
        unit: usize,
        bound: Option<usize>,
        join: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        Self::from_usl(FiniteUsl::from_fn(n, unit, bound, join)?)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.usl.len() + b]
    }

    pub fn as_usl(&self) -> &FiniteUsl {
        &self.usl
    }

    pub fn to_table(&self) -> UslTable {
        let mut t = self.usl.to_table();
        t.meet = Some(
            self.meet
                .chunks(self.len())
                .map(<[usize]>::to_vec)
                .collect(),
        );
        t
    }

    /// The order dual on the same carrier: joins and meets swap, the unit
    /// becomes the top and the old unit is designated as the bound.
    pub fn dual(&self) -> FiniteLattice {
        let n = self.len();
        FiniteLattice {
            usl: FiniteUsl::from_join_unchecked(
                n,
                self.meet.clone(),
                self.top(),
                Some(self.unit()),
            ),
            meet: self.usl.join.clone(),
        }
    }

    /// Elements `x` with `a < x` and nothing strictly between.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.elements()
            .filter(|&x| x != a && self.leq(a, x))
            .filter(|&x| {
                !self
                    .elements()
                    .any(|y| y != a && y != x && self.leq(a, y) && self.leq(y, x))
            })
            .collect()
    }
}

/// Dualizes an usl, computing meets first.
pub fn dual(l: &FiniteUsl) -> Result<FiniteLattice> {
    Ok(FiniteLattice::from_usl(l.clone())?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_table(n: usize) -> UslTable {
        UslTable {
            n,
            join: (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect(),
            unit: 0,
            bound: Some(n - 1),
            meet: None,
        }
    }

    #[test]
    fn two_chain_passes() {
        let r = check_busl_axioms(&chain_table(2)).unwrap();
        assert!(r.passes());
    }

    #[test]
    fn idempotence_violation_has_witness() {
        let mut t = chain_table(3);
        t.join[1][1] = 2;
        let r = check_busl_axioms(&t).unwrap();
        assert_eq!(r.equations[2].verdict, Verdict::Fail { witness: vec![1] });
        assert!(FiniteUsl::from_table(&t).is_err());
    }

    #[test]
    fn ragged_table_is_format_error() {
        let mut t = chain_table(3);
        t.join[2].pop();
        assert!(matches!(check_busl_axioms(&t), Err(Error::Format(_))));
        let mut t = chain_table(3);
        t.join[0][0] = 7;
        assert!(matches!(check_busl_axioms(&t), Err(Error::Format(_))));
    }

    #[test]
    fn unbounded_usl_skips_eq5() {
        let mut t = chain_table(3);
        t.bound = None;
        let r = check_busl_axioms(&t).unwrap();
        assert_eq!(r.equations[4].verdict, Verdict::NotApplicable);
        assert!(r.passes());
        let u = FiniteUsl::from_table(&t).unwrap();
        assert_eq!(u.top(), 2);
    }

    #[test]
    fn wrong_bound_fails_eq5() {
        let mut t = chain_table(3);
        t.bound = Some(1);
        let r = check_busl_axioms(&t).unwrap();
        assert_eq!(r.equations[4].verdict, Verdict::Fail { witness: vec![2] });
    }

    #[test]
    fn bad_meet_table_rejected() {
        let mut t = chain_table(3);
        t.meet = Some(vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 1]]);
        assert_eq!(
            FiniteLattice::from_table(&t),
            Err(Error::NotDualizable(2, 2))
        );
    }

    #[test]
    fn dual_of_chain_reverses() {
        let l = FiniteLattice::from_table(&chain_table(3)).unwrap();
        let d = l.dual();
        assert_eq!(d.unit(), 2);
        assert_eq!(d.bound(), Some(0));
        assert!(d.leq(2, 0));
        assert_eq!(d.join(0, 1), 0);
        assert_eq!(d.dual(), l);
    }

    #[test]
    fn table_round_trip() {
        let l = FiniteLattice::from_table(&chain_table(4)).unwrap();
        assert_eq!(FiniteLattice::from_table(&l.to_table()).unwrap(), l);
    }
}
