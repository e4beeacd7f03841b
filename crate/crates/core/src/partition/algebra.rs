use serde::Serialize;
use serde_json::Value;

use super::partition::{Partition, UnionFind};
use crate::error::{Error, Result};
use crate::order::FiniteLattice;

/// One finitary operation as a flat table; the first argument is most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operation {
    arity: usize,
    table: Vec<usize>,
}

impl Operation {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn eval(&self, n: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        self.table[args.iter().fold(0, |acc, &x| acc * n + x)]
    }
}

/// A finite carrier `0..n` with finitely many operations and no relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    n: usize,
    ops: Vec<Operation>,
}

/// Operation tables larger than this are rejected.
const MAX_TABLE: usize = 1 << 24;

impl FiniteAlgebra {
    pub fn new(n: usize, ops: Vec<(usize, Vec<usize>)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Format("empty carrier".into()));
        }
        let mut checked = Vec::with_capacity(ops.len());
        for (i, (arity, table)) in ops.into_iter().enumerate() {
            let size = u32::try_from(arity)
                .ok()
                .and_then(|k| n.checked_pow(k))
                .filter(|&s| s <= MAX_TABLE)
                .ok_or(Error::SizeExceeded {
                    what: "operation table",
                    actual: usize::MAX,
                    limit: MAX_TABLE,
                })?;
            if table.len() != size {
                return Err(Error::Format(format!(
                    "op {i}: table has {} entries, arity {arity} needs {size}",
                    table.len()
                )));
            }
            if let Some(v) = table.iter().find(|&&v| v >= n) {
                return Err(Error::Format(format!("op {i}: value {v} outside carrier")));
            }
            checked.push(Operation { arity, table });
        }
        Ok(FiniteAlgebra { n, ops: checked })
    }

    pub fn from_binary(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(n, vec![(2, (0..n * n).map(|i| f(i / n, i % n)).collect())])
    }

    /// A bare set: no operations.
    pub fn set(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Integers mod `n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::from_binary(n, |a, b| (a + b) % n)
    }

    /// Z2 x Z2 under xor, elements numbered 0=00, 1=01, 2=10, 3=11.
    pub fn klein() -> Self {
        Self::from_binary(4, |a, b| a ^ b).expect("static table")
    }

    /// The symmetric group on three letters, permutations in lexicographic order.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        Self::from_binary(6, |a, b| {
            let (p, q) = (perms[a], perms[b]);
            idx([p[q[0]], p[q[1]], p[q[2]]])
        })
        .expect("static table")
    }

    /// A lattice as an algebra with its join and meet.
    pub fn lattice(l: &FiniteLattice) -> Self {
        let n = l.len();
        let join = (0..n * n).map(|i| l.join(i / n, i % n)).collect();
        let meet = (0..n * n).map(|i| l.meet(i / n, i % n)).collect();
        Self::new(n, vec![(2, join), (2, meet)]).expect("lattice tables are total")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    /// Every basic translation `x -> f(c_0, .., x, .., c_k)` as `(op, table offset, stride)`.
    fn translations(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        self.ops.iter().enumerate().flat_map(move |(oi, op)| {
            let k = op.arity;
            (0..k).flat_map(move |pos| {
                let stride = n.pow((k - 1 - pos) as u32);
                let others = n.pow(k.saturating_sub(1) as u32);
                (0..others).map(move |r| {
                    // r enumerates the other arguments; splice a zero digit at `pos`
                    let low = r % stride;
                    let high = r / stride;
                    (oi, high * stride * n + low, stride)
                })
            })
        })
    }

    /// Parses the file form `{ "n": .., "ops": [ { "arity": .., "table": nested } ] }`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("missing \"n\"".into()))? as usize;
        let ops = v
            .get("ops")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("missing \"ops\"".into()))?;
        let mut parsed = Vec::new();
        for (i, op) in ops.iter().enumerate() {
            let arity = op
                .get("arity")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Format(format!("op {i}: missing arity")))?
                as usize;
            let table = op
                .get("table")
                .ok_or_else(|| Error::Format(format!("op {i}: missing table")))?;
            let mut flat = Vec::new();
            flatten(table, arity, n, &mut flat)
                .map_err(|e| Error::Format(format!("op {i}: {e}")))?;
            parsed.push((arity, flat));
        }
        Self::new(n, parsed)
    }

    pub fn to_json(&self) -> Value {
        fn nest(table: &[usize], depth: usize, n: usize) -> Value {
            if depth == 0 {
                return Value::from(table[0]);
            }
            let chunk = table.len() / n;
            Value::Array(table.chunks(chunk).map(|c| nest(c, depth - 1, n)).collect())
        }
        let ops: Vec<Value> = self
            .ops
            .iter()
            .map(|op| serde_json::json!({ "arity": op.arity, "table": nest(&op.table, op.arity, self.n) }))
            .collect();
        serde_json::json!({ "n": self.n, "ops": ops })
    }
}

fn flatten(
    v: &Value,
    depth: usize,
    n: usize,
    out: &mut Vec<usize>,
) -> std::result::Result<(), String> {
    if depth == 0 {
        let x = v.as_u64().ok_or("expected integer entry")?;
        out.push(x as usize);
        return Ok(());
    }
    let arr = v.as_array().ok_or("expected nested array")?;
    if arr.len() != n {
        return Err(format!("row of length {}, expected {n}", arr.len()));
    }
    arr.iter().try_for_each(|x| flatten(x, depth - 1, n, out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceViolation {
    pub op: usize,
    pub args: Vec<usize>,
    pub other_args: Vec<usize>,
}

/// `None` if `p` is compatible with every operation; otherwise two argument
/// tuples that agree up to `p` whose values do not.
///
/// Arguments are varied one position at a time, which suffices by transitivity.
pub fn is_congruence(a: &FiniteAlgebra, p: &Partition) -> Result<Option<CongruenceViolation>> {
    if p.len() != a.n {
        return Err(Error::CarrierMismatch(a.n, p.len()));
    }
    let n = a.n;
    for (oi, op) in a.ops.iter().enumerate() {
        for pos in 0..op.arity {
            let stride = n.pow((op.arity - 1 - pos) as u32);
            let others = n.pow((op.arity - 1) as u32);
            for x in 0..n {
                for y in (x + 1..n).filter(|&y| p.same(x, y)) {
                    for r in 0..others {
                        let base = (r / stride) * stride * n + r % stride;
                        let (u, v) = (base + x * stride, base + y * stride);
                        if !p.same(op.table[u], op.table[v]) {
                            return Ok(Some(CongruenceViolation {
                                op: oi,
                                args: decode(u, op.arity, n),
                                other_args: decode(v, op.arity, n),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn decode(mut idx: usize, arity: usize, n: usize) -> Vec<usize> {
    let mut args = vec![0; arity];
    for slot in args.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    args
}

/// Least congruence containing `(a, b)`: close the pair under basic translations,
/// taking the equivalence closure as merges happen.
pub fn principal_congruence(alg: &FiniteAlgebra, a: usize, b: usize) -> Result<Partition> {
    if a >= alg.n || b >= alg.n {
        return Err(Error::OutOfRange(format!(
            "pair ({a}, {b}) in carrier of {}",
            alg.n
        )));
    }
    let translations: Vec<(usize, usize, usize)> = alg.translations().collect();
    let mut uf = UnionFind::new(alg.n);
    let mut pending = Vec::new();
    if uf.union(a, b) {
        pending.push((a, b));
    }
    while let Some((x, y)) = pending.pop() {
        for &(oi, base, stride) in &translations {
            let t = &alg.ops[oi].table;
            let (u, v) = (t[base + x * stride], t[base + y * stride]);
            if uf.union(u, v) {
                pending.push((u, v));
            }
        }
    }
    Ok(uf.to_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition::all_partitions;

    #[test]
    fn identity_is_always_congruence() {
        for alg in [
            FiniteAlgebra::klein(),
            FiniteAlgebra::s3(),
            FiniteAlgebra::cyclic(5).unwrap(),
        ] {
            assert_eq!(
                is_congruence(&alg, &Partition::identity(alg.len())).unwrap(),
                None
            );
        }
    }

    #[test]
    fn klein_congruence_checks() {
        let k = FiniteAlgebra::klein();
        assert_eq!(
            is_congruence(&k, &Partition::parse(4, "01|23").unwrap()).unwrap(),
            None
        );
        let w = is_congruence(&k, &Partition::parse(4, "01|2|3").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(
            w,
            CongruenceViolation {
                op: 0,
                args: vec![0, 2],
                other_args: vec![1, 2]
            }
        );
    }

    #[test]
    fn principal_examples() {
        let k = FiniteAlgebra::klein();
        assert_eq!(
            principal_congruence(&k, 2, 2).unwrap(),
            Partition::identity(4)
        );
        assert_eq!(
            principal_congruence(&k, 0, 1).unwrap(),
            Partition::parse(4, "01|23").unwrap()
        );
        let s = FiniteAlgebra::set(5).unwrap();
        assert_eq!(
            principal_congruence(&s, 1, 3).unwrap(),
            Partition::parse(5, "0|13|2|4").unwrap()
        );
    }

    #[test]
    fn principal_is_least_by_filtering() {
        let algs = [
            FiniteAlgebra::klein(),
            FiniteAlgebra::cyclic(4).unwrap(),
            FiniteAlgebra::from_binary(5, |a, b| (a * b + 1) % 5).unwrap(),
            FiniteAlgebra::new(5, vec![(1, vec![1, 2, 3, 4, 4])]).unwrap(),
        ];
        for alg in &algs {
            let n = alg.len();
            let cons: Vec<Partition> = all_partitions(n)
                .into_iter()
                .filter(|p| is_congruence(alg, p).unwrap().is_none())
                .collect();
            for a in 0..n {
                for b in 0..n {
                    let pc = principal_congruence(alg, a, b).unwrap();
                    assert!(is_congruence(alg, &pc).unwrap().is_none());
                    assert!(pc.same(a, b));
                    for c in cons.iter().filter(|c| c.same(a, b)) {
                        assert!(pc.refines(c));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_mixed_arity() {
        let alg = FiniteAlgebra::new(
            3,
            vec![
                (0, vec![2]),
                (1, vec![1, 2, 0]),
                (3, (0..27).map(|i| i % 3).collect()),
            ],
        )
        .unwrap();
        let back = FiniteAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);
        assert_eq!(alg.ops()[2].eval(3, &[2, 1, 2]), 2);
    }

    #[test]
    fn malformed_tables_rejected() {
        assert!(FiniteAlgebra::new(3, vec![(2, vec![0; 8])]).is_err());
        assert!(FiniteAlgebra::new(3, vec![(1, vec![0, 1, 3])]).is_err());
        let v = serde_json::json!({"n": 2, "ops": [{"arity": 2, "table": [[0, 1], [1]]}]});
        assert!(FiniteAlgebra::from_json(&v).is_err());
    }
}
