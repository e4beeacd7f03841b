use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::usl::FiniteLattice;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `size` elements in a line.
    Chain,
    /// Subsets of a `size`-element set, numbered by bitmask.
    Boolean,
    /// `size` pairwise incomparable atoms between a bottom and a top.
    Mn,
    /// The pentagon; `size` is ignored beyond being positive.
    N5,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Family::Chain),
            "boolean" => Ok(Family::Boolean),
            "mn" => Ok(Family::Mn),
            "n5" => Ok(Family::N5),
            other => Err(Error::Format(format!("unknown lattice family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Chain => "chain",
            Family::Boolean => "boolean",
            Family::Mn => "mn",
            Family::N5 => "n5",
        })
    }
}

/// Builds a named lattice with bottom numbered 0 and top numbered last.
///
/// N5 is numbered `0 < 1 < 4` (short side) and `0 < 2 < 3 < 4` (long side).
pub fn make_standard(family: Family, size: usize) -> Result<FiniteLattice> {
    if size == 0 {
        return Err(Error::InvalidSize(size));
    }
    match family {
        Family::Chain => FiniteLattice::from_fn(size, 0, Some(size - 1), usize::max),
        Family::Boolean => {
            if size >= usize::BITS as usize / 2 {
                return Err(Error::SizeExceeded {
                    what: "boolean rank",
                    actual: size,
                    limit: 15,
                });
            }
            let n = 1usize << size;
            FiniteLattice::from_fn(n, 0, Some(n - 1), |a, b| a | b)
        }
        Family::Mn => {
            let top = size + 1;
            FiniteLattice::from_fn(size + 2, 0, Some(top), |a, b| match (a, b) {
                _ if a == b => a,
                (0, x) | (x, 0) => x,
                _ => top,
            })
        }
        Family::N5 => {
            let leq = |a: usize, b: usize| a == b || a == 0 || b == 4 || (a, b) == (2, 3);
            FiniteLattice::from_fn(5, 0, Some(4), |a, b| {
                (0..5)
                    .find(|&u| {
                        leq(a, u)
                            && leq(b, u)
                            && (0..5).all(|v| !(leq(a, v) && leq(b, v)) || leq(u, v))
                    })
                    .unwrap()
            })
        }
    }
}

/// Standard lattice named by a short tag such as `chain3`, `b2`, `m3` or `n5`.
pub fn named(tag: &str) -> Result<FiniteLattice> {
    let split = tag.find(|c: char| c.is_ascii_digit()).unwrap_or(tag.len());
    let (head, num) = tag.split_at(split);
    let size = |d: usize| {
        if num.is_empty() {
            Ok(d)
        } else {
            num.parse().map_err(|_| Error::Format(tag.into()))
        }
    };
    match head {
        "chain" => make_standard(Family::Chain, size(2)?),
        "b" | "boolean" => make_standard(Family::Boolean, size(2)?),
        "m" | "mn" => make_standard(Family::Mn, size(3)?),
        "n" if num == "5" => make_standard(Family::N5, 1),
        _ => Err(Error::Format(format!("unknown lattice tag {tag:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m3_has_three_incomparable_atoms() {
        let m3 = make_standard(Family::Mn, 3).unwrap();
        assert_eq!(m3.len(), 5);
        for a in 1..4 {
            for b in 1..4 {
                assert_eq!(a == b, m3.leq(a, b));
            }
        }
        assert_eq!(m3.join(1, 2), 4);
        assert_eq!(m3.meet(1, 2), 0);
    }

    #[test]
    fn m1_is_three_chain() {
        assert_eq!(
            make_standard(Family::Mn, 1).unwrap(),
            make_standard(Family::Chain, 3).unwrap()
        );
    }

    #[test]
    fn boolean2_equals_m2() {
        assert_eq!(
            make_standard(Family::Boolean, 2).unwrap(),
            make_standard(Family::Mn, 2).unwrap()
        );
    }

    #[test]
    fn zero_size_rejected() {
        for f in [Family::Chain, Family::Boolean, Family::Mn, Family::N5] {
            assert_eq!(make_standard(f, 0), Err(Error::InvalidSize(0)));
        }
    }

    #[test]
    fn n5_shape() {
        let n5 = make_standard(Family::N5, 1).unwrap();
        assert!(n5.leq(2, 3));
        assert!(!n5.leq(1, 3) && !n5.leq(3, 1));
        assert_eq!(n5.join(1, 2), 4);
        assert_eq!(n5.meet(1, 3), 0);
        assert_eq!(n5.upper_covers(0), vec![1, 2]);
    }

    #[test]
    fn named_tags() {
        assert_eq!(named("chain3").unwrap().len(), 3);
        assert_eq!(named("b3").unwrap().len(), 8);
        assert_eq!(named("m4").unwrap().len(), 6);
        assert_eq!(named("n5").unwrap().len(), 5);
        assert!(named("q7").is_err());
    }
}
