use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pudlak::RepSequence;

/// A finite string whose entry at position `x` is a vertex of stage `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ThetaString(pub Vec<usize>);

impl ThetaString {
    pub fn empty() -> Self {
        ThetaString(Vec::new())
    }

    /// Checks each entry against the stage sizes `sizes[x]`.
    pub fn new(entries: Vec<usize>, sizes: &[usize]) -> Result<Self> {
        if entries.len() > sizes.len() {
            return Err(Error::Precondition(format!(
                "string of length {} needs {} stages, have {}",
                entries.len(),
                entries.len(),
                sizes.len()
            )));
        }
        if let Some((x, &v)) = entries.iter().enumerate().find(|&(x, &v)| v >= sizes[x]) {
            return Err(Error::OutOfRange(format!(
                "vertex {v} at position {x} is not in stage {x}"
            )));
        }
        Ok(ThetaString(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_prefix_of(&self, other: &ThetaString) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn comparable(&self, other: &ThetaString) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn truncate(&self, len: usize) -> ThetaString {
        ThetaString(self.0[..len.min(self.0.len())].to_vec())
    }
}

impl fmt::Display for ThetaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

/// Lexicographic enumeration of all strings of one length over given stage sizes.
#[derive(Debug, Clone)]
pub struct StringIter {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl StringIter {
    pub fn new(sizes: &[usize]) -> Self {
        let next = if sizes.contains(&0) {
            None
        } else {
            Some(vec![0; sizes.len()])
        };
        StringIter {
            sizes: sizes.to_vec(),
            next,
        }
    }
}

impl Iterator for StringIter {
    type Item = ThetaString;

    fn next(&mut self) -> Option<ThetaString> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for x in (0..succ.len()).rev() {
            succ[x] += 1;
            if succ[x] < self.sizes[x] {
                self.next = Some(succ);
                break;
            }
            succ[x] = 0;
        }
        Some(ThetaString(cur))
    }
}

/// `Π_{x < length} |Θ_x|`, saturating.
pub fn count_strings(sizes: &[usize], length: usize) -> usize {
    sizes[..length]
        .iter()
        .fold(1usize, |acc, &s| acc.saturating_mul(s))
}

pub fn string_iter(r: &RepSequence, length: usize) -> Result<StringIter> {
    if length > r.stage_count() {
        return Err(Error::Precondition(format!(
            "length {length} exceeds the {} built stages",
            r.stage_count()
        )));
    }
    Ok(StringIter::new(&r.vertex_counts()[..length]))
}

/// Every string of the given length, in lexicographic order.
pub fn enumerate_strings(r: &RepSequence, length: usize) -> Result<Vec<ThetaString>> {
    Ok(string_iter(r, length)?.collect())
}
