use std::collections::HashSet;

use serde::Serialize;

use super::strings::{count_strings, StringIter, ThetaString};
use crate::error::{Error, Result};
use crate::pudlak::{default_shift, RepSequence};

/// One root-shift step: `⟨x_0, …, x_{p-1}⟩ ↦ root * x_0^{m(1)-m(0)} * … * x_{p-1}^{m(p)-m(p-1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PadLayer {
    pub root: ThetaString,
    pub shift: Vec<usize>,
}

impl PadLayer {
    fn image_len(&self, p: usize) -> usize {
        self.root.len() + self.shift[p] - self.shift[0]
    }

    fn apply(&self, s: &[usize]) -> Vec<usize> {
        let mut out = self.root.entries().to_vec();
        for (j, &x) in s.iter().enumerate() {
            out.extend(std::iter::repeat_n(x, self.shift[j + 1] - self.shift[j]));
        }
        out
    }
}

/// A tree on a finite string space, stored as a stack of root shifts over the
/// identity tree of its range space.
///
/// The domain is every string of length at most `domain_sizes.len()` whose
/// entry `x` is below `domain_sizes[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMap {
    range_sizes: Vec<usize>,
    domain_sizes: Vec<usize>,
    layers: Vec<PadLayer>,
}

/// First violations found by [`TreeMap::check_invariants`], if any.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TreeCheck {
    pub strings: usize,
    pub extension: Option<(ThetaString, ThetaString)>,
    pub incomparability: Option<(ThetaString, ThetaString)>,
    pub range: Option<ThetaString>,
}

impl TreeCheck {
    pub fn passes(&self) -> bool {
        self.extension.is_none() && self.incomparability.is_none() && self.range.is_none()
    }
}

impl TreeMap {
    pub fn identity(sizes: &[usize]) -> Self {
        TreeMap {
            range_sizes: sizes.to_vec(),
            domain_sizes: sizes.to_vec(),
            layers: Vec::new(),
        }
    }

    /// Identity on all strings over the built stages of `r`.
    pub fn identity_tree(r: &RepSequence) -> Self {
        Self::identity(r.vertex_counts())
    }

    pub fn domain_sizes(&self) -> &[usize] {
        &self.domain_sizes
    }

    pub fn range_sizes(&self) -> &[usize] {
        &self.range_sizes
    }

    pub fn layers(&self) -> &[PadLayer] {
        &self.layers
    }

    /// Longest string in the domain.
    pub fn max_len(&self) -> usize {
        self.domain_sizes.len()
    }

    pub fn in_domain(&self, s: &ThetaString) -> bool {
        s.len() <= self.max_len()
            && s.entries()
                .iter()
                .zip(&self.domain_sizes)
                .all(|(&v, &n)| v < n)
    }

    pub fn apply(&self, s: &ThetaString) -> Result<ThetaString> {
        if !self.in_domain(s) {
            return Err(Error::OutOfRange(format!(
                "string {s} outside the tree's domain"
            )));
        }
        let mut cur = s.entries().to_vec();
        for layer in self.layers.iter().rev() {
            cur = layer.apply(&cur);
        }
        Ok(ThetaString(cur))
    }

    /// Length of the image of any string of length `p`.
    pub fn image_len(&self, p: usize) -> usize {
        self.layers
            .iter()
            .rev()
            .fold(p, |len, layer| layer.image_len(len))
    }

    /// `self ∘ inner`; the range space of `inner` must sit inside the domain of `self`.
    pub fn compose(&self, inner: &TreeMap) -> Result<TreeMap> {
        let fits = inner.image_len(inner.max_len()) <= self.max_len()
            && inner
                .range_sizes
                .iter()
                .zip(&self.domain_sizes)
                .all(|(a, b)| a <= b);
        if !fits {
            return Err(Error::Precondition(
                "inner tree's range is not inside the outer tree's domain".into(),
            ));
        }
        let mut layers = self.layers.clone();
        layers.extend(inner.layers.iter().cloned());
        Ok(TreeMap {
            range_sizes: self.range_sizes.clone(),
            domain_sizes: inner.domain_sizes.clone(),
            layers,
        })
    }

    pub fn domain_count(&self) -> usize {
        (0..=self.max_len()).fold(0usize, |acc, p| {
            acc.saturating_add(count_strings(&self.domain_sizes, p))
        })
    }

    /// Every domain string, shortest first, lexicographic within a length.
    pub fn domain(&self) -> impl Iterator<Item = ThetaString> + '_ {
        (0..=self.max_len()).flat_map(|p| StringIter::new(&self.domain_sizes[..p]))
    }

    /// Exhaustive check of extension and incomparability preservation and of
    /// range membership. Refuses domains larger than `max_strings`.
    pub fn check_invariants(&self, max_strings: usize) -> Result<TreeCheck> {
        let total = self.domain_count();
        if total > max_strings {
            return Err(Error::SizeExceeded {
                what: "tree domain",
                actual: total,
                limit: max_strings,
            });
        }
        let mut check = TreeCheck {
            strings: total,
            ..TreeCheck::default()
        };
        let mut prev: Vec<ThetaString> = Vec::new();
        for p in 0..=self.max_len() {
            let level: Vec<ThetaString> = StringIter::new(&self.domain_sizes[..p]).collect();
            let imgs: Vec<ThetaString> = level
                .iter()
                .map(|s| self.apply(s).expect("domain string"))
                .collect();
            for (s, t) in level.iter().zip(&imgs) {
                if check.range.is_none()
                    && ThetaString::new(t.entries().to_vec(), &self.range_sizes).is_err()
                {
                    check.range = Some(s.clone());
                }
            }
            if p > 0 {
                let width = self.domain_sizes[p - 1];
                for (i, (s, t)) in level.iter().zip(&imgs).enumerate() {
                    if check.extension.is_none() && !prev[i / width].is_prefix_of(t) {
                        check.extension = Some((s.truncate(p - 1), s.clone()));
                    }
                }
                // siblings suffice: incomparable strings extend incomparable siblings
                for (kids, names) in imgs.chunks(width).zip(level.chunks(width)) {
                    for a in 0..width {
                        for b in a + 1..width {
                            if check.incomparability.is_none() && kids[a].comparable(&kids[b]) {
                                check.incomparability = Some((names[a].clone(), names[b].clone()));
                            }
                        }
                    }
                }
            }
            prev = imgs;
        }
        Ok(check)
    }

    /// Images of every domain string; used to compare ranges of nested trees.
    pub fn range_set(&self, max_strings: usize) -> Result<HashSet<ThetaString>> {
        let total = self.domain_count();
        if total > max_strings {
            return Err(Error::SizeExceeded {
                what: "tree domain",
                actual: total,
                limit: max_strings,
            });
        }
        Ok(self
            .domain()
            .map(|s| self.apply(&s).expect("domain string"))
            .collect())
    }
}

/// Builds `T_{i+1}` from `T_i`: the empty string goes to `T_i(root)` and each
/// entry of a longer string is repeated `m(j+1) - m(j)` times after the root.
///
/// The new domain uses stage sizes `domain_sizes`; entry `j` must fit into
/// stage `m(j)` of the old domain. Without an explicit shift the least
/// strictly increasing one is used. The domain is cut to the strings whose
/// padded images stay within the old domain.
pub fn subtree_shift(
    t: &TreeMap,
    root: &ThetaString,
    shift: Option<&[usize]>,
    domain_sizes: &[usize],
) -> Result<TreeMap> {
    if !t.in_domain(root) {
        return Err(Error::OutOfRange(format!(
            "root {root} outside the tree's domain"
        )));
    }
    let shift: Vec<usize> = match shift {
        Some(m) => {
            if m.is_empty() || m.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(
                    "shift must be nonempty and strictly increasing".into(),
                ));
            }
            m.to_vec()
        }
        None => {
            let mut m: Vec<usize> = default_shift(t.domain_sizes(), domain_sizes)
                .into_iter()
                .map_while(|s| s)
                .collect();
            m.push(m.last().map_or(0, |s| s + 1));
            m
        }
    };
    if root.len() <= shift[0] {
        return Err(Error::RootTooShort {
            len: root.len(),
            needed: shift[0] + 1,
        });
    }
    let fits = |p: usize| root.len() + shift[p] - shift[0] <= t.max_len();
    let depth = (0..shift.len().min(domain_sizes.len() + 1))
        .take_while(|&p| fits(p))
        .last()
        .unwrap_or(0);
    for j in 0..depth {
        if domain_sizes[j] > t.domain_sizes()[shift[j]] {
            return Err(Error::PaddingLeavesDomain(format!(
                "stage {j} has {} vertices but stage {} of the parent domain has {}",
                domain_sizes[j],
                shift[j],
                t.domain_sizes()[shift[j]]
            )));
        }
    }
    let mut layers = t.layers.clone();
    layers.push(PadLayer {
        root: root.clone(),
        shift: shift[..=depth].to_vec(),
    });
    Ok(TreeMap {
        range_sizes: t.range_sizes.clone(),
        domain_sizes: domain_sizes[..depth].to_vec(),
        layers,
    })
}
