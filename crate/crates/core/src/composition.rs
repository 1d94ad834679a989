//! Compositions of `n`: finite sequences of positive integers.
//!
//! The canonical order on compositions is graded reverse-lexicographic:
//! first by size, then by parts compared lexicographically with the larger
//! sequence first. For `n = 3` this gives `(3), (2,1), (1,2), (1,1,1)`.
//! `Ord` on [`Composition`] implements exactly this order, so every
//! `BTreeMap` keyed by compositions iterates canonically.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "CompositionRepr", into = "String")]
pub struct Composition {
    parts: Vec<u32>,
    size: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Self::from_positive(parts))
    }

    /// Caller guarantees every part is positive.
    pub(crate) fn from_positive(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Composition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number `n` this is a composition of.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts, size: self.size }
    }

    /// `set(α)`: the proper partial sums `α₁, α₁+α₂, …, α₁+…+α_{ℓ−1}`.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        if let Some((_, init)) = self.parts.split_last() {
            for &p in init {
                acc += p;
                out.insert(acc);
            }
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]: the composition of `n` whose
    /// proper partial sums are exactly `set`.
    pub fn from_descent_set(set: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if n == 0 {
            return if set.is_empty() {
                Ok(Self::empty())
            } else {
                Err(Error::InvalidDescentSet { set: set.iter().copied().collect(), n })
            };
        }
        if set.iter().any(|&d| d == 0 || d >= n) {
            return Err(Error::InvalidDescentSet { set: set.iter().copied().collect(), n });
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &d in set.iter().chain(std::iter::once(&n)) {
            parts.push(d - prev);
            prev = d;
        }
        Ok(Self::from_positive(parts))
    }

    /// All compositions that refine `self` (split parts into ordered positive
    /// summands), `self` included.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.parts {
            let splits = compositions_of(p, None);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    splits.iter().map(move |s| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(s.parts());
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Self::from_positive).collect()
    }

    /// `self ⪰ other` in dominance order: every prefix sum of `self` is at
    /// least the matching prefix sum of `other` (missing parts count as 0).
    pub fn dominates(&self, other: &Composition) -> Result<bool> {
        if self.size != other.size {
            return Err(Error::SizeMismatch { left: self.size, right: other.size });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_rearrangement(&self, other: &Composition) -> bool {
        self.len() == other.len() && self.sorted_decreasing() == other.sorted_decreasing()
    }

    /// The partition obtained by sorting the parts into weakly decreasing order.
    pub fn sorted_decreasing(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts, size: self.size }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(n−k, 1^k)` for some `k`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// `(1^k, n−k)` for some `k`.
    pub fn is_reverse_hook(&self) -> bool {
        match self.parts.split_last() {
            Some((_, init)) => init.iter().all(|&p| p == 1),
            None => true,
        }
    }

    /// Distinct rearrangements of the parts, in canonical order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        compositions_of(self.size, Some(self.len())).into_iter().filter(|c| c.is_rearrangement(self)).collect()
    }
}

/// All compositions of `n` in graded reverse-lexicographic order, optionally
/// restricted to a fixed length. `n = 0` yields the empty composition.
pub fn compositions_of(n: u32, length: Option<usize>) -> Vec<Composition> {
    fn rec(rest: u32, prefix: &mut Vec<u32>, length: Option<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            if length.is_none_or(|l| l == prefix.len()) {
                out.push(Composition::from_positive(prefix.clone()));
            }
            return;
        }
        if let Some(l) = length {
            if prefix.len() >= l {
                return;
            }
            // remaining slots each need at least one
            let slots = (l - prefix.len()) as u32;
            if rest < slots {
                return;
            }
        }
        for first in (1..=rest).rev() {
            prefix.push(first);
            rec(rest - first, prefix, length, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), length, &mut out);
    out
}

/// All compositions of every size `0..=max_n`, in canonical order.
pub fn compositions_up_to(max_n: u32) -> Vec<Composition> {
    (0..=max_n).flat_map(|n| compositions_of(n, None)).collect()
}

/// Partitions of `n` in canonical order (a subsequence of `compositions_of`).
pub fn partitions_of(n: u32) -> Vec<Composition> {
    compositions_of(n, None).into_iter().filter(Composition::is_partition).collect()
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<Composition> for String {
    fn from(c: Composition) -> Self {
        c.to_string()
    }
}

/// Serialized as "a,b,c"; a JSON array of parts is also accepted.
#[derive(Deserialize)]
#[serde(untagged)]
enum CompositionRepr {
    Text(String),
    Parts(Vec<u32>),
}

impl TryFrom<CompositionRepr> for Composition {
    type Error = Error;

    fn try_from(repr: CompositionRepr) -> Result<Self> {
        match repr {
            CompositionRepr::Text(s) => s.parse(),
            CompositionRepr::Parts(parts) => Self::new(parts),
        }
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `"1,2,1"`, `"(1,2,1)"`, `""` and `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseComposition(s.to_string()))?;
        Self::new(parts)
    }
}

/// Comma-joined parts; the empty composition prints as the empty string.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Shorthand for building compositions in tests and examples.
#[macro_export]
macro_rules! comp {
    () => { $crate::composition::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::composition::Composition::new(vec![$($p),+]).expect("positive parts")
    };
}
