//! Partitions of an integer into parts `≥ 2`.
//!
//! A partition `(n₁, …, n_r)` indexes both the t-monomial `t_{n₁}…t_{n_r}`
//! and the Chern-character monomial `ch_{n₁}…ch_{n_r}`. Parts are kept in
//! ascending order, so two partitions are equal iff their part sequences
//! are equal.
//!
//! The canonical total order on partitions of a fixed weight puts more
//! parts first and breaks ties by comparing part sequences element-wise,
//! larger first. Refinement strictly increases the number of parts, so
//! this order extends the refinement order: finer partitions come first.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if let Some(&bad) = parts.iter().find(|&&p| p < 2) {
            return Err(Error::PartTooSmall(bad));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// The empty partition, i.e. the unit monomial of degree 0.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn single(n: u32) -> Result<Self> {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiset union of the parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] <= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Distinct part values with their multiplicities, ascending by value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True iff the parts of `self` can be grouped into `coarser.len()`
    /// blocks whose sums are exactly the parts of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.weight() != coarser.weight() || self.len() < coarser.len() {
            return false;
        }
        if self.len() == coarser.len() {
            return self == coarser;
        }
        // Place large parts first; they have the fewest options.
        let items: Vec<u32> = self.parts.iter().rev().copied().collect();
        let mut remaining: Vec<u32> = coarser.parts.clone();
        place_parts(&items, &mut remaining)
    }

    /// Comparison in the canonical order for partitions of equal weight.
    fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

fn place_parts(items: &[u32], remaining: &mut [u32]) -> bool {
    let Some((&part, rest)) = items.split_first() else {
        return remaining.iter().all(|&r| r == 0);
    };
    for b in 0..remaining.len() {
        let cap = remaining[b];
        // Blocks with equal leftover capacity are interchangeable.
        if cap < part || remaining[..b].contains(&cap) {
            continue;
        }
        remaining[b] -= part;
        let ok = place_parts(rest, remaining);
        remaining[b] += part;
        if ok {
            return true;
        }
    }
    false
}

/// Orders by weight, then by the canonical order within a weight.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.canonical_cmp(other))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Space-separated parts, `"2 2 2"`; the empty partition renders as `"()"`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions of `n` into parts `≥ 2`, in canonical order.
///
/// `enumerate(0)` is `[()]` and `enumerate(1)` is empty.
pub fn enumerate(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    collect(n, 2, &mut stack, &mut out);
    out.sort();
    out
}

fn collect(left: u32, min_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in min_part..=left {
        let rest = left - part;
        if rest != 0 && rest < part {
            continue;
        }
        stack.push(part);
        collect(rest, part, stack, out);
        stack.pop();
    }
}

/// Number of partitions of `n` into parts `≥ 2`.
pub fn p_prime(n: u32) -> u64 {
    // count[j] = partitions of j with all parts in 2..=k, for increasing k
    let n = n as usize;
    let mut count = vec![0u64; n + 1];
    count[0] = 1;
    for k in 2..=n {
        for j in k..=n {
            count[j] += count[j - k];
        }
    }
    count[n]
}

/// Position of `p` in [`enumerate`]`(p.weight())`.
pub fn index_of(order: &[Partition], p: &Partition) -> Option<usize> {
    order.binary_search(p).ok()
}
