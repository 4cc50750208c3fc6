//! Core partition types: validated partitions, frequency notation, and
//! partitions into distinct odd parts.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A partition of a nonnegative integer: a non-increasing sequence of
/// positive parts. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from arbitrary-order positive entries; sorts them
    /// non-increasing. Rejects any entry that is zero.
    pub fn new(mut parts: Vec<u64>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be positive and
    /// non-increasing. Debug-asserts the invariant.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-indexed i-th part, or 0 when i exceeds the length.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Transposes the Young diagram: the j-th part of the conjugate is the
    /// number of parts of `self` that are at least j.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let mut parts = Vec::with_capacity(cols);
        // Two-pointer sweep: the count of parts >= j only decreases with j.
        let mut count = self.parts.len();
        for j in 1..=cols as u64 {
            while count > 0 && self.parts[count - 1] < j {
                count -= 1;
            }
            parts.push(count as u64);
        }
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side of the largest square fitting in the top-left corner of the
    /// Young diagram: the largest d with d-th part at least d.
    pub fn durfee_side(&self) -> usize {
        let mut d = 0;
        while self.part(d + 1) >= (d + 1) as u64 {
            d += 1;
        }
        d
    }

    pub fn to_frequency(&self) -> FrequencyForm {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0u64) += 1;
        }
        FrequencyForm { multiplicities }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Frequency notation for a partition: part value mapped to its
/// multiplicity. No zero multiplicities are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrequencyForm {
    multiplicities: BTreeMap<u64, u64>,
}

impl FrequencyForm {
    /// Builds from (part, multiplicity) pairs; zero parts are rejected and
    /// zero multiplicities dropped.
    pub fn new(entries: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, Error> {
        let mut multiplicities = BTreeMap::new();
        for (part, mult) in entries {
            if part == 0 {
                return Err(Error::NonPositivePart);
            }
            if mult > 0 {
                *multiplicities.entry(part).or_insert(0) += mult;
            }
        }
        Ok(FrequencyForm { multiplicities })
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.multiplicities
    }

    /// Expands back to the partition with these multiplicities.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&part, &mult) in self.multiplicities.iter().rev() {
            for _ in 0..mult {
                parts.push(part);
            }
        }
        Partition::from_sorted(parts)
    }
}

/// A partition whose parts are pairwise distinct and all odd: the bijective
/// partner of a self-conjugate partition under the diagonal-hook map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistinctOddPartition {
    inner: Partition,
}

impl DistinctOddPartition {
    pub fn new(p: Partition) -> Result<Self, Error> {
        let parts = p.parts();
        let ok = parts.iter().all(|&x| x % 2 == 1)
            && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(DistinctOddPartition { inner: p })
        } else {
            Err(Error::NotDistinctOdd)
        }
    }

    pub fn empty() -> Self {
        DistinctOddPartition {
            inner: Partition::empty(),
        }
    }

    pub fn as_partition(&self) -> &Partition {
        &self.inner
    }

    pub fn into_partition(self) -> Partition {
        self.inner
    }

    pub fn parts(&self) -> &[u64] {
        self.inner.parts()
    }

    /// The 1-indexed i-th part, or 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.inner.part(i)
    }

    pub fn size(&self) -> u64 {
        self.inner.size()
    }

    pub fn length(&self) -> usize {
        self.inner.length()
    }
}

impl fmt::Display for DistinctOddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
