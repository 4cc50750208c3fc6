//! The diagonal-hook bijection between self-conjugate partitions and
//! partitions into distinct odd parts, plus explicit constructors for the
//! unique 2-core and self-conjugate 3-core partitions.

use alloc::vec::Vec;

use crate::error::Error;
use crate::hooks::hook_length_naive;
use crate::partition::{DistinctOddPartition, FrequencyForm, Partition};

/// Reads off the diagonal hooks of a self-conjugate partition, producing
/// its distinct-odd partner.
pub fn sc_to_distinct_odd(g: &Partition) -> Result<DistinctOddPartition, Error> {
    if !g.is_self_conjugate() {
        return Err(Error::NotSelfConjugate);
    }
    let k = g.durfee_side();
    let mut parts = Vec::with_capacity(k);
    for i in 1..=k {
        parts.push(hook_length_naive(g, i, i).expect("diagonal box inside Durfee square"));
    }
    DistinctOddPartition::new(Partition::from_sorted(parts))
}

/// Folds each part of `lam` into a hook centered on the diagonal, with arm
/// and leg of (part - 1)/2 boxes each, rebuilding the self-conjugate
/// partner. Inverse of [`sc_to_distinct_odd`].
pub fn distinct_odd_to_sc(lam: &DistinctOddPartition) -> Partition {
    let k = lam.length();
    if k == 0 {
        return Partition::empty();
    }
    let rows = ((lam.part(1) + 1) / 2) as usize;
    // Hook j's leg (column j) reaches down to row j + (lam_j - 1)/2; these
    // depths are non-increasing in j.
    let reach: Vec<usize> = (1..=k)
        .map(|j| j + ((lam.part(j) - 1) / 2) as usize)
        .collect();
    debug_assert!(reach.windows(2).all(|w| w[0] >= w[1]));
    let mut parts = Vec::with_capacity(rows);
    let mut reaching = k;
    for i in 1..=rows {
        // Columns j < i reached by the leg of hook j, plus (for i <= k) the
        // corner and arm of hook i.
        while reaching > 0 && reach[reaching - 1] < i {
            reaching -= 1;
        }
        let below = reaching.min(i - 1) as u64;
        let along = if i <= k { (lam.part(i) + 1) / 2 } else { 0 };
        parts.push(below + along);
    }
    Partition::from_sorted(parts)
}

/// The partition (k, k-1, ..., 2, 1) of size k(k+1)/2: the unique 2-core
/// of its size.
pub fn perfectly_triangular(k: u64) -> Partition {
    Partition::from_sorted((1..=k).rev().collect())
}

/// The unique self-conjugate 3-core partition of r(3r - 2):
/// <1^2, 2^2, ..., (r-1)^2, r, r+2, ..., 3r-4, 3r-2>.
pub fn three_core_minus(r: u64) -> Partition {
    three_core(r, false)
}

/// The unique self-conjugate 3-core partition of r(3r + 2):
/// <1^2, 2^2, ..., (r-1)^2, r^2, r+2, ..., 3r-2, 3r>.
pub fn three_core_plus(r: u64) -> Partition {
    three_core(r, true)
}

fn three_core(r: u64, plus: bool) -> Partition {
    assert!(r >= 1);
    let squared_top = if plus { r } else { r - 1 };
    let tail_start = if plus { r + 2 } else { r };
    let tail_end = if plus { 3 * r } else { 3 * r - 2 };
    let mut entries: Vec<(u64, u64)> = (1..=squared_top).map(|v| (v, 2)).collect();
    let mut v = tail_start;
    while v <= tail_end {
        entries.push((v, 1));
        v += 2;
    }
    FrequencyForm::new(entries)
        .expect("positive parts by construction")
        .to_partition()
}
