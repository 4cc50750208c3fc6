//! Exhaustive partition generators used as brute-force oracles: all
//! partitions, distinct / odd / distinct-odd restricted partitions, and
//! self-conjugate partitions via the diagonal-hook bijection. All streams
//! are lazy and deterministic (lexicographically descending).

use alloc::vec;
use alloc::vec::Vec;

use crate::bijections::distinct_odd_to_sc;
use crate::error::Error;
use crate::hooks::is_t_core_naive;
use crate::partition::{DistinctOddPartition, Partition};

/// Iterator over all partitions of n in descending lexicographic order.
pub struct AllPartitions {
    next: Option<Vec<u64>>,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

/// Descending-lex successor: decrement the last part above 1 and refill the
/// freed boxes greedily.
fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    let idx = parts.iter().rposition(|&p| p > 1)?;
    let mut next: Vec<u64> = parts[..idx].to_vec();
    let freed: u64 = parts[idx..].iter().sum();
    let x = parts[idx] - 1;
    let mut rem = freed;
    while rem >= x {
        next.push(x);
        rem -= x;
    }
    if rem > 0 {
        next.push(rem);
    }
    Some(next)
}

/// All partitions of n, each exactly once, descending lexicographic.
pub fn all_partitions(n: u64) -> AllPartitions {
    AllPartitions {
        next: Some(if n == 0 { vec![] } else { vec![n] }),
    }
}

/// Depth-first generator for partitions with optional oddness and
/// distinctness constraints on the parts.
pub struct RestrictedPartitions {
    odd: bool,
    distinct: bool,
    prefix: Vec<u64>,
    /// Per-depth (remaining, next candidate part to try). The top frame is
    /// the pending choice; `prefix` holds one entry per non-top frame.
    stack: Vec<(u64, u64)>,
    emit_empty: bool,
}

impl RestrictedPartitions {
    fn new(n: u64, odd: bool, distinct: bool) -> Self {
        let start = if odd && n > 0 && n % 2 == 0 { n - 1 } else { n };
        RestrictedPartitions {
            odd,
            distinct,
            prefix: Vec::new(),
            stack: if n == 0 { Vec::new() } else { vec![(n, start)] },
            emit_empty: n == 0,
        }
    }

    /// Largest total expressible with admissible parts <= c; used to prune
    /// branches that cannot reach the remaining sum.
    fn max_tail(&self, c: u64) -> u64 {
        match (self.odd, self.distinct) {
            (true, true) => {
                let terms = (c + 1) / 2;
                terms * terms
            }
            (false, true) => c * (c + 1) / 2,
            // With repetition allowed any remainder is reachable via 1s.
            _ => u64::MAX,
        }
    }

    fn step_down(&self, c: u64) -> u64 {
        if self.odd {
            c.saturating_sub(2)
        } else {
            c - 1
        }
    }

    fn child_bound(&self, v: u64) -> u64 {
        match (self.odd, self.distinct) {
            (true, true) => v.saturating_sub(2),
            (false, true) => v - 1,
            _ => v,
        }
    }
}

impl Iterator for RestrictedPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Partition::empty());
        }
        while let Some(&(rem, cand)) = self.stack.last() {
            if cand == 0 || self.max_tail(cand) < rem {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.prefix.pop();
                }
                continue;
            }
            let v = cand.min(rem);
            let v = if self.odd && v % 2 == 0 { v - 1 } else { v };
            if v == 0 {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.prefix.pop();
                }
                continue;
            }
            // Advance this frame past v, then descend with v chosen.
            self.stack.last_mut().unwrap().1 = self.step_down(v);
            self.prefix.push(v);
            if rem == v {
                let done = Partition::from_sorted(self.prefix.clone());
                self.prefix.pop();
                return Some(done);
            }
            self.stack.push((rem - v, self.child_bound(v)));
        }
        None
    }
}

/// All partitions of n into distinct odd parts.
pub fn distinct_odd_partitions(n: u64) -> impl Iterator<Item = DistinctOddPartition> {
    RestrictedPartitions::new(n, true, true)
        .map(|p| DistinctOddPartition::new(p).expect("generator yields distinct odd parts"))
}

/// All self-conjugate partitions of n, generated through the diagonal-hook
/// bijection from the distinct-odd partitions.
pub fn self_conjugate_partitions(n: u64) -> impl Iterator<Item = Partition> {
    distinct_odd_partitions(n).map(|lam| distinct_odd_to_sc(&lam))
}

/// All partitions of n into distinct parts.
pub fn distinct_partitions(n: u64) -> RestrictedPartitions {
    RestrictedPartitions::new(n, false, true)
}

/// All partitions of n into odd parts.
pub fn odd_partitions(n: u64) -> RestrictedPartitions {
    RestrictedPartitions::new(n, true, false)
}

/// Number of self-conjugate t-core partitions of n, by direct enumeration
/// and naive hook scanning.
pub fn sc_t_count_bruteforce(n: u64, t: u64) -> Result<u64, Error> {
    if t < 1 {
        return Err(Error::InvalidModulus);
    }
    let mut count = 0;
    for g in self_conjugate_partitions(n) {
        if is_t_core_naive(&g, t)?.is_none() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_partitions_small() {
        let got: Vec<_> = all_partitions(4).collect();
        assert_eq!(got.len(), 5);
        assert_eq!(got[0].parts(), &[4]);
        assert_eq!(got[1].parts(), &[3, 1]);
        assert_eq!(got[2].parts(), &[2, 2]);
        assert_eq!(got[3].parts(), &[2, 1, 1]);
        assert_eq!(got[4].parts(), &[1, 1, 1, 1]);
        assert_eq!(all_partitions(0).count(), 1);
        assert_eq!(all_partitions(1).count(), 1);
    }

    #[test]
    fn distinct_odd_small() {
        let got: Vec<_> = distinct_odd_partitions(24).collect();
        assert!(got.iter().any(|l| l.parts() == [13, 7, 3, 1]));
        let seven: Vec<_> = distinct_odd_partitions(7).collect();
        assert_eq!(seven.len(), 1);
        assert_eq!(seven[0].parts(), &[7]);
        assert_eq!(distinct_odd_partitions(2).count(), 0);
    }

    #[test]
    fn self_conjugate_small() {
        let got: Vec<_> = self_conjugate_partitions(24).collect();
        assert!(got.iter().any(|g| g.parts() == [7, 5, 4, 4, 2, 1, 1]));
        let three: Vec<_> = self_conjugate_partitions(3).collect();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].parts(), &[2, 1]);
        assert_eq!(self_conjugate_partitions(2).count(), 0);
    }

    #[test]
    fn euler_pairs_small() {
        let d: Vec<_> = distinct_partitions(3).collect();
        let o: Vec<_> = odd_partitions(3).collect();
        assert_eq!(d.len(), 2);
        assert_eq!(o.len(), 2);
        assert!(d.iter().any(|p| p.parts() == [3]));
        assert!(d.iter().any(|p| p.parts() == [2, 1]));
        assert!(o.iter().any(|p| p.parts() == [3]));
        assert!(o.iter().any(|p| p.parts() == [1, 1, 1]));
        assert_eq!(distinct_partitions(1).count(), 1);
        assert_eq!(odd_partitions(1).count(), 1);
        assert_eq!(distinct_partitions(6).count(), 4);
        assert_eq!(odd_partitions(6).count(), 4);
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(sc_t_count_bruteforce(6, 2), Ok(1));
        assert_eq!(sc_t_count_bruteforce(7, 7), Ok(0));
        assert!(sc_t_count_bruteforce(24, 6).unwrap() >= 1);
        assert_eq!(sc_t_count_bruteforce(5, 0), Err(Error::InvalidModulus));
    }
}
