//! Hook lengths two ways: by walking the Young diagram, and by the
//! closed formula in the parts of the distinct-odd partner. Also the
//! t-core decision procedures and the large-gap criterion.

use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{DistinctOddPartition, Partition};

/// Per-box hook lengths of a Young diagram, row-major, 1-indexed (i, j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    rows: Vec<Vec<u64>>,
}

impl HookTable {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Hook length at box (i, j), or None outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }
}

/// Certificate that a partition is not t-core: a box whose hook length is
/// divisible by t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TCoreWitness {
    pub row: usize,
    pub col: usize,
    pub hook: u64,
}

/// Hook length at box (i, j) by direct diagram walk: arm + leg + 1.
pub fn hook_length_naive(p: &Partition, i: usize, j: usize) -> Result<u64, Error> {
    if i < 1 || j < 1 || (j as u64) > p.part(i) {
        return Err(Error::BoxOutOfDiagram);
    }
    let arm = p.part(i) - j as u64;
    let leg = p.conjugate().part(j) - i as u64;
    Ok(arm + leg + 1)
}

/// Full table of hook lengths over every box of the diagram.
pub fn hook_table(p: &Partition) -> HookTable {
    let conj = p.conjugate();
    let rows = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i0, &row_len)| {
            (1..=row_len as usize)
                .map(|j| (row_len - j as u64) + (conj.part(j) - (i0 as u64 + 1)) + 1)
                .collect()
        })
        .collect();
    HookTable { rows }
}

/// Hook length of the self-conjugate partner of `lam` at box (i, j),
/// computed from the parts of `lam` alone. Symmetry h(i,j) = h(j,i) is
/// applied first so that the row index is the larger one.
pub fn hook_length_formula(
    lam: &DistinctOddPartition,
    i: usize,
    j: usize,
) -> Result<u64, Error> {
    if i < 1 || j < 1 {
        return Err(Error::BoxOutOfDiagram);
    }
    let (i, j) = if i >= j { (i, j) } else { (j, i) };
    let k = lam.length();
    if i <= k {
        // Inside the Durfee square.
        return Ok((lam.part(i) + lam.part(j)) / 2);
    }
    // Below the Durfee square: need column j to reach row i.
    if j > k || lam.part(j) < 2 * i as u64 - 2 * j as u64 + 1 {
        return Err(Error::BoxOutOfDiagram);
    }
    let base = (lam.part(j) + 1) as i64 / 2 + j as i64 - i as i64 - 1;
    let reach = column_reach_count(lam, i, j);
    let h = base + reach as i64;
    debug_assert!(h >= 1);
    Ok(h as u64)
}

/// #{ j <= m <= k : lam_m >= 2i - 2m + 1 }, the columns from j onward
/// holding at least i boxes.
fn column_reach_count(lam: &DistinctOddPartition, i: usize, j: usize) -> usize {
    (j..=lam.length())
        .filter(|&m| lam.part(m) as i64 >= 2 * i as i64 - 2 * m as i64 + 1)
        .count()
}

/// Checks whether no hook length of `p` is divisible by t, scanning the
/// diagram row-major. Returns the first offending box as a witness.
pub fn is_t_core_naive(p: &Partition, t: u64) -> Result<Option<TCoreWitness>, Error> {
    if t < 1 {
        return Err(Error::InvalidModulus);
    }
    let conj = p.conjugate();
    for (i0, &row_len) in p.parts().iter().enumerate() {
        for j in 1..=row_len as usize {
            let hook = (row_len - j as u64) + (conj.part(j) - (i0 as u64 + 1)) + 1;
            if hook % t == 0 {
                return Ok(Some(TCoreWitness {
                    row: i0 + 1,
                    col: j,
                    hook,
                }));
            }
        }
    }
    Ok(None)
}

/// Decides t-coreness of the self-conjugate partner of `lam` from the two
/// congruence families over the parts of `lam`: the Durfee-square family
/// (lam_i + lam_j)/2 for j <= i <= k, then the below-Durfee family for
/// k < i <= (lam_1 + 1)/2 with lam_j >= 2i - 2j + 1. The witness is the
/// first failure, as the mirrored box with i >= j.
pub fn is_t_core_sc(lam: &DistinctOddPartition, t: u64) -> Result<Option<TCoreWitness>, Error> {
    if t < 1 {
        return Err(Error::InvalidModulus);
    }
    let k = lam.length();
    for j in 1..=k {
        for i in j..=k {
            let hook = (lam.part(i) + lam.part(j)) / 2;
            if hook % t == 0 {
                return Ok(Some(TCoreWitness { row: i, col: j, hook }));
            }
        }
    }
    let rows = (lam.part(1) + 1) / 2;
    for j in 1..=k {
        for i in (k + 1)..=rows as usize {
            if lam.part(j) < 2 * i as u64 - 2 * j as u64 + 1 {
                break;
            }
            let hook = hook_length_formula(lam, i, j)?;
            if hook % t == 0 {
                return Ok(Some(TCoreWitness { row: i, col: j, hook }));
            }
        }
    }
    Ok(None)
}

/// Smallest i with lam_i - lam_{i+1} >= 2(t+1), if any. When such a gap
/// exists the self-conjugate partner is not t-core: the box
/// (i + (lam_i - 1)/2 - (t - 1), i) has hook length exactly t.
pub fn gap_criterion(lam: &DistinctOddPartition, t: u64) -> Result<Option<usize>, Error> {
    if t < 1 {
        return Err(Error::InvalidModulus);
    }
    for i in 1..lam.length() {
        if lam.part(i) - lam.part(i + 1) >= 2 * (t + 1) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// (|lam| + l(lam)) / 2: the number of boxes on or below the main diagonal
/// of the self-conjugate partner, i.e. the number of hook length
/// calculations needed to decide t-coreness.
pub fn sc_hook_calc_count(lam: &DistinctOddPartition) -> u64 {
    (lam.size() + lam.length() as u64) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gamma() -> Partition {
        Partition::new(vec![7, 5, 4, 4, 2, 1, 1]).unwrap()
    }

    fn lam() -> DistinctOddPartition {
        DistinctOddPartition::new(Partition::new(vec![13, 7, 3, 1]).unwrap()).unwrap()
    }

    #[test]
    fn naive_hooks() {
        let g = gamma();
        assert_eq!(hook_length_naive(&g, 2, 3), Ok(5));
        assert_eq!(hook_length_naive(&g, 3, 1), Ok(8));
        let single = Partition::new(vec![1]).unwrap();
        assert_eq!(hook_length_naive(&single, 1, 1), Ok(1));
        assert_eq!(hook_length_naive(&g, 1, 8), Err(Error::BoxOutOfDiagram));
        assert_eq!(hook_length_naive(&g, 8, 1), Err(Error::BoxOutOfDiagram));
    }

    #[test]
    fn full_table() {
        let t = hook_table(&gamma());
        let expect: Vec<Vec<u64>> = vec![
            vec![13, 10, 8, 7, 4, 2, 1],
            vec![10, 7, 5, 4, 1],
            vec![8, 5, 3, 2],
            vec![7, 4, 2, 1],
            vec![4, 1],
            vec![2],
            vec![1],
        ];
        assert_eq!(t.rows(), expect.as_slice());
        assert!(hook_table(&Partition::empty()).rows().is_empty());
        let small = hook_table(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(small.rows(), &[vec![3, 1], vec![1]]);
    }

    #[test]
    fn formula_examples() {
        let l = lam();
        assert_eq!(hook_length_formula(&l, 4, 1), Ok(7));
        assert_eq!(hook_length_formula(&l, 5, 2), Ok(1));
        assert_eq!(hook_length_formula(&l, 6, 1), Ok(2));
        // symmetry
        assert_eq!(hook_length_formula(&l, 1, 4), Ok(7));
        // out of diagram: column 2 has 5 boxes
        assert_eq!(hook_length_formula(&l, 6, 2), Err(Error::BoxOutOfDiagram));
        assert_eq!(hook_length_formula(&l, 8, 1), Err(Error::BoxOutOfDiagram));
    }

    #[test]
    fn t_core_decisions() {
        let g = gamma();
        let l = lam();
        assert_eq!(is_t_core_naive(&g, 6), Ok(None));
        let w = is_t_core_naive(&g, 7).unwrap().unwrap();
        assert_eq!((w.row, w.col, w.hook), (1, 4, 7));
        assert_eq!(
            is_t_core_naive(&Partition::new(vec![1]).unwrap(), 2),
            Ok(None)
        );
        assert_eq!(is_t_core_sc(&l, 6), Ok(None));
        let w = is_t_core_sc(&l, 7).unwrap().unwrap();
        assert_eq!((w.row, w.col, w.hook), (4, 1, 7));
        let one = DistinctOddPartition::new(Partition::new(vec![1]).unwrap()).unwrap();
        assert_eq!(is_t_core_sc(&one, 3), Ok(None));
        assert_eq!(is_t_core_naive(&g, 0), Err(Error::InvalidModulus));
        assert_eq!(is_t_core_sc(&l, 0), Err(Error::InvalidModulus));
    }

    #[test]
    fn t_equals_one() {
        // Only the empty partition is 1-core.
        assert_eq!(is_t_core_naive(&Partition::empty(), 1), Ok(None));
        assert!(is_t_core_naive(&gamma(), 1).unwrap().is_some());
        assert_eq!(is_t_core_sc(&DistinctOddPartition::empty(), 1), Ok(None));
        assert!(is_t_core_sc(&lam(), 1).unwrap().is_some());
    }

    #[test]
    fn gap_examples() {
        let l = lam();
        assert_eq!(gap_criterion(&l, 2), Ok(Some(1)));
        assert_eq!(gap_criterion(&l, 3), Ok(None));
        let wide = DistinctOddPartition::new(Partition::new(vec![13, 1]).unwrap()).unwrap();
        assert_eq!(gap_criterion(&wide, 4), Ok(Some(1)));
        assert!(is_t_core_sc(&wide, 4).unwrap().is_some());
    }

    #[test]
    fn calc_count() {
        assert_eq!(sc_hook_calc_count(&lam()), 14);
        let one = DistinctOddPartition::new(Partition::new(vec![1]).unwrap()).unwrap();
        assert_eq!(sc_hook_calc_count(&one), 1);
        let l = DistinctOddPartition::new(Partition::new(vec![5, 3, 1]).unwrap()).unwrap();
        assert_eq!(sc_hook_calc_count(&l), 6);
    }
}
