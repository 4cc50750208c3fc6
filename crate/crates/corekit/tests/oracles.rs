//! Cross-checks against independent brute-force oracles: a dynamic
//! programming partition counter, a naive triple-loop quadratic-form
//! enumerator, and direct diagram scans.

use std::collections::BTreeSet;

use corekit::bijections::{distinct_odd_to_sc, sc_to_distinct_odd};
use corekit::classnumbers::{hurwitz, ExactRational, QuadraticForm};
use corekit::enumeration::{
    all_partitions, distinct_odd_partitions, distinct_partitions, odd_partitions,
    self_conjugate_partitions,
};
use corekit::hooks::{
    gap_criterion, hook_length_naive, hook_table, is_t_core_naive, sc_hook_calc_count,
};
use corekit::Partition;

/// p(n) by the standard "partitions of n with parts <= k" recurrence.
fn partition_count_dp(n: usize) -> u64 {
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    for k in 0..=n {
        table[0][k] = 1;
    }
    for m in 1..=n {
        for k in 1..=n {
            table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
        }
    }
    table[n][n]
}

/// Hurwitz class number by a naive triple loop over (a, b, c) with the
/// reduction conditions checked directly.
fn hurwitz_naive(d: i64) -> ExactRational {
    if d <= 0 || !matches!(d % 4, 0 | 3) {
        return ExactRational::zero();
    }
    let mut total = ExactRational::zero();
    for a in 1..=d {
        if a * a > d {
            break;
        }
        for b in -a..=a {
            let num = b * b + d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let form = QuadraticForm { a, b, c };
            if !form.is_reduced() {
                continue;
            }
            let weight = if a == b && b == c {
                ExactRational::new(1, 3)
            } else if b == 0 && a == c {
                ExactRational::new(1, 2)
            } else {
                ExactRational::from_integer(1)
            };
            total = total + weight;
        }
    }
    total
}

#[test]
fn all_partitions_matches_dp_count() {
    for n in 0..=45u64 {
        assert_eq!(
            all_partitions(n).count() as u64,
            partition_count_dp(n as usize),
            "p({n})"
        );
    }
}

#[test]
fn streams_yield_no_duplicates() {
    for n in 0..=25u64 {
        let all: Vec<_> = all_partitions(n).collect();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
        let sc: Vec<_> = self_conjugate_partitions(n).collect();
        let set: BTreeSet<_> = sc.iter().cloned().collect();
        assert_eq!(sc.len(), set.len());
        for p in all_partitions(n) {
            assert_eq!(p.size(), n);
        }
    }
}

#[test]
fn self_conjugate_stream_matches_filter() {
    // The stream is produced through the bijection; check it against the
    // independent route of filtering all partitions.
    for n in 0..=30u64 {
        let via_bijection: BTreeSet<_> = self_conjugate_partitions(n).collect();
        let via_filter: BTreeSet<_> =
            all_partitions(n).filter(|p| p.is_self_conjugate()).collect();
        assert_eq!(via_bijection, via_filter, "n = {n}");
    }
}

#[test]
fn bijection_and_euler_counts() {
    for n in 0..=60u64 {
        assert_eq!(
            distinct_odd_partitions(n).count(),
            self_conjugate_partitions(n).count()
        );
        assert_eq!(distinct_partitions(n).count(), odd_partitions(n).count());
    }
}

#[test]
fn bijection_round_trips() {
    for n in 0..=40u64 {
        for lam in distinct_odd_partitions(n) {
            let g = distinct_odd_to_sc(&lam);
            assert!(g.is_self_conjugate());
            assert_eq!(g.size(), n);
            assert_eq!(sc_to_distinct_odd(&g).unwrap(), lam);
        }
    }
}

#[test]
fn hook_symmetry_and_diagonal() {
    for n in 0..=30u64 {
        for g in self_conjugate_partitions(n) {
            let lam = sc_to_distinct_odd(&g).unwrap();
            let table = hook_table(&g);
            for i in 1..=g.length() {
                for j in 1..=g.part(i) as usize {
                    assert_eq!(table.get(i, j), table.get(j, i));
                }
            }
            for (i, &part) in lam.parts().iter().enumerate() {
                assert_eq!(table.get(i + 1, i + 1), Some(part));
            }
        }
    }
}

#[test]
fn diagonal_box_count_matches_formula() {
    for n in 0..=40u64 {
        for g in self_conjugate_partitions(n) {
            let lam = sc_to_distinct_odd(&g).unwrap();
            let mut below_or_on = 0u64;
            for i in 1..=g.length() {
                below_or_on += g.part(i).min(i as u64);
            }
            assert_eq!(below_or_on, sc_hook_calc_count(&lam));
        }
    }
}

#[test]
fn gap_criterion_soundness_exhaustive() {
    for n in 0..=30u64 {
        for lam in distinct_odd_partitions(n) {
            for t in 2..=8u64 {
                if let Some(i) = gap_criterion(&lam, t).unwrap() {
                    let g = distinct_odd_to_sc(&lam);
                    assert!(is_t_core_naive(&g, t).unwrap().is_some());
                    let row = i + ((lam.part(i) - 1) / 2) as usize - (t as usize - 1);
                    assert_eq!(hook_length_naive(&g, row, i), Ok(t));
                }
            }
        }
    }
}

#[test]
fn hurwitz_matches_naive_loop() {
    for d in 1..=600i64 {
        assert_eq!(
            hurwitz(ExactRational::from_integer(-d)).unwrap(),
            hurwitz_naive(d),
            "H(-{d})"
        );
    }
}

#[test]
fn hurwitz_denominators() {
    for d in 1..=600i64 {
        let h = hurwitz(ExactRational::from_integer(-d)).unwrap();
        assert!(matches!(h.denominator(), 1 | 2 | 3 | 6), "H(-{d}) = {h}");
    }
}

mod properties {
    use super::*;
    use corekit::supernorm::PrimeIndexer;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u64..40, 0..12)
            .prop_map(|parts| Partition::new(parts).unwrap())
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(p in arb_partition()) {
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
            prop_assert_eq!(p.conjugate().durfee_side(), p.durfee_side());
        }

        #[test]
        fn frequency_round_trip(p in arb_partition()) {
            prop_assert_eq!(p.to_frequency().to_partition(), p);
        }

        #[test]
        fn supernorm_round_trip(p in arb_partition()) {
            let mut idx = PrimeIndexer::new();
            let image = idx.supernorm(&p);
            prop_assert_eq!(idx.supernorm_inverse(&image.value), p);
        }

        #[test]
        fn supernorm_inverse_round_trip(n in 1u64..50_000) {
            let mut idx = PrimeIndexer::new();
            let n = BigUint::from(n);
            let p = idx.supernorm_inverse(&n);
            prop_assert_eq!(idx.supernorm(&p).value, n);
        }
    }
}
