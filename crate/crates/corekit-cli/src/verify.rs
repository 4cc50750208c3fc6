//! `corekit verify`: exhaustive sweeps of the library's defining
//! identities, fanned out across n with results reported in order.

use std::process::ExitCode;

use rayon::prelude::*;

use corekit::bijections::{distinct_odd_to_sc, sc_to_distinct_odd};
use corekit::classnumbers::{sc7_bkm, sc7_ono_raji};
use corekit::enumeration::{
    all_partitions, distinct_odd_partitions, sc_t_count_bruteforce, self_conjugate_partitions,
};
use corekit::hooks::{hook_length_formula, hook_length_naive, is_t_core_naive, is_t_core_sc};

use crate::Suite;

pub fn run(suite: Suite, n_max: u64) -> ExitCode {
    let mut all_passed = true;
    let mut check = |name: &str, passed: bool| {
        println!("{} {}", if passed { "PASS" } else { "FAIL" }, name);
        all_passed &= passed;
    };

    if matches!(suite, Suite::Hooks | Suite::All) {
        check(
            &format!("hooks: formula = diagram walk on every box, n <= {n_max}"),
            (0..=n_max).into_par_iter().all(formula_matches_naive),
        );
        check(
            &format!("hooks: is_t_core_sc = is_t_core_naive, t in 2..=15, n <= {n_max}"),
            (0..=n_max).into_par_iter().all(decisions_match),
        );
    }
    if matches!(suite, Suite::Bijection | Suite::All) {
        check(
            &format!("bijection: round trip is identity, n <= {n_max}"),
            (0..=n_max).into_par_iter().all(round_trip_identity),
        );
        check(
            &format!("bijection: #self-conjugate = #distinct-odd, n <= {n_max}"),
            (0..=n_max).into_par_iter().all(|n| {
                distinct_odd_partitions(n).count()
                    == all_partitions(n).filter(|p| p.is_self_conjugate()).count()
            }),
        );
    }
    if matches!(suite, Suite::Sc7 | Suite::All) {
        check(
            &format!("sc7: four-term class-number formula = brute force, n <= {n_max}"),
            (1..=n_max)
                .into_par_iter()
                .all(|n| sc7_bkm(n).ok() == Some(sc_t_count_bruteforce(n, 7).unwrap())),
        );
        check(
            &format!("sc7: three-branch formula = brute force on applicable odd n <= {n_max}"),
            (1..=n_max)
                .into_par_iter()
                .filter(|n| n % 2 == 1 && n % 7 != 5)
                .all(|n| sc7_ono_raji(n).ok() == Some(sc_t_count_bruteforce(n, 7).unwrap())),
        );
    }

    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn formula_matches_naive(n: u64) -> bool {
    self_conjugate_partitions(n).all(|g| {
        let lam = sc_to_distinct_odd(&g).unwrap();
        (1..=g.length()).all(|i| {
            (1..=g.part(i) as usize)
                .all(|j| hook_length_formula(&lam, i, j) == hook_length_naive(&g, i, j))
        })
    })
}

fn decisions_match(n: u64) -> bool {
    self_conjugate_partitions(n).all(|g| {
        let lam = sc_to_distinct_odd(&g).unwrap();
        (2..=15u64).all(|t| {
            is_t_core_sc(&lam, t).unwrap().is_none() == is_t_core_naive(&g, t).unwrap().is_none()
        })
    })
}

fn round_trip_identity(n: u64) -> bool {
    distinct_odd_partitions(n).all(|lam| {
        let g = distinct_odd_to_sc(&lam);
        g.size() == n && g.is_self_conjugate() && sc_to_distinct_odd(&g).unwrap() == lam
    })
}
