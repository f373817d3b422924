//! Frozen values checked against brute-force oracles.

mod common;

use bordism_core::charnum::{characteristic_number, characteristic_number_symbolic, CharMatrix};
use bordism_core::partitions::{enumerate, p_prime};
use bordism_core::{BigInt, Rational};
use common::{brute_force_charnum, brute_force_partitions, brute_force_refines, p};

fn rows(m: &CharMatrix) -> Vec<Vec<i64>> {
    m.entries()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
        .collect()
}

#[test]
fn frozen_enumeration_seven() {
    let mut brute = brute_force_partitions(7);
    brute.sort_by_key(|q| (std::cmp::Reverse(q.len()), std::cmp::Reverse(q.clone())));
    assert_eq!(brute, vec![vec![2, 2, 3], vec![3, 4], vec![2, 5], vec![7]]);
    assert_eq!(enumerate(7), vec![p(&[2, 2, 3]), p(&[3, 4]), p(&[2, 5]), p(&[7])]);
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=16 {
        let mut lib: Vec<Vec<u32>> = enumerate(n).iter().map(|q| q.parts().to_vec()).collect();
        let mut brute = brute_force_partitions(n);
        lib.sort();
        brute.sort();
        assert_eq!(lib, brute, "n={n}");
        assert_eq!(p_prime(n) as usize, brute.len());
    }
}

#[test]
fn frozen_matrices_seven_and_eight() {
    assert_eq!(rows(&CharMatrix::new(7)), vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0], vec![2, 0, 1, 0], vec![1, 1, 1, 1]]);
    let eight = CharMatrix::new(8);
    assert_eq!(
        eight.order(),
        &[p(&[2, 2, 2, 2]), p(&[2, 3, 3]), p(&[2, 2, 4]), p(&[4, 4]), p(&[3, 5]), p(&[2, 6]), p(&[8])]
    );
    assert_eq!(
        rows(&eight),
        vec![
            vec![24, 0, 0, 0, 0, 0, 0],
            vec![0, 2, 0, 0, 0, 0, 0],
            vec![12, 0, 2, 0, 0, 0, 0],
            vec![6, 0, 2, 2, 0, 0, 0],
            vec![0, 2, 0, 0, 1, 0, 0],
            vec![4, 1, 2, 0, 0, 1, 0],
            vec![1, 1, 1, 1, 1, 1, 1],
        ]
    );
    assert_eq!(eight.determinant(), BigInt::from(24 * 2 * 2 * 2));
}

#[test]
fn frozen_entries() {
    for (m, nu, want) in [
        (&[2, 2, 4][..], &[2, 2, 2, 2][..], 12),
        (&[2, 3, 5], &[2, 2, 3, 3], 4),
        (&[5, 5], &[2, 2, 3, 3], 4),
        (&[4, 6], &[2, 2, 3, 3], 1),
    ] {
        assert_eq!(brute_force_charnum(m, nu), want);
        assert_eq!(characteristic_number(&p(m), &p(nu)).unwrap(), BigInt::from(want));
        assert_eq!(characteristic_number_symbolic(&p(m), &p(nu)).unwrap(), Rational::from_integer(want.into()));
    }
}

#[test]
fn fast_count_matches_brute_force() {
    for n in 2..=11 {
        let order = enumerate(n);
        for m in &order {
            for nu in &order {
                let brute = brute_force_charnum(m.parts(), nu.parts());
                assert_eq!(characteristic_number(m, nu).unwrap(), BigInt::from(brute), "m={m:?} nu={nu:?}");
            }
        }
    }
}

#[test]
fn refines_matches_brute_force() {
    for n in 0..=12 {
        let order = enumerate(n);
        for a in &order {
            for b in &order {
                assert_eq!(a.refines(b), brute_force_refines(a.parts(), b.parts()), "{a:?} {b:?}");
            }
        }
    }
}
