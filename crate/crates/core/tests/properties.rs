use indexlab::exactlinalg::{Rational, RationalMatrix};
use indexlab::liealg::{check_vinberg, IndexConfig, Mode, Representation};
use indexlab::orbits::{partitions, Partition};
use indexlab::pairs::{borel_gl, gl};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![Just(0i64), -3i64..=3], c), r)
    })
}

fn to_matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect()).unwrap()
}

/// Euler's pentagonal recurrence.
fn partition_count(n: usize) -> usize {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p[n] as usize
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_is_transpose_invariant(rows in matrix()) {
        let m = to_matrix(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity(rows in matrix()) {
        let m = to_matrix(&rows);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rational_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = Rational::new(n, d);
        let back: Rational = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn partition_display_round_trip(n in 1usize..=9, k in 0usize..30) {
        let all = partitions(n);
        let p = &all[k % all.len()];
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, p);
        prop_assert_eq!(back.total(), n);
    }
}

#[test]
fn partition_counts_match_recurrence() {
    for n in 0..=14 {
        assert_eq!(partitions(n).len(), partition_count(n), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vinberg_holds_for_borel_on_two_copies(v in prop::collection::vec(-2i64..=2, 4)) {
        let rep = Representation::standard(borel_gl(2)).dual().m_copies(2);
        let v: Vec<Rational> = v.into_iter().map(Rational::from).collect();
        let c = check_vinberg(&rep, &v, &IndexConfig::with_mode(Mode::Symbolic, 0)).unwrap();
        prop_assert!(c.lhs.index <= c.rhs.index);
    }

    #[test]
    fn vinberg_holds_for_gl2_adjoint(v in prop::collection::vec(-2i64..=2, 4)) {
        let rep = Representation::adjoint(gl(2)).unwrap();
        let v: Vec<Rational> = v.into_iter().map(Rational::from).collect();
        let c = check_vinberg(&rep, &v, &IndexConfig::with_mode(Mode::Symbolic, 0)).unwrap();
        prop_assert!(c.lhs.index <= c.rhs.index);
    }
}
