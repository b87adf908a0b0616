use std::sync::OnceLock;

use ncolour_core::bijection::{phi, phi_inverse};
use ncolour_core::colour::{builtin_delta_gamma, delta};
use ncolour_core::frobenius::minimal_frobenius;
use ncolour_core::partition::{
    enumerate, is_member, minimal_weight, minimal_weight_after_insertion, ColouredPartition, MembershipSpec,
};
use ncolour_core::qseries::QSeries;
use ncolour_core::sequence::{decompose, insert, reduce};
use ncolour_core::{Colour, ColourSequence, Metric, Variant};
use proptest::prelude::*;

fn sequence(max_n: u8, max_len: usize) -> impl Strategy<Value = (usize, ColourSequence)> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_len).prop_map(move |v| {
            (n as usize, ColourSequence::new(v.into_iter().map(|(i, k)| Colour::new(i, k)).collect()).unwrap())
        })
    })
}

fn p3_members() -> &'static [ColouredPartition] {
    static CELL: OnceLock<Vec<ColouredPartition>> = OnceLock::new();
    CELL.get_or_init(|| enumerate(&MembershipSpec::Pn(3), 11).unwrap())
}

fn series(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..=max_len)
}

proptest! {
    #[test]
    fn reduce_is_idempotent((_, c) in sequence(4, 10)) {
        let r = reduce(&c);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(reduce(&r), r);
    }

    #[test]
    fn decompose_then_insert((_, c) in sequence(4, 10)) {
        let (ks, counts) = decompose(&c).unwrap();
        prop_assert_eq!(ks.kernel(), &reduce(&c));
        prop_assert_eq!(insert(&ks, &counts).unwrap(), c);
    }

    #[test]
    fn insertion_weight_matches_direct((_, c) in sequence(4, 10)) {
        let (ks, counts) = decompose(&c).unwrap();
        prop_assert_eq!(
            minimal_weight_after_insertion(&ks, &counts).unwrap(),
            minimal_weight(&c, Metric::Delta).unwrap()
        );
    }

    #[test]
    fn minimal_weight_is_a_suffix_sum((_, c) in sequence(4, 10)) {
        // the last part is at least 1, and each part exceeds the next by Δ
        let mut size = 1u64;
        let mut total = 0u64;
        for k in (0..c.len()).rev() {
            if k + 1 < c.len() {
                size += delta(c[k], c[k + 1]).unwrap() as u64;
            }
            total += size;
        }
        prop_assert_eq!(minimal_weight(&c, Metric::Delta).unwrap(), if c.is_empty() { 0 } else { total });
    }

    #[test]
    fn minimal_frobenius_keeps_colours((n, c) in sequence(4, 8)) {
        let f = minimal_frobenius(&c).unwrap();
        prop_assert_eq!(f.colours(), c);
        prop_assert!(f.check(n).is_ok());
    }

    #[test]
    fn partition_text_round_trip(i in 0usize..10_000) {
        let all = p3_members();
        let p = &all[i % all.len()];
        let back: ColouredPartition = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, p);
    }

    #[test]
    fn bijection_round_trip(i in 0usize..100_000, alt in any::<bool>()) {
        let all = p3_members();
        let lambda = &all[i % all.len()];
        let t = builtin_delta_gamma(if alt { Variant::Alt } else { Variant::MeurmanPrimc }, 3).unwrap();
        let pair = phi(lambda, &t).unwrap();
        prop_assert!(is_member(&pair.mu, &MembershipSpec::Cn(t.clone())).unwrap());
        prop_assert!(is_member(&pair.nu, &MembershipSpec::P0).unwrap());
        prop_assert_eq!(pair.mu.weight() + pair.nu.weight(), lambda.weight());
        prop_assert_eq!(&phi_inverse(&pair, &t).unwrap(), lambda);
    }

    #[test]
    fn series_product_is_associative(a in series(6), b in series(6), c in series(6)) {
        let (a, b, c) = (QSeries::from_ints(0, &a, 10), QSeries::from_ints(1, &b, 10), QSeries::from_ints(0, &c, 10));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn reciprocal_of_unit(rest in series(8), sign in any::<bool>()) {
        let mut v = rest;
        v[0] = if sign { 1 } else { -1 };
        let a = QSeries::from_ints(0, &v, 12);
        let inv = a.reciprocal(12).unwrap();
        prop_assert_eq!(a.mul(&inv), QSeries::one(0, 12));
    }
}
