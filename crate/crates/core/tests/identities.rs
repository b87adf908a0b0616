use ncolour_core::frobenius::enumerate_frobenius;
use ncolour_core::partition::{enumerate, MembershipSpec};
use ncolour_core::qseries::{constant_term_product, inv_euler, main2_jacobi_form, main2_product_form};
use num_bigint::BigInt;

#[test]
fn three_forms_agree() {
    for (n, order) in [(1, 12), (2, 10), (3, 8)] {
        let ct = constant_term_product(n, order);
        assert_eq!(ct, main2_jacobi_form(n, order), "n={n}");
        assert_eq!(ct, main2_product_form(n, order).unwrap(), "n={n}");
    }
}

#[test]
fn one_colour_is_ordinary_partitions() {
    let p = inv_euler(0, 10).to_ints(10);
    let mut counts = [0i64; 11];
    for f in enumerate_frobenius(1, 10).unwrap() {
        counts[f.weight() as usize] += 1;
    }
    assert_eq!(counts.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), p);
    let mut plain = vec![0usize; 11];
    for q in enumerate(&MembershipSpec::Pn(1), 10).unwrap() {
        plain[q.weight() as usize] += 1;
    }
    // a0b0 may repeat, so P_1 is every partition
    assert_eq!(plain, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}
