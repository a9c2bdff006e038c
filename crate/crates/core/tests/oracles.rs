mod common;

use ffperm::families::{conj1_map, conj2_map, ExampleId};
use ffperm::field::Field;
use ffperm::perm::is_permutation;
use ffperm::poly::{DensePolynomial, FieldMap, RationalMap, TableMap};
use ffperm::views::{check_sum_product_system, mu_view, SubgroupView};

#[test]
fn occupancy_matches_sort_oracle() {
    common::occupancy_vs_sort(100, 2024).unwrap();
}

#[test]
fn niho_sparse_matches_table_and_swap() {
    common::niho_sparse_vs_table().unwrap();
}

#[test]
fn search_matches_brute_force_at_49() {
    common::optimized_search_vs_brute_force().unwrap();
}

#[test]
fn canonical_moduli() {
    // smallest coefficient vector, read as a base-p integer
    assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    assert_eq!(Field::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
    assert_eq!(Field::new(7, 2).unwrap().modulus(), &[1, 0, 1]);
    assert_eq!(Field::new(3, 3).unwrap().modulus(), &[1, 2, 0, 1]);
}

#[test]
fn conj1_over_f5_value_table() {
    let f = conj1_map(1, false).unwrap();
    let t = TableMap::tabulate(&f, "conj1").unwrap();
    assert_eq!(t.values(), &[0, 4, 3, 2, 1]);
}

#[test]
fn conj1_matches_direct_evaluation() {
    // x((x²−x+2)/(x²+x+2))² by hand over F_125
    let map = conj1_map(3, false).unwrap();
    let f = map.field().clone();
    for x in f.elements() {
        let xx = f.mul(x, x).unwrap();
        let num = f.add(f.sub(xx, x).unwrap(), f.from_int(2)).unwrap();
        let den = f.add(f.add(xx, x).unwrap(), f.from_int(2)).unwrap();
        let r = f.div(num, den).unwrap();
        let want = f.mul(x, f.mul(r, r).unwrap()).unwrap();
        assert_eq!(map.eval(x).unwrap(), want);
    }
}

#[test]
fn conj2_fixes_one_over_f625() {
    let (g, mu) = conj2_map(2, false).unwrap();
    // −1·((1−2)/(1+2))² = −1/9 = −1/4 = −4 = 1 in F_5
    assert_eq!(g.eval(g.field().one()).unwrap(), g.field().one());
    assert_eq!(mu.len(), 26);
}

#[test]
fn mu_sizes() {
    for (p, m, q) in [(5, 2, 5), (5, 4, 25), (3, 2, 3), (7, 2, 7)] {
        let f = Field::new(p, m).unwrap();
        assert_eq!(mu_view(&f, q).unwrap().len() as u64, q + 1);
    }
}

#[test]
fn sum_product_counts() {
    let f = Field::new(5, 1).unwrap();
    let all = SubgroupView::full(&f);
    // x + y = 0, xy = −1: {1, 4} only (2·3 = 1, not −1)
    assert_eq!(
        check_sum_product_system(&all, f.zero(), f.from_int(-1)).unwrap(),
        1
    );
    // x + y = 0, xy = 1: {2, 3}
    assert_eq!(
        check_sum_product_system(&all, f.zero(), f.one()).unwrap(),
        1
    );
    // x + y = 2, xy = 1: {1, 1}
    assert_eq!(
        check_sum_product_system(&all, f.from_int(2), f.one()).unwrap(),
        1
    );
}

#[test]
fn example_gamma_counts() {
    let counts: Vec<usize> = ExampleId::ALL
        .iter()
        .map(|id| id.gammas(&id.field().unwrap()).unwrap().len())
        .collect();
    assert_eq!(counts, [4, 2, 12, 4, 5]);
}

#[test]
fn rational_map_with_pole_is_not_certified() {
    let f = Field::new(5, 1).unwrap();
    let mut r = RationalMap::new(
        DensePolynomial::from_ints(&f, &[0, 1]),
        DensePolynomial::from_ints(&f, &[-2, 1]),
    )
    .unwrap();
    assert!(r.certify(&f).is_err());
    assert!(r.certified_on().is_none());
    assert!(is_permutation(&r, &f).is_err());
}
