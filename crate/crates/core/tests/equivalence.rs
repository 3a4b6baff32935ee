use num_bigint::BigInt;
use num_rational::BigRational;

use hookcontent::formulas::{principal_spec_closed, principal_spec_via_h, ExcitedShape};
use hookcontent::oracles::{count_ssyt, count_syt, lr_coefficients, ssyt_genpoly, ssyt_spec_series};
use hookcontent::partition::{partitions_up_to, subpartitions, Partition, SkewShape};
use hookcontent::qarith::{q_factorial, QRat};

fn shapes(max: usize) -> impl Iterator<Item = SkewShape> {
    partitions_up_to(max).flat_map(|lambda| {
        subpartitions(&lambda)
            .into_iter()
            .map(move |mu| SkewShape::new(lambda.clone(), mu).unwrap())
    })
}

fn n_range(s: &SkewShape, extra: i64) -> std::ops::RangeInclusive<i64> {
    let l = s.outer().len() as i64;
    l..=l + extra
}

#[test]
fn theorem_sum_equals_product_up_to_nine() {
    for s in shapes(9) {
        let es = ExcitedShape::new(s.clone());
        for n in n_range(&s, 3) {
            assert_eq!(es.h_sum(n).unwrap(), es.h_product(n).unwrap(), "{s} n={n}");
        }
    }
}

#[test]
fn hook_sum_matches_tableau_count_and_q_limit() {
    for s in shapes(9).filter(|s| s.size() <= 8) {
        let es = ExcitedShape::new(s.clone());
        let f = es.naruse_f().unwrap();
        assert_eq!(count_syt(&s).unwrap(), f, "{s}");
        assert_eq!(es.f_q().limit_at_one().unwrap(), BigRational::from_integer(f), "{s}");
    }
}

#[test]
fn empty_skew_shapes_count_one() {
    for lambda in partitions_up_to(6) {
        let s = SkewShape::new(lambda.clone(), lambda.clone()).unwrap();
        let es = ExcitedShape::new(s.clone());
        assert_eq!(es.naruse_f().unwrap(), BigInt::from(1));
        assert_eq!(count_syt(&s).unwrap(), BigInt::from(1));
        assert_eq!(count_ssyt(&s, 3).unwrap(), BigInt::from(1));
        assert_eq!(es.f_q(), &QRat::one());
    }
}

#[test]
fn h_over_q_factorial_agrees_with_product_side() {
    for s in shapes(7) {
        let es = ExcitedShape::new(s.clone());
        let qf = QRat::from_poly(q_factorial(s.size()));
        for n in n_range(&s, 2) {
            let direct = es.h_over_q_factorial(n).unwrap();
            assert_eq!(direct, es.h_product(n).unwrap().div(&qf).unwrap(), "{s} n={n}");
        }
    }
}

#[test]
fn content_product_is_the_same_over_every_diagram() {
    for s in shapes(7) {
        let es = ExcitedShape::new(s.clone());
        let n = s.outer().len() as i64 + 1;
        let c = es.content_product(n).unwrap();
        for d in es.diagrams() {
            assert_eq!(es.content_product_over(d, n).unwrap(), c, "{s} {d}");
        }
    }
}

#[test]
fn leading_coefficient_in_n_is_the_tableau_count() {
    for s in shapes(7) {
        let es = ExcitedShape::new(s.clone());
        let coeffs = es.h_polynomial_in_n();
        let f = BigRational::from_integer(es.naruse_f().unwrap());
        assert_eq!(coeffs.len(), s.size() + 1, "{s}");
        assert_eq!(coeffs.last().unwrap(), &f, "{s}");
    }
}

#[test]
fn infinite_specialization_matches_tableaux() {
    for s in shapes(6) {
        let eyd = ExcitedShape::new(s.clone()).spec_series(20);
        assert_eq!(eyd, ssyt_spec_series(&s, 20).unwrap(), "{s}");
    }
}

#[test]
fn finite_specialization_three_ways() {
    for lambda in partitions_up_to(6) {
        let s = SkewShape::straight(lambda.clone());
        for n in 0..=lambda.len() + 3 {
            let closed = principal_spec_closed(&lambda, n);
            assert_eq!(QRat::from_poly(ssyt_genpoly(&s, n).unwrap()), closed, "{lambda} n={n}");
            assert_eq!(principal_spec_via_h(&lambda, n).unwrap(), closed, "{lambda} n={n}");
        }
    }
}

#[test]
fn straight_hbar_counts_semistandard_tableaux() {
    for lambda in partitions_up_to(6) {
        let s = SkewShape::straight(lambda.clone());
        let es = ExcitedShape::new(s.clone());
        for n in 0..=6i64 {
            let count = count_ssyt(&s, n as usize).unwrap();
            assert_eq!(es.hbar_via_sum(n), BigRational::from_integer(count), "{lambda} n={n}");
        }
    }
}

#[test]
fn lr_expansion_at_finitely_many_variables() {
    for s in shapes(6) {
        let coeffs = lr_coefficients(s.outer(), s.inner()).unwrap();
        for n in 0..=4 {
            let rhs: BigInt = coeffs
                .iter()
                .map(|(nu, c)| count_ssyt(&SkewShape::straight(nu.clone()), n).unwrap() * c)
                .sum();
            assert_eq!(count_ssyt(&s, n).unwrap(), rhs, "{s} n={n}");
        }
    }
}

#[test]
fn lr_coefficients_of_straight_shapes_are_trivial() {
    for lambda in partitions_up_to(6) {
        let coeffs = lr_coefficients(&lambda, &Partition::empty()).unwrap();
        assert_eq!(coeffs.into_iter().collect::<Vec<_>>(), vec![(lambda, 1)]);
    }
}
