use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use hookcontent::excited::{enumerate_eyd, Diagram};
use hookcontent::partition::{partitions_up_to, subpartitions, Cell, Partition, SkewShape};
use hookcontent::qarith::{q_factorial, rat_reduce, series_from_rat, QPoly, QRat, QSeries};

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&p| p > 0);
        Partition::new(v).unwrap()
    })
}

fn skew(max_parts: usize, max_part: usize) -> impl Strategy<Value = SkewShape> {
    partition(max_parts, max_part).prop_flat_map(|outer| {
        let subs = subpartitions(&outer);
        (Just(outer), 0..subs.len()).prop_map(move |(o, i)| SkewShape::new(o, subs[i].clone()).unwrap())
    })
}

fn poly(max_len: usize, range: i64) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-range..=range, 0..=max_len).prop_map(|c| QPoly::from_i64(&c))
}

fn nonzero_poly(max_len: usize, range: i64) -> impl Strategy<Value = QPoly> {
    poly(max_len, range).prop_filter("nonzero", |p| !p.is_zero())
}

/// Depth-first closure, independent of the library's breadth-first search.
fn eyd_dfs(shape: &SkewShape) -> BTreeSet<Diagram> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![Diagram::of_partition(shape.inner())];
    while let Some(d) = stack.pop() {
        if seen.contains(&d) {
            continue;
        }
        stack.extend(d.successors(shape.outer()));
        seen.insert(d);
    }
    seen
}

fn corners(p: &Partition) -> Vec<Cell> {
    (1..=p.len())
        .filter(|&r| p.row(r + 1) < p.row(r))
        .map(|r| Cell::new(r, p.row(r)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugate_is_an_involution(p in partition(7, 7)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn cell_count_is_size(p in partition(7, 7)) {
        prop_assert_eq!(p.cells().count(), p.parts().iter().sum::<usize>());
    }

    #[test]
    fn hooks_positive_and_corners_one(p in partition(6, 6)) {
        for c in p.cells() {
            prop_assert!(p.hook(c).unwrap() >= 1);
        }
        for c in corners(&p) {
            prop_assert_eq!(p.hook(c).unwrap(), 1);
        }
    }

    #[test]
    fn content_sum_identity(p in partition(7, 7)) {
        let direct: i64 = p.cells().map(|c| c.content()).sum();
        let closed: i64 = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let l = l as i64;
                l * (l - 1) / 2 - i as i64 * l
            })
            .sum();
        prop_assert_eq!(direct, closed);
    }

    #[test]
    fn b_stat_counts_rows(p in partition(7, 7)) {
        prop_assert_eq!(p.b_stat(), p.cells().map(|c| c.row - 1).sum::<usize>());
    }

    #[test]
    fn eyd_diagram_invariants(s in skew(4, 4)) {
        let all = enumerate_eyd(&s);
        let mu = Diagram::of_partition(s.inner());
        prop_assert!(all.contains(&mu));
        let contents = mu.contents();
        for d in &all {
            prop_assert_eq!(d.len(), s.inner().size());
            prop_assert!(d.cells().all(|c| s.outer().contains_cell(c)));
            prop_assert_eq!(d.contents(), contents.clone());
        }
    }

    #[test]
    fn eyd_search_order_irrelevant(s in skew(4, 4)) {
        let bfs: BTreeSet<Diagram> = enumerate_eyd(&s).into_iter().collect();
        prop_assert_eq!(bfs, eyd_dfs(&s));
    }

    #[test]
    fn reduction_is_canonical(a in poly(5, 6), b in nonzero_poly(5, 6), k in nonzero_poly(3, 4)) {
        let base = rat_reduce(&a, &b).unwrap();
        let scaled = rat_reduce(&(&a * &k), &(&b * &k)).unwrap();
        prop_assert_eq!(&scaled, &base);
        prop_assert_eq!(rat_reduce(base.num(), base.den()).unwrap(), base);
    }

    #[test]
    fn series_of_polynomial_is_itself(a in poly(8, 9), order in 0usize..12) {
        let s = series_from_rat(&QRat::from_poly(a.clone()), order).unwrap();
        prop_assert_eq!(s, QSeries::from_poly(&a, order));
    }

    #[test]
    fn series_product_truncates_polynomial_product(a in poly(7, 5), b in poly(7, 5), order in 0usize..14) {
        let lhs = QSeries::from_poly(&a, order).mul(&QSeries::from_poly(&b, order));
        prop_assert_eq!(lhs, QSeries::from_poly(&(&a * &b), order));
    }

    #[test]
    fn gcd_divides_and_is_greatest(a in nonzero_poly(4, 5), b in nonzero_poly(4, 5), k in nonzero_poly(3, 4)) {
        let (x, y) = (&a * &k, &b * &k);
        let g = x.gcd(&y).unwrap();
        prop_assert!(x.div_exact(&g).is_ok());
        prop_assert!(y.div_exact(&g).is_ok());
        prop_assert!(g.div_exact(&k.primitive_part()).is_ok());
    }
}

#[test]
fn q_factorial_at_one() {
    let mut fact = BigInt::from(1);
    for m in 0..=12u32 {
        if m > 0 {
            fact *= m;
        }
        assert_eq!(q_factorial(m as usize).at_one(), fact);
    }
}

#[test]
fn subpartitions_match_filter() {
    for lambda in partitions_up_to(8) {
        let expected: BTreeSet<Partition> =
            partitions_up_to(lambda.size()).filter(|mu| lambda.contains(mu)).collect();
        let got = subpartitions(&lambda);
        assert_eq!(got.len(), expected.len(), "{lambda}");
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), expected);
    }
}

#[test]
fn eyd_trivial_cases_and_search_order_up_to_eight() {
    for lambda in partitions_up_to(8) {
        assert_eq!(enumerate_eyd(&SkewShape::straight(lambda.clone())).len(), 1);
        assert_eq!(enumerate_eyd(&SkewShape::new(lambda.clone(), lambda.clone()).unwrap()).len(), 1);
        for mu in subpartitions(&lambda) {
            let s = SkewShape::new(lambda.clone(), mu).unwrap();
            let bfs: BTreeSet<Diagram> = enumerate_eyd(&s).into_iter().collect();
            assert_eq!(bfs, eyd_dfs(&s), "{s}");
        }
    }
}
