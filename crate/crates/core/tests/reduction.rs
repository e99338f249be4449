mod common;

use common::*;
use mixvol::geometry::{normalized_volume, simplex_normalized_volume, Point};
use mixvol::mixed::{mixed_volume_cells, mixed_volume_ie, segment_mixed_volume, InclusionExclusion};
use mixvol::rational::{pow, ratio};
use mixvol::reduction::{build_simplices, verify_main_theorem};
use mixvol::{Error, PointConfiguration};
use proptest::prelude::*;

#[test]
fn rejects_duplicates_and_too_few_points() {
    let dup = config(&[vec![0, 0], vec![1, 0], vec![0, 0]]);
    assert!(matches!(build_simplices(&dup), Err(Error::DuplicatePoint { first: 0, second: 2 })));
    let few = config(&[vec![0, 0], vec![1, 0]]);
    assert!(matches!(build_simplices(&few), Err(Error::Precondition(_))));
}

#[test]
fn simplex_shape() {
    let r = build_simplices(&config(&[vec![1, 2], vec![0, 0], vec![3, 1], vec![1, 1]])).unwrap();
    assert_eq!(r.simplices.len(), 4);
    for (s, hat) in r.simplices.iter().zip(&r.hat_points) {
        assert_eq!(s.ambient_dim(), 4);
        assert_eq!(s.dim(), 2);
        assert_eq!(&s.vertices()[0], hat);
        assert_eq!(s.vertices()[1], Point::unit(4, 2));
        assert_eq!(s.vertices()[2], Point::unit(4, 3));
    }
}

fn cfg_strategy(n: usize, max_m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    points(n, -3, 3, n + 1..max_m + 1).prop_filter("need m > n", move |r| r.len() > n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theorem_in_the_plane(rows in cfg_strategy(2, 5)) {
        let c = config(&rows);
        let check = verify_main_theorem(&c, &InclusionExclusion, 0).unwrap();
        prop_assert!(check.equal);
        prop_assert_eq!(&check.lhs, &q(twice_area(&pairs(&rows))));
    }

    #[test]
    fn theorem_in_space_with_cells(rows in cfg_strategy(3, 5), seed in any::<u64>()) {
        let c = config(&rows);
        let rhs = mixed_volume_cells(&build_simplices(&c).unwrap().tuple(), seed).unwrap();
        prop_assert_eq!(normalized_volume(&c), rhs);
    }

    #[test]
    fn degenerate_configurations_vanish(
        base in prop::collection::vec(-3i64..=3, 3),
        dir in prop::collection::vec(-2i64..=2, 3),
        dir2 in prop::collection::vec(-2i64..=2, 3),
        ts in prop::collection::vec((-3i64..=3, -3i64..=3), 4..6),
    ) {
        let rows = distinct(
            ts.iter()
                .map(|&(s, t)| (0..3).map(|j| base[j] + s * dir[j] + t * dir2[j]).collect())
                .collect(),
        );
        prop_assume!(rows.len() > 3);
        let c = config(&rows);
        let check = verify_main_theorem(&c, &InclusionExclusion, 0).unwrap();
        prop_assert_eq!(&check.lhs, &q(0));
        prop_assert_eq!(&check.rhs, &q(0));
    }

    #[test]
    fn intro_formula(n in 1usize..5, flat in prop::collection::vec(-3i64..=3, 20)) {
        let rows: Vec<Vec<i64>> = (0..=n).map(|i| flat[i * n..i * n + n].to_vec()).collect();
        prop_assume!(distinct(rows.clone()).len() == n + 1);
        let c = config(&rows);
        let r = build_simplices(&c).unwrap();
        // Each Δ(p_i) is the segment [p̂_i, e_{n+1}].
        let segs: Vec<(Point, Point)> = r
            .simplices
            .iter()
            .map(|s| (s.vertices()[0].clone(), s.vertices()[1].clone()))
            .collect();
        let pts: Vec<Point> = rows.iter().map(|p| Point::from_ints(p)).collect();
        let oracle = q(bordered_det(&rows) as i64);
        prop_assert_eq!(&simplex_normalized_volume(&pts).unwrap(), &oracle);
        prop_assert_eq!(&segment_mixed_volume(&segs).unwrap(), &oracle);
    }

    #[test]
    fn both_sides_scale_by_lambda_to_the_n(rows in cfg_strategy(2, 4), pick in 0usize..3) {
        let lambda = [ratio(1, 2), ratio(2, 1), ratio(3, 1)][pick].clone();
        let c = config(&rows);
        let scaled = PointConfiguration::from_points(c.points().iter().map(|p| p.scale(&lambda)).collect()).unwrap();
        let before = verify_main_theorem(&c, &InclusionExclusion, 0).unwrap();
        let after = verify_main_theorem(&scaled, &InclusionExclusion, 0).unwrap();
        let factor = pow(&lambda, 2);
        prop_assert_eq!(after.lhs, &before.lhs * &factor);
        prop_assert_eq!(after.rhs, &before.rhs * &factor);
    }

    #[test]
    fn reduced_tuple_is_translation_covariant(rows in cfg_strategy(2, 4), t in prop::collection::vec(-3i64..=3, 2)) {
        let shift = Point::from_ints(&t);
        let c = config(&rows);
        let moved = PointConfiguration::from_points(c.points().iter().map(|p| p.add(&shift)).collect()).unwrap();
        let a = mixed_volume_ie(&build_simplices(&c).unwrap().tuple());
        let b = mixed_volume_ie(&build_simplices(&moved).unwrap().tuple());
        prop_assert_eq!(a, b);
    }
}
