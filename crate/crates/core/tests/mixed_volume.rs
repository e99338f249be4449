mod common;

use common::*;
use mixvol::geometry::{minkowski_sum, scale, Point};
use mixvol::mixed::{
    mixed_cells, mixed_volume_cells, mixed_volume_ie, segment_mixed_volume, Lifting, MixedCells,
};
use mixvol::rational::ratio;
use mixvol::{ConvexPolytope, EngineRegistry, Error, MixedVolumeEngine, PolytopeTuple};
use proptest::prelude::*;

fn tuple(ps: Vec<ConvexPolytope>) -> PolytopeTuple {
    PolytopeTuple::new(ps).unwrap()
}

#[test]
fn boxes_give_the_permanent() {
    let sides = vec![vec![1, 2, 0], vec![3, 1, 1], vec![2, 2, 1]];
    let t = tuple(sides.iter().map(|s| axis_box(s)).collect());
    let expected = q(permanent(&sides) as i64);
    assert_eq!(mixed_volume_ie(&t), expected);
    assert_eq!(mixed_volume_cells(&t, 5).unwrap(), expected);
}

#[test]
fn unit_cubes() {
    let t = tuple(vec![axis_box(&[1, 1, 1, 1]); 4]);
    assert_eq!(mixed_volume_ie(&t), q(24));
    let t = tuple(vec![axis_box(&[1, 1, 1]); 3]);
    assert_eq!(mixed_volume_cells(&t, 0).unwrap(), q(6));
}

#[test]
fn cells_are_reproducible_per_seed() {
    let t = tuple(vec![
        polytope(&[vec![0, 0], vec![2, 0], vec![0, 1], vec![1, 2]]),
        polytope(&[vec![0, 0], vec![1, 1], vec![-1, 2]]),
    ]);
    let a = mixed_cells(&t, &Lifting::random(&t, 11)).unwrap();
    let b = mixed_cells(&t, &Lifting::random(&t, 11)).unwrap();
    assert_eq!(a, b);
    let total: mixvol::Rational = a.iter().map(|c| c.cell_volume.clone()).sum();
    assert_eq!(total, mixed_volume_ie(&t));
}

#[test]
fn exhausted_retries_surface_as_an_error() {
    let t = tuple(vec![polytope(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]); 2]);
    let flat = Lifting::from_heights(&t, vec![vec![0; 4], vec![0; 4]], 3).unwrap();
    assert!(matches!(mixed_cells(&t, &flat), Err(Error::NonGenericLifting { .. })));
    let engine = MixedCells { retry_cap: 0 };
    assert!(matches!(engine.mixed_volume(&t, 3), Err(Error::NonGenericLifting { .. })));
}

fn planar(count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    points(2, -3, 3, count)
}

fn spatial() -> impl Strategy<Value = Vec<Vec<i64>>> {
    points(3, -2, 2, 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn planar_matches_area_oracle(a in planar(1..6), b in planar(1..6), seed in any::<u64>()) {
        let t = tuple(vec![polytope(&a), polytope(&b)]);
        let oracle = mixed_area(&pairs(&a), &pairs(&b));
        prop_assert_eq!(&mixed_volume_ie(&t), &oracle);
        prop_assert_eq!(&mixed_volume_cells(&t, seed).unwrap(), &oracle);
    }

    #[test]
    fn engines_agree_in_three_dimensions(a in spatial(), b in spatial(), c in spatial(), seed in any::<u64>()) {
        let t = tuple(vec![polytope(&a), polytope(&b), polytope(&c)]);
        prop_assert_eq!(mixed_volume_ie(&t), mixed_volume_cells(&t, seed).unwrap());
    }

    #[test]
    fn symmetric(a in spatial(), b in spatial(), c in spatial()) {
        let (pa, pb, pc) = (polytope(&a), polytope(&b), polytope(&c));
        let base = mixed_volume_ie(&tuple(vec![pa.clone(), pb.clone(), pc.clone()]));
        prop_assert_eq!(&base, &mixed_volume_ie(&tuple(vec![pc.clone(), pa.clone(), pb.clone()])));
        prop_assert_eq!(&base, &mixed_volume_ie(&tuple(vec![pb, pa, pc])));
    }

    #[test]
    fn multilinear_in_first_slot(
        a in spatial(), a2 in spatial(), b in spatial(), c in spatial(),
        num in 0i64..4, den in 1i64..3,
    ) {
        let (pa, pa2, pb, pc) = (polytope(&a), polytope(&a2), polytope(&b), polytope(&c));
        let mv = |p: ConvexPolytope| mixed_volume_ie(&tuple(vec![p, pb.clone(), pc.clone()]));
        let sum = minkowski_sum(&pa, &pa2).unwrap();
        prop_assert_eq!(mv(sum), mv(pa.clone()) + mv(pa2));
        let lambda = ratio(num, den);
        prop_assert_eq!(mv(scale(&pa, &lambda).unwrap()), mv(pa) * lambda);
    }

    #[test]
    fn translation_invariant(a in spatial(), b in spatial(), c in spatial(), t in prop::collection::vec(-4i64..=4, 3)) {
        let shift = Point::from_ints(&t);
        let (pa, pb, pc) = (polytope(&a), polytope(&b), polytope(&c));
        let moved = tuple(vec![pa.translate(&shift), pb.clone(), pc.translate(&shift)]);
        prop_assert_eq!(mixed_volume_ie(&tuple(vec![pa, pb, pc])), mixed_volume_ie(&moved));
    }

    #[test]
    fn diagonal_is_normalized_volume(a in points(3, -2, 2, 1..8), seed in any::<u64>()) {
        let p = polytope(&a);
        let t = tuple(vec![p.clone(); 3]);
        prop_assert_eq!(&mixed_volume_ie(&t), p.normalized_volume());
        prop_assert_eq!(&mixed_volume_cells(&t, seed).unwrap(), p.normalized_volume());
    }

    #[test]
    fn segments_match_determinant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 3)) {
        let segs: Vec<(Point, Point)> = rows
            .iter()
            .map(|r| (Point::from_ints(&r[..3]), Point::from_ints(&r[3..])))
            .collect();
        let dirs: Vec<Vec<i64>> = rows.iter().map(|r| (0..3).map(|j| r[3 + j] - r[j]).collect()).collect();
        let expected = q(leibniz_det(&dirs).abs() as i64);
        prop_assert_eq!(&segment_mixed_volume(&segs).unwrap(), &expected);
        let polys: Vec<ConvexPolytope> = rows.iter().map(|r| polytope(&distinct(vec![r[..3].to_vec(), r[3..].to_vec()]))).collect();
        let t = tuple(polys);
        let reg = EngineRegistry::new();
        for name in ["ie", "cells", "segments"] {
            prop_assert_eq!(&reg.get(name).unwrap().mixed_volume(&t, 0).unwrap(), &expected);
        }
    }

    #[test]
    fn common_hyperplane_gives_zero(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 6)) {
        // Everything in the plane z = 1.
        let lift = |r: &[Vec<i64>]| polytope(&distinct(r.iter().map(|p| vec![p[0], p[1], 1]).collect()));
        let t = tuple(vec![lift(&rows[..2]), lift(&rows[2..4]), lift(&rows[4..])]);
        prop_assert_eq!(mixed_volume_ie(&t), q(0));
        prop_assert_eq!(mixed_volume_cells(&t, 1).unwrap(), q(0));
    }

    #[test]
    fn box_tuples_give_the_permanent(sides in prop::collection::vec(prop::collection::vec(0i64..=3, 3), 3)) {
        let t = tuple(sides.iter().map(|s| axis_box(s)).collect());
        prop_assert_eq!(mixed_volume_ie(&t), q(permanent(&sides) as i64));
    }
}
