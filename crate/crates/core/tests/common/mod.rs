//! Test-only oracles that share no code with the library.

#![allow(dead_code)]

use mixvol::geometry::{convex_hull, Point, PointConfiguration};
use mixvol::{ConvexPolytope, Rational};
use proptest::prelude::*;

pub fn q(v: i64) -> Rational {
    mixvol::rational::int(v)
}

pub fn config(rows: &[Vec<i64>]) -> PointConfiguration {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    PointConfiguration::from_ints(&refs).unwrap()
}

pub fn polytope(rows: &[Vec<i64>]) -> ConvexPolytope {
    convex_hull(&config(rows))
}

pub fn distinct(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut seen = std::collections::HashSet::new();
    rows.retain(|r| seen.insert(r.clone()));
    rows
}

/// Andrew's monotone chain; collinear points dropped.
pub fn hull2(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut p = points.to_vec();
    p.sort_unstable();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &pt in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], pt) <= 0 {
            lower.pop();
        }
        lower.push(pt);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &pt in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], pt) <= 0 {
            upper.pop();
        }
        upper.push(pt);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area of `conv(points)`, i.e. the normalized area.
pub fn twice_area(points: &[(i64, i64)]) -> i64 {
    let h = hull2(points);
    if h.len() < 3 {
        return 0;
    }
    let mut s = 0;
    for i in 0..h.len() {
        let (a, b) = (h[i], h[(i + 1) % h.len()]);
        s += a.0 * b.1 - a.1 * b.0;
    }
    s.abs()
}

pub fn minkowski2(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    a.iter()
        .flat_map(|&(x, y)| b.iter().map(move |&(u, v)| (x + u, y + v)))
        .collect()
}

/// Planar mixed volume from areas: `A(P+Q) - A(P) - A(Q)`.
pub fn mixed_area(a: &[(i64, i64)], b: &[(i64, i64)]) -> Rational {
    let twice = twice_area(&minkowski2(a, b)) - twice_area(a) - twice_area(b);
    Rational::new(twice.into(), 2.into())
}

pub fn pairs(rows: &[Vec<i64>]) -> Vec<(i64, i64)> {
    rows.iter().map(|r| (r[0], r[1])).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion.
pub fn leibniz_det(m: &[Vec<i64>]) -> i128 {
    permutations(m.len())
        .iter()
        .map(|p| {
            sign(p) as i128 * p.iter().enumerate().map(|(i, &j)| m[i][j] as i128).product::<i128>()
        })
        .sum()
}

pub fn permanent(m: &[Vec<i64>]) -> i128 {
    permutations(m.len())
        .iter()
        .map(|p| p.iter().enumerate().map(|(i, &j)| m[i][j] as i128).product::<i128>())
        .sum()
}

/// `|det [1 p_i]|` by Leibniz.
pub fn bordered_det(points: &[Vec<i64>]) -> i128 {
    let m: Vec<Vec<i64>> = points
        .iter()
        .map(|p| std::iter::once(1).chain(p.iter().copied()).collect())
        .collect();
    leibniz_det(&m).abs()
}

/// Axis box `[0, a_1] x ... x [0, a_n]`.
pub fn axis_box(sides: &[i64]) -> ConvexPolytope {
    let n = sides.len();
    let rows: Vec<Vec<i64>> = (0..1u32 << n)
        .map(|mask| (0..n).map(|j| if mask >> j & 1 == 1 { sides[j] } else { 0 }).collect())
        .collect();
    polytope(&rows)
}

pub fn sorted(p: &ConvexPolytope) -> Vec<Point> {
    p.sorted_vertices()
}

pub fn points(dim: usize, lo: i64, hi: i64, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, dim), count).prop_map(distinct)
}
