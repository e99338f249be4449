//! Incremental beneath-beyond hull with a placing triangulation.
//!
//! Works on full-dimensional integer point sets. The boundary is kept as a
//! triangulated sphere of (d-1)-simplices; each carries the unreduced cofactor
//! normal of its hyperplane, so `normal . p - offset` is exactly the signed
//! determinant of the simplex spanned by the facet and `p`. Inserting a point
//! cones it over every facet it strictly sees, which both extends the
//! triangulation and yields that cell's volume for free.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::int::{self, ExactInt};

#[derive(Debug, Clone)]
pub(crate) struct Placing {
    /// Full-dimensional simplices as indices into the input points.
    pub cells: Vec<Vec<usize>>,
    /// Sum of |det| over `cells` (the normalized volume in integer units).
    pub det_sum: BigInt,
    /// Indices of extreme points, ascending. Empty unless requested.
    pub extreme: Vec<usize>,
}

struct Facet<T> {
    verts: Vec<usize>,
    normal: Vec<T>,
    offset: T,
}

/// Triangulates `conv(points)` inserting points in `order`.
///
/// `points` must be distinct and affinely span R^d with d >= 1.
pub(crate) fn place(points: &[Vec<BigInt>], order: &[usize], want_extreme: bool) -> Placing {
    int::with_fallback(
        points,
        |pts| place_in(pts, order, want_extreme),
        |pts| place_in(pts, order, want_extreme),
    )
}

fn diff<T: ExactInt>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Greedy affinely independent subset of size d+1, taken in `order`.
fn initial_simplex<T: ExactInt>(pts: &[Vec<T>], order: &[usize], d: usize) -> Option<Vec<usize>> {
    let mut chosen = vec![order[0]];
    let mut rows: Vec<Vec<T>> = Vec::new();
    for &i in &order[1..] {
        if chosen.len() == d + 1 {
            break;
        }
        let row = diff(&pts[i], &pts[chosen[0]])?;
        rows.push(row);
        let (rank, _) = int::rank_with_pivots(rows.clone())?;
        if rank == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    assert_eq!(chosen.len(), d + 1, "point set is not full-dimensional");
    Some(chosen)
}

fn make_facet<T: ExactInt>(
    pts: &[Vec<T>],
    verts: Vec<usize>,
    interior_sum: &[T],
    interior_weight: &T,
) -> Option<Facet<T>> {
    let d = pts[0].len();
    let base = &pts[verts[0]];
    let rows: Vec<Vec<T>> = verts[1..]
        .iter()
        .map(|&v| diff(&pts[v], base))
        .collect::<Option<_>>()?;
    let mut normal = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let c = int::det(minor)?;
        normal.push(if k % 2 == 0 { c } else { c.neg()? });
    }
    let mut offset = int::dot(&normal, base)?;
    // The interior reference must lie strictly on the negative side.
    let side = int::dot(&normal, interior_sum)?.sub(&interior_weight.mul(&offset)?)?;
    debug_assert!(!side.is_zero(), "interior reference on a boundary hyperplane");
    if side.signum() > 0 {
        normal = normal.iter().map(T::neg).collect::<Option<_>>()?;
        offset = offset.neg()?;
    }
    Some(Facet {
        verts,
        normal,
        offset,
    })
}

fn place_in<T: ExactInt>(pts: &[Vec<T>], order: &[usize], want_extreme: bool) -> Option<Placing> {
    let d = pts[0].len();
    let simplex = initial_simplex(pts, order, d)?;

    // Barycenter of the first simplex, scaled by d+1 to stay integral.
    let mut interior_sum = vec![T::zero(); d];
    for &v in &simplex {
        for (acc, x) in interior_sum.iter_mut().zip(&pts[v]) {
            *acc = acc.add(x)?;
        }
    }
    let weight = T::from_bigint(&BigInt::from(d + 1))?;

    let mut facets: Vec<Facet<T>> = Vec::new();
    for skip in 0..=d {
        let mut verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != skip)
            .map(|(_, &v)| v)
            .collect();
        verts.sort_unstable();
        facets.push(make_facet(pts, verts, &interior_sum, &weight)?);
    }

    let first = &facets[0];
    let missing = simplex.iter().copied().find(|v| !first.verts.contains(v)).unwrap();
    let first_det = int::dot(&first.normal, &pts[missing])?.sub(&first.offset)?;
    let mut det_sum = first_det.to_bigint();
    if det_sum < <BigInt as Zero>::zero() {
        det_sum = -det_sum;
    }
    let mut sorted_simplex = simplex.clone();
    sorted_simplex.sort_unstable();
    let mut cells = vec![sorted_simplex];

    for &p in order {
        if simplex.contains(&p) {
            continue;
        }
        let mut visible = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            let h = int::dot(&f.normal, &pts[p])?.sub(&f.offset)?;
            if h.signum() > 0 {
                visible.push((fi, h));
            }
        }
        if visible.is_empty() {
            continue;
        }

        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (fi, h) in &visible {
            let f = &facets[*fi];
            let mut cell = f.verts.clone();
            cell.push(p);
            cell.sort_unstable();
            cells.push(cell);
            det_sum += h.to_bigint();
            for skip in 0..f.verts.len() {
                let ridge: Vec<usize> = f
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }

        let mut is_visible = vec![false; facets.len()];
        for (fi, _) in &visible {
            is_visible[*fi] = true;
        }
        let mut kept: Vec<Facet<T>> = facets
            .into_iter()
            .zip(is_visible)
            .filter(|(_, vis)| !vis)
            .map(|(f, _)| f)
            .collect();

        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|&(_, count)| count == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort_unstable();
        for mut verts in horizon {
            verts.push(p);
            verts.sort_unstable();
            kept.push(make_facet(pts, verts, &interior_sum, &weight)?);
        }
        facets = kept;
    }

    let extreme = if want_extreme {
        extreme_points(pts.len(), d, &facets)?
    } else {
        Vec::new()
    };
    Some(Placing {
        cells,
        det_sum,
        extreme,
    })
}

/// A boundary vertex is extreme iff the normals of the boundary simplices
/// through it span R^d (its normal cone is full-dimensional).
fn extreme_points<T: ExactInt>(count: usize, d: usize, facets: &[Facet<T>]) -> Option<Vec<usize>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (fi, f) in facets.iter().enumerate() {
        for &v in &f.verts {
            incident[v].push(fi);
        }
    }
    let mut out = Vec::new();
    for (v, fs) in incident.iter().enumerate() {
        if fs.len() < d {
            continue;
        }
        let mut basis: Vec<Vec<T>> = Vec::new();
        for &fi in fs {
            basis.push(facets[fi].normal.clone());
            let (rank, _) = int::rank_with_pivots(basis.clone())?;
            if rank < basis.len() {
                basis.pop();
            }
            if basis.len() == d {
                break;
            }
        }
        if basis.len() == d {
            out.push(v);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn square_with_center() {
        let p = pts(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2], &[1, 1]]);
        let order: Vec<usize> = (0..p.len()).collect();
        let out = place(&p, &order, true);
        assert_eq!(out.det_sum, BigInt::from(8));
        assert_eq!(out.extreme, vec![0, 1, 2, 3]);
    }

    #[test]
    fn center_first_still_excluded() {
        let p = pts(&[&[1, 1], &[0, 0], &[2, 0], &[2, 2], &[0, 2]]);
        let order: Vec<usize> = (0..p.len()).collect();
        let out = place(&p, &order, true);
        assert_eq!(out.det_sum, BigInt::from(8));
        assert_eq!(out.extreme, vec![1, 2, 3, 4]);
    }

    #[test]
    fn collinear_boundary_point_is_not_extreme() {
        let p = pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]);
        let order: Vec<usize> = (0..p.len()).collect();
        let out = place(&p, &order, true);
        assert_eq!(out.det_sum, BigInt::from(2));
        assert_eq!(out.extreme, vec![0, 2, 3]);
    }

    #[test]
    fn one_dimensional() {
        let p = pts(&[&[3], &[-1], &[5], &[0]]);
        let order: Vec<usize> = (0..p.len()).collect();
        let out = place(&p, &order, true);
        assert_eq!(out.det_sum, BigInt::from(6));
        assert_eq!(out.extreme, vec![1, 2]);
    }

    #[test]
    fn cube() {
        let mut raw = Vec::new();
        for m in 0..8i64 {
            raw.push(vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let p: Vec<Vec<BigInt>> = raw
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let order: Vec<usize> = (0..8).rev().collect();
        let out = place(&p, &order, true);
        assert_eq!(out.det_sum, BigInt::from(6));
        assert_eq!(out.extreme.len(), 8);
    }
}
