//! Exact convex geometry over the rationals: affine dimension, convex hulls
//! with placing triangulations, normalized volumes and Minkowski sums.
//!
//! The normalized volume of a polytope `P ⊂ R^n` is `n! · Vol_n(P)`, and is
//! zero whenever `P` is not full-dimensional.
//!
//! Internally every computation scales the rational coordinates by the least
//! common denominator and works on integers (see [`crate::int`]). The hull
//! kernel handles dimensions up to [`MAX_PRACTICAL_DIM`] comfortably; larger
//! inputs work but the boundary complex grows quickly.

mod hull;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::int;
use crate::rational::{self, Rational};

/// Beyond this ambient dimension the hull is correct but not tuned.
pub const MAX_PRACTICAL_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    /// The `j`-th standard basis vector (0-based) of R^dim.
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut p = Self::origin(dim);
        p.0[j] = Rational::one();
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&rational::format(c))?;
        }
        f.write_str(")")
    }
}

/// An ordered list of points in a common ambient space. Duplicates are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    ambient_dim: usize,
    points: Vec<Point>,
}

impl PointConfiguration {
    pub fn new(ambient_dim: usize, points: Vec<Point>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Precondition("ambient dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::Empty("point configuration"));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != ambient_dim) {
            return Err(Error::Dimension {
                expected: ambient_dim,
                found: p.dim(),
                context: "point in configuration",
            });
        }
        Ok(Self {
            ambient_dim,
            points,
        })
    }

    /// Infers the ambient dimension from the first point.
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let dim = points.first().ok_or(Error::Empty("point configuration"))?.dim();
        Self::new(dim, points)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_points(rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// First pair of equal points, if any.
    pub fn find_duplicate(&self) -> Option<(usize, usize)> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].cmp(&self.points[b]).then(a.cmp(&b)));
        idx.windows(2)
            .find(|w| self.points[w[0]] == self.points[w[1]])
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    /// Distinct points in first-occurrence order.
    pub fn deduplicated(&self) -> Vec<Point> {
        let mut seen = std::collections::HashSet::new();
        self.points
            .iter()
            .filter(|p| seen.insert(*p))
            .cloned()
            .collect()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            points: self.points.iter().map(|p| p.scale(factor)).collect(),
        }
    }
}

/// A simplex given by affinely independent vertices (at most n+1 in R^n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    ambient_dim: usize,
    vertices: Vec<Point>,
}

impl Simplex {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let first = vertices.first().ok_or(Error::Empty("simplex"))?;
        let ambient_dim = first.dim();
        if let Some(p) = vertices.iter().find(|p| p.dim() != ambient_dim) {
            return Err(Error::Dimension {
                expected: ambient_dim,
                found: p.dim(),
                context: "simplex vertex",
            });
        }
        if vertices.len() > ambient_dim + 1 || affine_rank(&vertices) + 1 != vertices.len() {
            return Err(Error::AffinelyDependent);
        }
        Ok(Self {
            ambient_dim,
            vertices,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Intrinsic dimension (vertex count minus one).
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn normalized_volume(&self) -> Result<Rational> {
        simplex_normalized_volume(&self.vertices)
    }

    pub fn to_polytope(&self) -> ConvexPolytope {
        convex_hull(&PointConfiguration {
            ambient_dim: self.ambient_dim,
            points: self.vertices.clone(),
        })
    }
}

/// A polytope in V-representation. `vertices` are exactly the extreme points.
///
/// Full-dimensional polytopes carry a placing triangulation whose cells may
/// use non-extreme input points (any triangulation of the hull is valid for
/// volume purposes).
#[derive(Debug, Clone)]
pub struct ConvexPolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    normalized_volume: Rational,
    pool: Arc<[Point]>,
    cells: Option<Vec<Vec<usize>>>,
}

impl PartialEq for ConvexPolytope {
    /// Same ambient space and same vertex set.
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.sorted_vertices() == other.sorted_vertices()
    }
}

impl ConvexPolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn sorted_vertices(&self) -> Vec<Point> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }

    pub fn normalized_volume(&self) -> &Rational {
        &self.normalized_volume
    }

    /// Euclidean volume, `nvol / n!`.
    pub fn volume(&self) -> Rational {
        &self.normalized_volume / Rational::from_integer(rational::factorial(self.ambient_dim))
    }

    pub fn dim(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.cells.is_some()
    }

    pub fn triangulation(&self) -> Option<Vec<Simplex>> {
        self.cells.as_ref().map(|cells| {
            cells
                .iter()
                .map(|c| Simplex {
                    ambient_dim: self.ambient_dim,
                    vertices: c.iter().map(|&i| self.pool[i].clone()).collect(),
                })
                .collect()
        })
    }

    pub fn translate(&self, t: &Point) -> ConvexPolytope {
        ConvexPolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| v.add(t)).collect(),
            normalized_volume: self.normalized_volume.clone(),
            pool: self.pool.iter().map(|v| v.add(t)).collect(),
            cells: self.cells.clone(),
        }
    }
}

/// Rank of `{p_i - p_0}`; 0 for a single point.
fn affine_rank(points: &[Point]) -> usize {
    affine_frame(points).0
}

/// Affine rank together with coordinate indices onto which projection is
/// injective on the affine hull.
fn affine_frame(points: &[Point]) -> (usize, Vec<usize>) {
    let Some(base) = points.first() else {
        return (0, Vec::new());
    };
    let scaled = to_integer_rows(points);
    let rows: Vec<Vec<BigInt>> = scaled[1..]
        .iter()
        .map(|r| r.iter().zip(&scaled[0]).map(|(a, b)| a - b).collect())
        .collect();
    if rows.is_empty() || base.dim() == 0 {
        return (0, Vec::new());
    }
    int::with_fallback(
        &rows,
        |r| int::rank_with_pivots(r.to_vec()),
        |r| int::rank_with_pivots(r.to_vec()),
    )
}

/// Coordinates scaled by the common denominator of all entries.
fn to_integer_rows(points: &[Point]) -> Vec<Vec<BigInt>> {
    let l = rational::common_denominator(points.iter().flat_map(|p| p.coords()));
    points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect()
        })
        .collect()
}

pub fn affine_dim(config: &PointConfiguration) -> usize {
    affine_rank(config.points())
}

pub fn convex_hull(config: &PointConfiguration) -> ConvexPolytope {
    let pts = config.deduplicated();
    let order: Vec<usize> = (0..pts.len()).collect();
    hull_of(config.ambient_dim(), pts, &order)
}

/// Like [`convex_hull`] but inserting the distinct points in a caller-chosen
/// order (`order` indexes the deduplicated point list); changes only the
/// triangulation, never the vertices or volume.
pub fn convex_hull_with_order(config: &PointConfiguration, order: &[usize]) -> Result<ConvexPolytope> {
    let pts = config.deduplicated();
    let mut check = order.to_vec();
    check.sort_unstable();
    if check != (0..pts.len()).collect::<Vec<_>>() {
        return Err(Error::Precondition(format!(
            "insertion order must be a permutation of 0..{}",
            pts.len()
        )));
    }
    Ok(hull_of(config.ambient_dim(), pts, order))
}

fn hull_of(ambient_dim: usize, pts: Vec<Point>, order: &[usize]) -> ConvexPolytope {
    let (rank, pivots) = affine_frame(&pts);
    let mut scaled = to_integer_rows(&pts);
    let denom = rational::common_denominator(pts.iter().flat_map(|p| p.coords()));

    if rank == 0 {
        return ConvexPolytope {
            ambient_dim,
            vertices: vec![pts[0].clone()],
            normalized_volume: Rational::zero(),
            pool: pts.into(),
            cells: None,
        };
    }

    let full = rank == ambient_dim;
    if !full {
        // Project onto coordinates that are injective on the affine hull.
        scaled = scaled
            .into_iter()
            .map(|row| pivots.iter().map(|&j| row[j].clone()).collect())
            .collect();
    }
    let placing = hull::place(&scaled, order, true);
    let vertices = placing.extreme.iter().map(|&i| pts[i].clone()).collect();
    let (normalized_volume, cells) = if full {
        let scale = num_traits::pow(denom, ambient_dim);
        (Rational::new(placing.det_sum, scale), Some(placing.cells))
    } else {
        (Rational::zero(), None)
    };
    ConvexPolytope {
        ambient_dim,
        vertices,
        normalized_volume,
        pool: pts.into(),
        cells,
    }
}

/// `|det [1 ... 1; p_1 ... p_{n+1}]|` for n+1 points in R^n.
pub fn simplex_normalized_volume(vertices: &[Point]) -> Result<Rational> {
    let n = vertices.first().ok_or(Error::Empty("simplex"))?.dim();
    if vertices.len() != n + 1 {
        return Err(Error::Dimension {
            expected: n + 1,
            found: vertices.len(),
            context: "simplex vertex count",
        });
    }
    if let Some(p) = vertices.iter().find(|p| p.dim() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: p.dim(),
            context: "simplex vertex",
        });
    }
    let bordered: Vec<Vec<Rational>> = vertices
        .iter()
        .map(|p| {
            std::iter::once(Rational::one())
                .chain(p.coords().iter().cloned())
                .collect()
        })
        .collect();
    Ok(crate::linalg::det(&bordered).abs())
}

pub fn normalized_volume(config: &PointConfiguration) -> Rational {
    if affine_dim(config) < config.ambient_dim() {
        return Rational::zero();
    }
    convex_hull(config).normalized_volume
}

pub fn minkowski_sum(a: &ConvexPolytope, b: &ConvexPolytope) -> Result<ConvexPolytope> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Dimension {
            expected: a.ambient_dim,
            found: b.ambient_dim,
            context: "Minkowski summand",
        });
    }
    let mut sums = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for u in &a.vertices {
        for v in &b.vertices {
            sums.push(u.add(v));
        }
    }
    let config = PointConfiguration {
        ambient_dim: a.ambient_dim,
        points: sums,
    };
    // Most sums are interior; placing far points first keeps them cheap.
    let pts = config.deduplicated();
    let count = Rational::from_integer(pts.len().into());
    let mut centroid = vec![Rational::zero(); a.ambient_dim];
    for p in &pts {
        for (c, x) in centroid.iter_mut().zip(p.coords()) {
            *c += x;
        }
    }
    let spread: Vec<Rational> = pts
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(&centroid)
                .map(|(x, c)| {
                    let d = x * &count - c;
                    &d * &d
                })
                .sum()
        })
        .collect();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| spread[j].cmp(&spread[i]).then(i.cmp(&j)));
    Ok(hull_of(a.ambient_dim, pts, &order))
}

pub fn scale(p: &ConvexPolytope, factor: &Rational) -> Result<ConvexPolytope> {
    if factor.is_negative() {
        return Err(Error::NegativeScale(rational::format(factor)));
    }
    if factor.is_zero() {
        let origin = Point::origin(p.ambient_dim);
        return Ok(ConvexPolytope {
            ambient_dim: p.ambient_dim,
            vertices: vec![origin.clone()],
            normalized_volume: Rational::zero(),
            pool: vec![origin].into(),
            cells: None,
        });
    }
    Ok(ConvexPolytope {
        ambient_dim: p.ambient_dim,
        vertices: p.vertices.iter().map(|v| v.scale(factor)).collect(),
        normalized_volume: &p.normalized_volume * rational::pow(factor, p.ambient_dim),
        pool: p.pool.iter().map(|v| v.scale(factor)).collect(),
        cells: p.cells.clone(),
    })
}
