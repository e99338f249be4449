//! Mixed-cell engine.
//!
//! Lift every vertex of `P_i` to an integer height `ω_i`. A tuple of vertex
//! pairs `({a_1,b_1}, ..., {a_n,b_n})` is a mixed cell of the induced fine
//! mixed subdivision iff some `γ ∈ Q^n` satisfies, for every `i` and every
//! other vertex `c` of `P_i`,
//!
//! ```text
//! <γ, a_i> + ω(a_i) = <γ, b_i> + ω(b_i) < <γ, c> + ω(c)
//! ```
//!
//! i.e. `(γ, 1)` is an inner normal of a lower facet of the lifted Minkowski
//! sum that picks exactly the edge `[a_i, b_i]` from each summand. The mixed
//! volume is the sum of `|det[b_i - a_i]|` over all mixed cells.
//!
//! Candidate tuples are enumerated depth first. A prefix is dropped as soon
//! as its edge directions become linearly dependent, or as soon as the
//! non-strict version of the system above has no rational solution (checked
//! with the exact LP in [`crate::lp`]). For a complete tuple the directions
//! determine `γ` uniquely, so the leaf check is a linear solve; a vanishing
//! slack there means the lifting is not generic and the caller redraws.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{MixedVolumeEngine, PolytopeTuple};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::int::{self, ExactInt};
use crate::lp::{self, IntConstraint, Relation};
use crate::rational::{self, Rational};

/// Lifting heights are drawn uniformly from `[-LIFTING_BOUND, LIFTING_BOUND]`.
pub const LIFTING_BOUND: i64 = 1 << 20;

/// Liftings drawn before giving up on a tuple.
pub const RETRY_CAP: usize = 8;

/// Integer heights for the vertices of each polytope in a tuple, indexed like
/// [`crate::geometry::ConvexPolytope::vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    seed: u64,
    heights: Vec<Vec<i64>>,
}

impl Lifting {
    pub fn random(tuple: &PolytopeTuple, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let heights = tuple
            .polytopes()
            .iter()
            .map(|p| {
                (0..p.vertices().len())
                    .map(|_| rng.gen_range(-LIFTING_BOUND..=LIFTING_BOUND))
                    .collect()
            })
            .collect();
        Self { seed, heights }
    }

    /// Explicit heights; `seed` is only recorded.
    pub fn from_heights(tuple: &PolytopeTuple, heights: Vec<Vec<i64>>, seed: u64) -> Result<Self> {
        if heights.len() != tuple.ambient_dim() {
            return Err(Error::Dimension {
                expected: tuple.ambient_dim(),
                found: heights.len(),
                context: "lifting polytope count",
            });
        }
        for (h, p) in heights.iter().zip(tuple.polytopes()) {
            if h.len() != p.vertices().len() {
                return Err(Error::Dimension {
                    expected: p.vertices().len(),
                    found: h.len(),
                    context: "lifting vertex count",
                });
            }
        }
        Ok(Self { seed, heights })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn heights(&self, polytope: usize) -> &[i64] {
        &self.heights[polytope]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCell {
    /// One edge `(a_i, b_i)` per polytope, in tuple order.
    pub edges: Vec<(Point, Point)>,
    /// `|det[b_1 - a_1, ..., b_n - a_n]|`, always positive.
    pub cell_volume: Rational,
    /// The certifying inner normal `γ`.
    pub normal: Vec<Rational>,
}

enum Stop {
    NonGeneric,
    Overflow,
}

/// Overflow inside a checked integer step.
fn ovf<T>(v: Option<T>) -> Result<T, Stop> {
    v.ok_or(Stop::Overflow)
}

const CHEAP_LEAVES: usize = 16;

/// The search runs on integer coordinates: the tuple scaled by the common
/// denominator `L` of its vertices. Scaling keeps the lifted cell structure
/// and multiplies each cell volume by `L^n`.
struct Search<T> {
    n: usize,
    verts: Vec<Vec<Vec<T>>>,
    lifts: Vec<Vec<T>>,
    pairs: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone)]
struct Prefix<T> {
    chosen: Vec<(usize, usize)>,
    directions: Vec<Vec<T>>,
    constraints: Vec<IntConstraint<T>>,
}

/// A mixed cell before translating back to the caller's coordinates.
struct RawCell<T> {
    chosen: Vec<(usize, usize)>,
    det: T,
    /// `γ_k = cramer[k] / det` in scaled coordinates.
    cramer: Vec<T>,
}

fn sub_vec<T: ExactInt>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

impl<T: ExactInt> Search<T> {
    fn new(verts: &[Vec<Vec<BigInt>>], lifting: &Lifting) -> Option<Self> {
        let verts: Vec<Vec<Vec<T>>> = verts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|v| v.iter().map(T::from_bigint).collect::<Option<Vec<T>>>())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<_>>()?;
        let lifts = lifting
            .heights
            .iter()
            .map(|h| h.iter().map(|&w| T::from_bigint(&BigInt::from(w))).collect::<Option<Vec<T>>>())
            .collect::<Option<_>>()?;
        let n = verts.len();
        let mut search = Self {
            n,
            verts,
            lifts,
            pairs: Vec::new(),
        };
        // Only lower edges of each lifted polytope can occur in a cell.
        for i in 0..n {
            let m = search.verts[i].len();
            let all: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
            let keep: Vec<Option<bool>> = all
                .par_iter()
                .map(|&pair| {
                    let cs = search.edge_constraints(i, pair)?;
                    Some(lp::phase_one(n, &cs)?.is_some())
                })
                .collect();
            let mut pairs = Vec::new();
            for (pair, k) in all.into_iter().zip(keep) {
                if k? {
                    pairs.push(pair);
                }
            }
            search.pairs.push(pairs);
        }
        Some(search)
    }

    /// Equality for the chosen edge plus non-strict lower-ness of the rest.
    fn edge_constraints(&self, i: usize, (a, b): (usize, usize)) -> Option<Vec<IntConstraint<T>>> {
        let v = &self.verts[i];
        let w = &self.lifts[i];
        let mut out = vec![IntConstraint {
            coeffs: sub_vec(&v[b], &v[a])?,
            relation: Relation::Eq,
            rhs: w[a].sub(&w[b])?,
        }];
        for c in (0..v.len()).filter(|&c| c != a && c != b) {
            out.push(IntConstraint {
                coeffs: sub_vec(&v[c], &v[a])?,
                relation: Relation::Ge,
                rhs: w[a].sub(&w[c])?,
            });
        }
        Some(out)
    }

    fn extend(&self, prefix: &Prefix<T>, pair: (usize, usize)) -> Result<Option<Prefix<T>>, Stop> {
        let i = prefix.chosen.len();
        let v = &self.verts[i];
        let mut directions = prefix.directions.clone();
        directions.push(ovf(sub_vec(&v[pair.1], &v[pair.0]))?);
        let (rank, _) = ovf(int::rank_with_pivots(directions.clone()))?;
        if rank < directions.len() {
            return Ok(None);
        }
        let mut constraints = prefix.constraints.clone();
        constraints.extend(ovf(self.edge_constraints(i, pair))?);
        let mut chosen = prefix.chosen.clone();
        chosen.push(pair);
        Ok(Some(Prefix {
            chosen,
            directions,
            constraints,
        }))
    }

    fn descend(&self, prefix: Prefix<T>, out: &mut Vec<RawCell<T>>) -> Result<(), Stop> {
        let depth = prefix.chosen.len();
        if depth == self.n {
            return self.finish(prefix, out);
        }
        // With few candidates left, the leaf checks are cheaper than an LP.
        let last_is_cheap = depth + 1 == self.n && self.pairs[depth].len() <= CHEAP_LEAVES;
        if depth > 1 && !last_is_cheap && ovf(lp::phase_one(self.n, &prefix.constraints))?.is_none() {
            return Ok(());
        }
        for &pair in &self.pairs[depth] {
            if let Some(next) = self.extend(&prefix, pair)? {
                self.descend(next, out)?;
            }
        }
        Ok(())
    }

    /// `γ` is unique here; solve by Cramer's rule and check every slack.
    fn finish(&self, prefix: Prefix<T>, out: &mut Vec<RawCell<T>>) -> Result<(), Stop> {
        let n = self.n;
        let rhs: Vec<T> = prefix
            .chosen
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| self.lifts[i][a].sub(&self.lifts[i][b]))
            .collect::<Option<_>>()
            .ok_or(Stop::Overflow)?;
        let det = ovf(int::det(prefix.directions.clone()))?;
        let mut cramer = Vec::with_capacity(n);
        for k in 0..n {
            let mut m = prefix.directions.clone();
            for (row, r) in m.iter_mut().zip(&rhs) {
                row[k] = r.clone();
            }
            cramer.push(ovf(int::det(m))?);
        }
        // det * slack(c) = <cramer, c - a> + det * (w(c) - w(a)).
        let mut tie = false;
        for (i, &(a, b)) in prefix.chosen.iter().enumerate() {
            let v = &self.verts[i];
            let w = &self.lifts[i];
            for c in (0..v.len()).filter(|&c| c != a && c != b) {
                let lin = ovf(sub_vec(&v[c], &v[a]).and_then(|d| int::dot(&cramer, &d)))?;
                let scaled = ovf(det.mul(&ovf(w[c].sub(&w[a]))?).and_then(|x| x.add(&lin)))?;
                let sign = scaled.signum() * det.signum();
                if sign < 0 {
                    return Ok(());
                }
                // A tie only matters if the tuple is otherwise a lower cell.
                tie |= sign == 0;
            }
        }
        if tie {
            return Err(Stop::NonGeneric);
        }
        out.push(RawCell {
            chosen: prefix.chosen,
            det,
            cramer,
        });
        Ok(())
    }

    fn run(&self) -> Result<Vec<RawCell<T>>, Stop> {
        let root = Prefix {
            chosen: Vec::new(),
            directions: Vec::new(),
            constraints: Vec::new(),
        };
        let branches: Vec<Result<Vec<RawCell<T>>, Stop>> = self.pairs[0]
            .par_iter()
            .map(|&pair| {
                let mut out = Vec::new();
                if let Some(prefix) = self.extend(&root, pair)? {
                    self.descend(prefix, &mut out)?;
                }
                Ok(out)
            })
            .collect();
        let mut cells = Vec::new();
        for b in branches {
            cells.extend(b?);
        }
        Ok(cells)
    }
}

fn cells_in<T: ExactInt>(scaled: &[Vec<Vec<BigInt>>], lifting: &Lifting) -> Result<Vec<RawCell<BigInt>>, Stop> {
    let search = Search::<T>::new(scaled, lifting).ok_or(Stop::Overflow)?;
    Ok(search
        .run()?
        .into_iter()
        .map(|c| RawCell {
            chosen: c.chosen,
            det: c.det.to_bigint(),
            cramer: c.cramer.iter().map(ExactInt::to_bigint).collect(),
        })
        .collect())
}

/// All mixed cells induced by `lifting`, or a non-generic-lifting error.
pub fn mixed_cells(tuple: &PolytopeTuple, lifting: &Lifting) -> Result<Vec<MixedCell>> {
    let polys = tuple.polytopes();
    let l = rational::common_denominator(polys.iter().flat_map(|p| p.vertices()).flat_map(|v| v.coords()));
    let scaled: Vec<Vec<Vec<BigInt>>> = polys
        .iter()
        .map(|p| {
            p.vertices()
                .iter()
                .map(|v| v.coords().iter().map(|c| c.numer() * (&l / c.denom())).collect())
                .collect()
        })
        .collect();
    let raw = match cells_in::<i128>(&scaled, lifting) {
        Err(Stop::Overflow) => cells_in::<BigInt>(&scaled, lifting),
        r => r,
    };
    let raw = match raw {
        Ok(raw) => raw,
        Err(Stop::NonGeneric) => {
            return Err(Error::NonGenericLifting {
                attempts: 1,
                last_seed: lifting.seed,
            })
        }
        Err(Stop::Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
    };
    let volume_scale = Rational::from_integer(num_traits::pow(l.clone(), tuple.ambient_dim()));
    Ok(raw
        .into_iter()
        .map(|c| MixedCell {
            edges: c
                .chosen
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| (polys[i].vertices()[a].clone(), polys[i].vertices()[b].clone()))
                .collect(),
            cell_volume: Rational::from_integer(c.det.abs()) / &volume_scale,
            normal: c
                .cramer
                .into_iter()
                .map(|g| Rational::new(g * &l, c.det.clone()))
                .collect(),
        })
        .collect())
}

fn derived_seed(seed: u64, attempt: usize) -> u64 {
    seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn mixed_volume_cells(t: &PolytopeTuple, seed: u64) -> Result<Rational> {
    MixedCells::default().mixed_volume(t, seed)
}

#[derive(Debug, Clone, Copy)]
pub struct MixedCells {
    pub retry_cap: usize,
}

impl Default for MixedCells {
    fn default() -> Self {
        Self {
            retry_cap: RETRY_CAP,
        }
    }
}

impl MixedVolumeEngine for MixedCells {
    fn name(&self) -> &'static str {
        "cells"
    }

    fn description(&self) -> &'static str {
        "mixed-cell enumeration under a random integer lifting"
    }

    fn mixed_volume(&self, tuple: &PolytopeTuple, seed: u64) -> Result<Rational> {
        let mut last_seed = seed;
        for attempt in 0..self.retry_cap {
            last_seed = derived_seed(seed, attempt);
            let lifting = Lifting::random(tuple, last_seed);
            match mixed_cells(tuple, &lifting) {
                Ok(cells) => return Ok(cells.into_iter().map(|c| c.cell_volume).sum()),
                Err(Error::NonGenericLifting { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::NonGenericLifting {
            attempts: self.retry_cap,
            last_seed,
        })
    }
}
