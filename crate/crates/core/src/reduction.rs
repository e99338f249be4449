//! Volume-to-mixed-volume reduction.
//!
//! For `m > n` distinct points `p_1, ..., p_m ∈ Q^n`, attach to each point the
//! (m-n)-simplex
//!
//! ```text
//! Δ(p) = conv{ p̂, e_{n+1}, ..., e_m } ⊂ R^m,   p̂ = (p, 0, ..., 0)
//! ```
//!
//! Then `nvol(conv{p_1..p_m}) = mvol(Δ(p_1), ..., Δ(p_m))`. This module
//! builds the simplices and checks the identity with any mixed-volume engine.

use crate::error::{Error, Result};
use crate::geometry::{normalized_volume, Point, PointConfiguration, Simplex};
use crate::mixed::{MixedVolumeEngine, PolytopeTuple};
use crate::rational::Rational;

/// `p` padded with zeros up to dimension `m`.
pub fn embed_hat(p: &Point, m: usize) -> Result<Point> {
    if m <= p.dim() {
        return Err(Error::Precondition(format!(
            "target dimension {m} must exceed the point dimension {}",
            p.dim()
        )));
    }
    let mut coords = p.coords().to_vec();
    coords.resize(m, Rational::default());
    Ok(Point::new(coords))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub source: PointConfiguration,
    /// `simplices[i]` has vertices `[p̂_i, e_{n+1}, ..., e_m]` in that order.
    pub simplices: Vec<Simplex>,
    pub hat_points: Vec<Point>,
}

impl ReductionResult {
    /// The simplices as a polytope tuple in R^m.
    pub fn tuple(&self) -> PolytopeTuple {
        PolytopeTuple::new(self.simplices.iter().map(Simplex::to_polytope).collect())
            .expect("m simplices in R^m")
    }
}

fn check_admissible(config: &PointConfiguration) -> Result<()> {
    let (m, n) = (config.len(), config.ambient_dim());
    if m <= n {
        return Err(Error::Precondition(format!(
            "need more points than dimensions (m = {m}, n = {n})"
        )));
    }
    if let Some((first, second)) = config.find_duplicate() {
        return Err(Error::DuplicatePoint { first, second });
    }
    Ok(())
}

pub fn build_simplices(config: &PointConfiguration) -> Result<ReductionResult> {
    check_admissible(config)?;
    let (m, n) = (config.len(), config.ambient_dim());
    let units: Vec<Point> = (n..m).map(|j| Point::unit(m, j)).collect();
    let mut simplices = Vec::with_capacity(m);
    let mut hat_points = Vec::with_capacity(m);
    for p in config.points() {
        let hat = embed_hat(p, m)?;
        let mut verts = Vec::with_capacity(m - n + 1);
        verts.push(hat.clone());
        verts.extend(units.iter().cloned());
        simplices.push(Simplex::new(verts)?);
        hat_points.push(hat);
    }
    Ok(ReductionResult {
        source: config.clone(),
        simplices,
        hat_points,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

/// Computes `nvol(conv(config))` and the mixed volume of the reduced
/// simplices with `engine`, concurrently.
pub fn verify_main_theorem(
    config: &PointConfiguration,
    engine: &dyn MixedVolumeEngine,
    seed: u64,
) -> Result<TheoremCheck> {
    let reduced = build_simplices(config)?;
    let (lhs, rhs) = rayon::join(
        || normalized_volume(config),
        || engine.mixed_volume(&reduced.tuple(), seed),
    );
    let rhs = rhs?;
    Ok(TheoremCheck {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}
