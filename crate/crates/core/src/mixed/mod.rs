//! Mixed volumes of polytope tuples.
//!
//! The mixed volume `mvol(P_1, ..., P_n)` is the coefficient of
//! `λ_1 ⋯ λ_n` in the polynomial `Vol_n(λ_1 P_1 + ... + λ_n P_n)`; with this
//! normalization `mvol(P, ..., P) = n! Vol_n(P)`.
//!
//! Several interchangeable engines compute it. Each implements
//! [`MixedVolumeEngine`] and is looked up by name in an [`EngineRegistry`]:
//!
//! | name       | engine                                    |
//! |------------|-------------------------------------------|
//! | `ie`       | [`InclusionExclusion`] (polarization)     |
//! | `cells`    | [`MixedCells`] (random lifting)           |
//! | `segments` | [`SegmentDeterminant`] (segment tuples)   |

mod cells;
mod ie;
mod segments;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::ConvexPolytope;
use crate::rational::Rational;

pub use cells::{mixed_cells, mixed_volume_cells, Lifting, MixedCell, MixedCells, LIFTING_BOUND, RETRY_CAP};
pub use ie::{mixed_volume_ie, InclusionExclusion, SubsetSelector};
pub use segments::{segment_mixed_volume, SegmentDeterminant};

/// An ordered n-tuple of polytopes in R^n.
#[derive(Debug, Clone)]
pub struct PolytopeTuple {
    ambient_dim: usize,
    polytopes: Vec<ConvexPolytope>,
}

impl PolytopeTuple {
    pub fn new(polytopes: Vec<ConvexPolytope>) -> Result<Self> {
        let ambient_dim = polytopes.first().ok_or(Error::Empty("polytope tuple"))?.ambient_dim();
        if polytopes.len() != ambient_dim {
            return Err(Error::Dimension {
                expected: ambient_dim,
                found: polytopes.len(),
                context: "tuple length must equal the ambient dimension",
            });
        }
        if let Some(p) = polytopes.iter().find(|p| p.ambient_dim() != ambient_dim) {
            return Err(Error::Dimension {
                expected: ambient_dim,
                found: p.ambient_dim(),
                context: "polytope in tuple",
            });
        }
        Ok(Self {
            ambient_dim,
            polytopes,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn polytopes(&self) -> &[ConvexPolytope] {
        &self.polytopes
    }

    pub fn into_polytopes(self) -> Vec<ConvexPolytope> {
        self.polytopes
    }
}

/// A strategy for computing mixed volumes.
///
/// `seed` feeds randomized engines; deterministic engines ignore it. For a
/// fixed seed every engine must return the same value on every call.
pub trait MixedVolumeEngine: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn mixed_volume(&self, tuple: &PolytopeTuple, seed: u64) -> Result<Rational>;
}

impl fmt::Debug for dyn MixedVolumeEngine + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedVolumeEngine({})", self.name())
    }
}

/// Name-indexed collection of engines.
pub struct EngineRegistry {
    engines: BTreeMap<&'static str, Box<dyn MixedVolumeEngine>>,
}

impl EngineRegistry {
    pub fn empty() -> Self {
        Self {
            engines: BTreeMap::new(),
        }
    }

    /// Registry holding the built-in engines.
    pub fn new() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(InclusionExclusion));
        r.register(Box::new(MixedCells::default()));
        r.register(Box::new(SegmentDeterminant));
        r
    }

    /// Adds an engine, replacing any engine already registered under its name.
    pub fn register(&mut self, engine: Box<dyn MixedVolumeEngine>) {
        self.engines.insert(engine.name(), engine);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MixedVolumeEngine> {
        self.engines
            .get(name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEngine {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MixedVolumeEngine> {
        self.engines.values().map(|e| e.as_ref())
    }
}

impl Default for EngineRegistry {
    fn default() -> Self {
        Self::new()
    }
}
