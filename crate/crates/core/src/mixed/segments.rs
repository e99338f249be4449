use num_traits::Signed;

use super::{MixedVolumeEngine, PolytopeTuple};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::linalg;
use crate::rational::Rational;

/// `|det[b_1 - a_1, ..., b_n - a_n]|` for n segments `[a_i, b_i]` in R^n.
pub fn segment_mixed_volume(segments: &[(Point, Point)]) -> Result<Rational> {
    let n = segments.len();
    if n == 0 {
        return Err(Error::Empty("segment tuple"));
    }
    let mut rows = Vec::with_capacity(n);
    for (a, b) in segments {
        for p in [a, b] {
            if p.dim() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: p.dim(),
                    context: "segment count must equal the ambient dimension",
                });
            }
        }
        rows.push(b.sub(a).into_coords());
    }
    Ok(linalg::det(&rows).abs())
}

/// Determinant fast path; only accepts tuples whose members have at most two
/// vertices (points count as zero-length segments).
#[derive(Debug, Clone, Copy, Default)]
pub struct SegmentDeterminant;

impl MixedVolumeEngine for SegmentDeterminant {
    fn name(&self) -> &'static str {
        "segments"
    }

    fn description(&self) -> &'static str {
        "determinant of segment directions (segment tuples only)"
    }

    fn mixed_volume(&self, tuple: &PolytopeTuple, _seed: u64) -> Result<Rational> {
        let mut segs = Vec::with_capacity(tuple.ambient_dim());
        for (i, p) in tuple.polytopes().iter().enumerate() {
            match p.vertices() {
                [a] => segs.push((a.clone(), a.clone())),
                [a, b] => segs.push((a.clone(), b.clone())),
                vs => {
                    return Err(Error::Precondition(format!(
                        "polytope {i} has {} vertices; the segments engine needs at most 2",
                        vs.len()
                    )))
                }
            }
        }
        segment_mixed_volume(&segs)
    }
}
