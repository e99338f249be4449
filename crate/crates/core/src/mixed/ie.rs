use num_traits::Zero;

use super::{MixedVolumeEngine, PolytopeTuple};
use crate::error::Result;
use crate::geometry::{minkowski_sum, ConvexPolytope};
use crate::rational::{self, Rational};

/// A subset `S ⊆ {0, ..., n-1}` of tuple slots, i.e. a 0/1 assignment of
/// the scaling parameters λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetSelector(u64);

impl SubsetSelector {
    pub fn new(mask: u64) -> Self {
        Self(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// All nonempty subsets of `{0, ..., n-1}` in increasing mask order.
    pub fn nonempty(n: usize) -> impl Iterator<Item = SubsetSelector> {
        (1..1u64 << n).map(SubsetSelector)
    }
}

/// Polarization: `Σ_{S ≠ ∅} (-1)^{n-|S|} Vol_n(Σ_{i∈S} P_i)`.
///
/// Every subset sum is evaluated, including lower-dimensional ones (which
/// contribute exactly zero). Subset sums are built incrementally from the
/// sum without the highest slot, so each needs one Minkowski sum.
pub fn mixed_volume_ie(t: &PolytopeTuple) -> Rational {
    let n = t.ambient_dim();
    assert!(n < 64, "inclusion-exclusion supports at most 63 slots");
    let polys = t.polytopes();
    let mut sums: Vec<Option<ConvexPolytope>> = vec![None; 1 << n];
    let mut total = Rational::zero();
    for s in SubsetSelector::nonempty(n) {
        let top = 63 - s.mask().leading_zeros() as usize;
        let rest = s.mask() & !(1u64 << top);
        let sum = if rest == 0 {
            polys[top].clone()
        } else {
            let prev = sums[rest as usize].as_ref().expect("smaller masks come first");
            minkowski_sum(prev, &polys[top]).expect("tuple members share a dimension")
        };
        if (n - s.len()).is_multiple_of(2) {
            total += sum.normalized_volume();
        } else {
            total -= sum.normalized_volume();
        }
        sums[s.mask() as usize] = Some(sum);
    }
    total / Rational::from_integer(rational::factorial(n))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InclusionExclusion;

impl MixedVolumeEngine for InclusionExclusion {
    fn name(&self) -> &'static str {
        "ie"
    }

    fn description(&self) -> &'static str {
        "inclusion-exclusion over Minkowski subset sums"
    }

    fn mixed_volume(&self, tuple: &PolytopeTuple, _seed: u64) -> Result<Rational> {
        Ok(mixed_volume_ie(tuple))
    }
}
