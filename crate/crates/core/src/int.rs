//! Integer kernels for the geometric predicates.
//!
//! Geometry runs on integer coordinates (rationals are scaled by a common
//! denominator first). Every routine is generic over [`ExactInt`] so the hot
//! path can use checked `i128` and bail out with `None` on overflow; callers
//! then rerun the same computation on `BigInt`, which never fails.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait ExactInt: Clone + Debug + Send + Sync + Sized {
    fn zero() -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Division known to be exact (Bareiss steps).
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(*rhs)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i8 {
        if Signed::is_negative(self) {
            -1
        } else if Zero::is_zero(self) {
            0
        } else {
            1
        }
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Some(self / rhs)
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub(crate) fn det<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<T> {
    let n = m.len();
    if n == 0 {
        return T::from_bigint(&BigInt::from(1));
    }
    let mut negate = false;
    let mut prev = T::from_bigint(&BigInt::from(1))?;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Some(T::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul(&m[k][k])?;
                let b = m[i][k].mul(&m[k][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Rank of a rectangular matrix together with the pivot columns found by
/// fraction-free row reduction.
pub(crate) fn rank_with_pivots<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<(usize, Vec<usize>)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = T::from_bigint(&BigInt::from(1))?;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let a = m[i][j].mul(&m[r][c])?;
                let b = m[i][c].mul(&m[r][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev)?;
            }
            m[i][c] = T::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Some((r, pivots))
}

pub(crate) fn dot<T: ExactInt>(a: &[T], b: &[T]) -> Option<T> {
    a.iter()
        .zip(b)
        .try_fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)?))
}

/// Runs `f` on checked `i128` data first and on `BigInt` only if that overflows.
pub(crate) fn with_fallback<R>(
    data: &[Vec<BigInt>],
    f_small: impl FnOnce(&[Vec<i128>]) -> Option<R>,
    f_big: impl FnOnce(&[Vec<BigInt>]) -> Option<R>,
) -> R {
    let small: Option<Vec<Vec<i128>>> = data
        .iter()
        .map(|row| row.iter().map(i128::from_bigint).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = f_small(&small) {
            return r;
        }
    }
    f_big(data).expect("BigInt arithmetic cannot overflow")
}
