//! Dense exact linear algebra over the rationals. Matrices are row-major
//! `Vec<Vec<Rational>>`; sizes here are tiny, so plain Gaussian elimination.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut d = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d *= &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(m: &[Vec<Rational>]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space of a full-row-rank `rows x cols` matrix,
/// returned as a `cols x (cols - rows)` matrix whose columns are the basis.
///
/// Each basis vector has a 1 at one free column and zeros at the others.
pub fn kernel(a: &[Vec<Rational>]) -> Result<Matrix> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let (r, pivots) = rref(a);
    if pivots.len() != rows {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            expected: rows,
        });
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut k = vec![vec![Rational::zero(); free.len()]; cols];
    for (j, &f) in free.iter().enumerate() {
        k[f][j] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            k[p][j] = -r[i][f].clone();
        }
    }
    Ok(k)
}

pub fn mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Unique solution of a square system, or `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n].clone()).collect())
}
