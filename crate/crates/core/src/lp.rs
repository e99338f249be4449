//! Exact feasibility for small linear systems over free variables.
//!
//! Phase-one tableau simplex with Bland's rule, which terminates without
//! cycling. Free variables are split as `x = u - w`. Each constraint is
//! scaled to integers and pivoting is fraction-free, first on checked `i128`
//! and on `BigInt` only after an overflow.

use num_bigint::BigInt;
use num_traits::One;

use crate::int::ExactInt;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn eq(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self {
            coeffs,
            relation: Relation::Ge,
            rhs,
        }
    }

    fn holds(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// A constraint with integer data, as consumed by the pivoting core.
#[derive(Debug, Clone)]
pub(crate) struct IntConstraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// Returns a point satisfying every constraint, or `None` if none exists.
pub fn feasible_point(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    let big: Vec<IntConstraint<BigInt>> = constraints
        .iter()
        .map(|c| {
            let l = rational::common_denominator(c.coeffs.iter().chain(std::iter::once(&c.rhs)));
            let int = |q: &Rational| q.numer() * (&l / q.denom());
            IntConstraint {
                coeffs: c.coeffs.iter().map(int).collect(),
                relation: c.relation,
                rhs: int(&c.rhs),
            }
        })
        .collect();
    let small: Option<Vec<IntConstraint<i128>>> = big
        .iter()
        .map(|c| {
            Some(IntConstraint {
                coeffs: c.coeffs.iter().map(i128::from_bigint).collect::<Option<_>>()?,
                relation: c.relation,
                rhs: i128::from_bigint(&c.rhs)?,
            })
        })
        .collect();
    let to_big = |(num, den): (Vec<i128>, i128)| (num.iter().map(ExactInt::to_bigint).collect(), den.to_bigint());
    let solution = small
        .and_then(|s| phase_one(num_vars, &s))
        .map(|r| r.map(to_big))
        .unwrap_or_else(|| phase_one(num_vars, &big).expect("BigInt arithmetic cannot overflow"));
    let (numer, denom): (Vec<BigInt>, BigInt) = solution?;
    let x: Vec<Rational> = numer.into_iter().map(|v| Rational::new(v, denom.clone())).collect();
    debug_assert!(constraints.iter().all(|c| c.holds(&x)));
    Some(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Basic {
    Column(usize),
    /// Artificial variables order after every real column for Bland's rule.
    Artificial(usize),
}

impl Basic {
    fn index(self) -> usize {
        match self {
            Basic::Column(j) | Basic::Artificial(j) => j,
        }
    }
}

/// Phase-one simplex with fraction-free pivoting. The true tableau is
/// `t / denom`, and every entry of `t` stays a minor of the input.
///
/// Outer `None` reports overflow and inner `None` infeasibility; a feasible
/// point comes back as numerators over a common positive denominator.
pub(crate) fn phase_one<T: ExactInt>(
    num_vars: usize,
    constraints: &[IntConstraint<T>],
) -> Option<Option<(Vec<T>, T)>> {
    let one = T::from_bigint(&BigInt::one())?;
    if constraints.is_empty() {
        return Some(Some((vec![T::zero(); num_vars], one)));
    }
    let rows = constraints.len();
    let ge_count = constraints.iter().filter(|c| c.relation == Relation::Ge).count();
    // Columns: u (num_vars), w (num_vars), surplus, rhs.
    let width = 2 * num_vars + ge_count + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<T>> = Vec::with_capacity(rows + 1);
    let mut basis = Vec::with_capacity(rows);
    let mut next_surplus = 2 * num_vars;
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![T::zero(); width];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[num_vars + j] = a.neg()?;
        }
        row[rhs] = c.rhs.clone();
        let mut slot = None;
        if c.relation == Relation::Ge {
            row[next_surplus] = one.neg()?;
            slot = Some(next_surplus);
            next_surplus += 1;
        }
        if row[rhs].signum() > 0 {
            basis.push(Basic::Artificial(width + i));
        } else {
            row = row.iter().map(T::neg).collect::<Option<_>>()?;
            // `s = a.x - rhs` is a valid starting value for a `>=` row.
            basis.push(slot.map_or(Basic::Artificial(width + i), Basic::Column));
        }
        t.push(row);
    }
    // Phase-one objective: the sum of the artificials in non-basic terms.
    let mut obj = vec![T::zero(); width];
    for (row, b) in t.iter().zip(&basis) {
        if matches!(b, Basic::Artificial(_)) {
            for (o, v) in obj.iter_mut().zip(row) {
                *o = o.sub(v)?;
            }
        }
    }
    t.push(obj);

    let mut denom = one;
    while let Some(enter) = (0..rhs).find(|&j| t[rows][j].signum() < 0) {
        let mut leave: Option<usize> = None;
        for i in 0..rows {
            if t[i][enter].signum() <= 0 {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    // t[i][rhs] / t[i][enter] against t[l][rhs] / t[l][enter].
                    let lhs = t[i][rhs].mul(&t[l][enter])?;
                    let cmp = lhs.sub(&t[l][rhs].mul(&t[i][enter])?)?.signum();
                    cmp < 0 || (cmp == 0 && basis[i].index() < basis[l].index())
                }
            };
            if better {
                leave = Some(i);
            }
        }
        // Phase one is bounded below by zero, so some row always blocks.
        let r = leave.expect("phase-one objective unbounded");
        let p = t[r][enter].clone();
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[enter].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = v.mul(&p)?.sub(&f.mul(pv)?)?.div_exact(&denom)?;
            }
        }
        denom = p;
        basis[r] = Basic::Column(enter);
    }
    if !t[rows][rhs].is_zero() {
        return Some(None);
    }
    let mut x = vec![T::zero(); num_vars];
    for (i, b) in basis.iter().enumerate() {
        let Basic::Column(j) = *b else { continue };
        if j < num_vars {
            x[j] = x[j].add(&t[i][rhs])?;
        } else if j < 2 * num_vars {
            x[j - num_vars] = x[j - num_vars].sub(&t[i][rhs])?;
        }
    }
    Some(Some((x, denom)))
}
