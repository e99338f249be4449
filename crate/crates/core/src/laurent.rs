//! Laurent polynomials over Q, Newton polytopes and root-count bounds.
//!
//! Also builds the two systems that connect volumes to mixed volumes: for an
//! exponent matrix `P = [p_1 ⋯ p_m]` (n x m) and a random rational `A` (n x m),
//!
//! ```text
//! F(x)    = A (x^P)^T                       n polynomials in x_1..x_n
//! G(x, y) = (x^P)^T - K y^T,  A K = 0       m polynomials in x_1..x_n, y_1..y_d
//! ```
//!
//! with `d = m - n`. The Newton polytope of `g_i` is `Δ(p_i)` whenever row `i`
//! of `K` has no zeros.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, normalized_volume, ConvexPolytope, Point, PointConfiguration};
use crate::linalg::{self, Matrix};
use crate::mixed::{MixedVolumeEngine, PolytopeTuple};
use crate::rational::{self, Rational};

pub type Exponent = Vec<i64>;

/// `Σ c_a x^a` with nonzero rational coefficients and integer exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    num_vars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// Sums like terms and drops zero coefficients.
    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(num_vars);
        for (exp, coef) in terms {
            if exp.len() != num_vars {
                return Err(Error::Dimension {
                    expected: num_vars,
                    found: exp.len(),
                    context: "exponent vector",
                });
            }
            out.add_term(exp, coef);
        }
        Ok(out)
    }

    pub fn monomial(exp: Exponent, coef: Rational) -> Self {
        let mut out = Self::zero(exp.len());
        out.add_term(exp, coef);
        out
    }

    fn add_term(&mut self, exp: Exponent, coef: Rational) {
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i64]) -> Option<&Rational> {
        self.terms.get(exp)
    }

    /// Exponents in lexicographic order.
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = LaurentPolynomial::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exp, coef)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&rational::format(coef))?;
            for (v, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{}", v + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// A nonempty list of Laurent polynomials in the same variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSystem {
    polynomials: Vec<LaurentPolynomial>,
}

impl LaurentSystem {
    pub fn new(polynomials: Vec<LaurentPolynomial>) -> Result<Self> {
        let first = polynomials.first().ok_or(Error::Empty("Laurent system"))?;
        let num_vars = first.num_vars();
        if let Some(p) = polynomials.iter().find(|p| p.num_vars() != num_vars) {
            return Err(Error::Dimension {
                expected: num_vars,
                found: p.num_vars(),
                context: "polynomial variable count",
            });
        }
        Ok(Self { polynomials })
    }

    pub fn num_vars(&self) -> usize {
        self.polynomials[0].num_vars()
    }

    pub fn polynomials(&self) -> &[LaurentPolynomial] {
        &self.polynomials
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.len() == self.num_vars()
    }
}

/// Integer n x m matrix given by its columns `p_1, ..., p_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: usize,
    columns: Vec<Exponent>,
}

impl ExponentMatrix {
    pub fn from_columns(columns: Vec<Exponent>) -> Result<Self> {
        let rows = columns.first().ok_or(Error::Empty("exponent matrix"))?.len();
        if let Some(c) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::Dimension {
                expected: rows,
                found: c.len(),
                context: "exponent matrix column",
            });
        }
        Ok(Self { rows, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Exponent] {
        &self.columns
    }

    pub fn to_configuration(&self) -> PointConfiguration {
        let pts = self.columns.iter().map(|c| Point::from_ints(c)).collect();
        PointConfiguration::new(self.rows.max(1), pts).expect("nonempty uniform columns")
    }
}

/// A weight vector `α`; `init_α` keeps the terms minimizing `<α, a>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionVector(pub Vec<Rational>);

impl DirectionVector {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn weight(&self, exp: &[i64]) -> Rational {
        self.0
            .iter()
            .zip(exp)
            .map(|(a, &e)| a * rational::int(e))
            .sum()
    }
}

/// Random coefficient data behind `F` and `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemBuildData {
    /// n x m coefficient matrix of `F`.
    pub a: Matrix,
    /// m x d kernel basis of `a`.
    pub k: Matrix,
    pub seed: u64,
}

impl SystemBuildData {
    /// True when every kernel entry is nonzero, so each `g_i` has all of
    /// `y_1, ..., y_d` in its support.
    pub fn kernel_is_dense(&self) -> bool {
        self.k.iter().flatten().all(|v| !v.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltF {
    pub system: LaurentSystem,
    pub data: SystemBuildData,
}

/// Bound on |numerator| and denominator of random coefficients.
pub const COEFFICIENT_BOUND: i64 = 16;
/// Attempts at drawing a full-rank `A` (or an invertible basis change).
pub const DRAW_CAP: usize = 8;

pub fn newton_polytope(f: &LaurentPolynomial) -> Result<ConvexPolytope> {
    if f.is_zero() {
        return Err(Error::Empty("polynomial has no terms"));
    }
    let pts = f.terms.keys().map(|e| Point::from_ints(e)).collect();
    Ok(convex_hull(&PointConfiguration::new(f.num_vars(), pts)?))
}

fn require_square(system: &LaurentSystem) -> Result<()> {
    if !system.is_square() {
        return Err(Error::Precondition(format!(
            "system must be square: {} polynomials in {} variables",
            system.len(),
            system.num_vars()
        )));
    }
    Ok(())
}

/// `nvol(conv S)` for a square system whose members share the support `S`.
pub fn kushnirenko_bound(system: &LaurentSystem) -> Result<Rational> {
    require_square(system)?;
    let support = system.polynomials[0].support();
    if support.is_empty() {
        return Err(Error::Empty("polynomial has no terms"));
    }
    if system.polynomials.iter().any(|p| p.support() != support) {
        return Err(Error::Precondition(
            "supports differ between polynomials; use the BKK bound instead".into(),
        ));
    }
    let pts = support.iter().map(|e| Point::from_ints(e)).collect();
    Ok(normalized_volume(&PointConfiguration::new(system.num_vars(), pts)?))
}

/// Mixed volume of the Newton polytopes of a square system.
pub fn bkk_bound(system: &LaurentSystem, engine: &dyn MixedVolumeEngine, seed: u64) -> Result<Rational> {
    require_square(system)?;
    let polys = system
        .polynomials
        .iter()
        .map(newton_polytope)
        .collect::<Result<Vec<_>>>()?;
    engine.mixed_volume(&PolytopeTuple::new(polys)?, seed)
}

pub fn initial_form(f: &LaurentPolynomial, alpha: &DirectionVector) -> Result<LaurentPolynomial> {
    if alpha.0.len() != f.num_vars() {
        return Err(Error::Dimension {
            expected: f.num_vars(),
            found: alpha.0.len(),
            context: "direction vector",
        });
    }
    let Some(min) = f.terms.keys().map(|e| alpha.weight(e)).min() else {
        return Ok(f.clone());
    };
    let terms = f
        .terms
        .iter()
        .filter(|(e, _)| alpha.weight(e) == min)
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    Ok(LaurentPolynomial {
        num_vars: f.num_vars,
        terms,
    })
}

pub fn initial_system(system: &LaurentSystem, alpha: &DirectionVector) -> Result<LaurentSystem> {
    let polys = system
        .polynomials
        .iter()
        .map(|f| initial_form(f, alpha))
        .collect::<Result<Vec<_>>>()?;
    LaurentSystem::new(polys)
}

/// Exact null-space basis of a full-row-rank matrix (columns of the result).
pub fn rational_kernel(a: &[Vec<Rational>]) -> Result<Matrix> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if rows == 0 || rows > cols {
        return Err(Error::Precondition(format!(
            "kernel needs a nonempty n x m matrix with n <= m, got {rows} x {cols}"
        )));
    }
    linalg::kernel(a)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-COEFFICIENT_BOUND..=COEFFICIENT_BOUND);
    }
    rational::ratio(num, rng.gen_range(1..=COEFFICIENT_BOUND))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    (0..rows)
        .map(|_| (0..cols).map(|_| random_rational(rng)).collect())
        .collect()
}

/// Draws `A`, forms `F = A (x^P)^T`, and returns `A` with a kernel basis `K`.
///
/// `K` is the echelon kernel basis times a random invertible d x d matrix,
/// redrawn up to [`DRAW_CAP`] times until no entry vanishes. A sparse `K`
/// can still come back; check [`SystemBuildData::kernel_is_dense`].
pub fn build_f(p: &ExponentMatrix, seed: u64) -> Result<BuiltF> {
    let (n, m) = (p.rows(), p.cols());
    if n == 0 || m <= n {
        return Err(Error::Precondition(format!(
            "exponent matrix must be n x m with m > n > 0, got {n} x {m}"
        )));
    }
    let d = m - n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = (0..DRAW_CAP)
        .map(|_| random_matrix(&mut rng, n, m))
        .find(|a| linalg::rank(a) == n)
        .ok_or(Error::RankDeficient { rank: 0, expected: n })?;
    let echelon = rational_kernel(&a)?;
    let mut k = echelon.clone();
    for _ in 0..DRAW_CAP {
        let change = random_matrix(&mut rng, d, d);
        if linalg::det(&change).is_zero() {
            continue;
        }
        k = linalg::mul(&echelon, &change);
        if k.iter().flatten().all(|v| !v.is_zero()) {
            break;
        }
    }

    let polys = a
        .iter()
        .map(|row| {
            LaurentPolynomial::from_terms(
                n,
                p.columns().iter().cloned().zip(row.iter().cloned()),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BuiltF {
        system: LaurentSystem::new(polys)?,
        data: SystemBuildData { a, k, seed },
    })
}

/// `g_i = x^{p_i} - Σ_j K[i][j] y_j` in variables `(x_1..x_n, y_1..y_d)`.
pub fn build_g(p: &ExponentMatrix, data: &SystemBuildData) -> Result<LaurentSystem> {
    let (n, m) = (p.rows(), p.cols());
    if data.k.len() != m {
        return Err(Error::Dimension {
            expected: m,
            found: data.k.len(),
            context: "kernel rows must match the column count of P",
        });
    }
    let d = data.k.first().map_or(0, Vec::len);
    if n + d != m {
        return Err(Error::Dimension {
            expected: m - n,
            found: d,
            context: "kernel width must be m - n",
        });
    }
    let vars = n + d;
    let mut polys = Vec::with_capacity(m);
    for (col, krow) in p.columns().iter().zip(&data.k) {
        if krow.len() != d {
            return Err(Error::Dimension {
                expected: d,
                found: krow.len(),
                context: "kernel row",
            });
        }
        let mut x_exp = col.clone();
        x_exp.resize(vars, 0);
        let mut terms = vec![(x_exp, Rational::one())];
        for (j, kij) in krow.iter().enumerate() {
            let mut y_exp = vec![0; vars];
            y_exp[n + j] = 1;
            terms.push((y_exp, -kij.clone()));
        }
        polys.push(LaurentPolynomial::from_terms(vars, terms)?);
    }
    LaurentSystem::new(polys)
}
