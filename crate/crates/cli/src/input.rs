//! JSON input schemas.
//!
//! Coordinates and coefficients are JSON strings holding exact rationals
//! (`"3/2"`, `"-4"`) or JSON integers. Floats are rejected.

use std::fmt;

use mixvol::geometry::{convex_hull, Point, PointConfiguration};
use mixvol::laurent::{DirectionVector, LaurentPolynomial, LaurentSystem};
use mixvol::{rational, PolytopeTuple, Rational};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::CliError;

/// An exact rational read from a string or an integer literal.
#[derive(Debug, Clone)]
pub struct Entry(pub Rational);

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"3/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(rational::int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Entry, E> {
                Err(E::custom(format!(
                    "floating-point number {v} is not exact; write it as a string such as \"3/2\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                rational::parse(v).map(Entry).map_err(E::custom)
            }
        }

        d.deserialize_any(V)
    }
}

#[derive(Debug, Deserialize)]
pub struct ConfigurationInput {
    pub points: Vec<Vec<Entry>>,
}

#[derive(Debug, Deserialize)]
pub struct TupleInput {
    pub polytopes: Vec<Vec<Vec<Entry>>>,
}

#[derive(Debug, Deserialize)]
pub struct TermInput {
    pub exp: Vec<i64>,
    pub coef: Entry,
}

#[derive(Debug, Deserialize)]
pub struct PolynomialInput {
    pub terms: Vec<TermInput>,
}

#[derive(Debug, Deserialize)]
pub struct SystemInput {
    pub system: Vec<PolynomialInput>,
    #[serde(default)]
    pub alpha: Option<Vec<Entry>>,
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        message: strip_position(&e.to_string()),
        position: Some((e.line(), e.column())),
    })
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn point(row: &[Entry]) -> Point {
    Point::new(row.iter().map(|e| e.0.clone()).collect())
}

fn configuration(rows: &[Vec<Entry>], what: &str) -> Result<PointConfiguration, CliError> {
    if rows.is_empty() {
        return Err(CliError::Precondition(format!("{what} has no points")));
    }
    PointConfiguration::from_points(rows.iter().map(|r| point(r)).collect()).map_err(CliError::from)
}

impl ConfigurationInput {
    /// Distinct points only; the reduction is stated for distinct points.
    pub fn into_configuration(self) -> Result<PointConfiguration, CliError> {
        let config = configuration(&self.points, "configuration")?;
        if let Some((i, j)) = config.find_duplicate() {
            return Err(CliError::Precondition(format!(
                "points {i} and {j} coincide; inputs must be distinct"
            )));
        }
        Ok(config)
    }
}

impl TupleInput {
    pub fn into_tuple(self) -> Result<PolytopeTuple, CliError> {
        let polys = self
            .polytopes
            .iter()
            .enumerate()
            .map(|(i, rows)| configuration(rows, &format!("polytope {i}")).map(|c| convex_hull(&c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolytopeTuple::new(polys)?)
    }
}

impl SystemInput {
    pub fn to_system(&self) -> Result<LaurentSystem, CliError> {
        let first = self
            .system
            .first()
            .ok_or_else(|| CliError::Precondition("system has no polynomials".into()))?;
        let vars = first
            .terms
            .first()
            .ok_or_else(|| CliError::Precondition("polynomial 0 has no terms".into()))?
            .exp
            .len();
        let polys = self
            .system
            .iter()
            .map(|p| {
                LaurentPolynomial::from_terms(vars, p.terms.iter().map(|t| (t.exp.clone(), t.coef.0.clone())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(i) = polys.iter().position(LaurentPolynomial::is_zero) {
            return Err(CliError::Precondition(format!("polynomial {i} is zero")));
        }
        Ok(LaurentSystem::new(polys)?)
    }

    pub fn alpha(&self) -> Option<DirectionVector> {
        self.alpha
            .as_ref()
            .map(|a| DirectionVector(a.iter().map(|e| e.0.clone()).collect()))
    }
}

/// Comma-separated rationals, e.g. `1,-1/2,0`.
pub fn parse_alpha(text: &str) -> Result<DirectionVector, CliError> {
    text.split(',')
        .map(|s| rational::parse(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map(DirectionVector)
        .map_err(|e| CliError::Parse {
            message: format!("--alpha: {e}"),
            position: None,
        })
}
