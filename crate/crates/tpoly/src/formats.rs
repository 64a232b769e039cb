//! JSON and text encodings of polygons, Laurent polynomials, lattice vectors
//! and results.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use tpoly_core::laurent::{parse_laurent, LaurentPoly, ParseError, PeriodFingerprint};
use tpoly_core::polygon::{FanoPolygon, MutationData, PathStep, PolygonError};
use tpoly_core::rootlattice::{LatticeVector, RootSublatticeClass};
use tpoly_core::{validate_fano, LatticePoint};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected an even number of integers, found {0}")]
    OddCoordinateCount(usize),
    #[error("cannot read integer '{0}'")]
    BadInteger(String),
    #[error("invalid rational coefficient '{0}'")]
    BadCoefficient(String),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Laurent(#[from] ParseError),
    #[error("lattice vectors must all have the same length")]
    RaggedVectors,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[i64; 2]>,
}

impl From<&FanoPolygon> for PolygonJson {
    fn from(p: &FanoPolygon) -> Self {
        PolygonJson { vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect() }
    }
}

impl PolygonJson {
    /// The polygon spanned by the listed points.
    pub fn to_polygon(&self) -> Result<FanoPolygon, PolygonError> {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&[x, y]| LatticePoint::new(x, y)).collect();
        validate_fano(&pts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: [i64; 2],
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(f: &LaurentPoly) -> Self {
        LaurentJson { terms: f.terms().map(|(e, c)| TermJson { exp: [e.x, e.y], coef: c.to_string() }).collect() }
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::BadCoefficient(text.to_string());
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl LaurentJson {
    pub fn to_laurent(&self) -> Result<LaurentPoly, FormatError> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((LatticePoint::new(t.exp[0], t.exp[1]), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

fn integers(text: &str) -> Result<Vec<i64>, FormatError> {
    text.split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| FormatError::BadInteger(s.to_string())))
        .collect()
}

/// A polygon from JSON (`{"vertices": ...}`) or from text listing integer
/// pairs, such as `(1,0),(0,1),(-1,-1)`.
pub fn read_polygon(text: &str) -> Result<FanoPolygon, FormatError> {
    if text.trim_start().starts_with('{') {
        let json: PolygonJson = serde_json::from_str(text)?;
        return Ok(json.to_polygon()?);
    }
    let ints = integers(text)?;
    if ints.len() % 2 != 0 {
        return Err(FormatError::OddCoordinateCount(ints.len()));
    }
    let pts: Vec<LatticePoint> = ints.chunks(2).map(|c| LatticePoint::new(c[0], c[1])).collect();
    Ok(validate_fano(&pts)?)
}

/// A Laurent polynomial from JSON (`{"terms": ...}`) or from expression text.
pub fn read_laurent(text: &str) -> Result<LaurentPoly, FormatError> {
    if text.trim_start().starts_with('{') {
        let json: LaurentJson = serde_json::from_str(text)?;
        return json.to_laurent();
    }
    Ok(parse_laurent(text.trim())?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComponentsJson {
    Wrapped { components: Vec<Vec<i64>> },
    Bare(Vec<Vec<i64>>),
}

/// Lattice vectors from JSON (an array of integer arrays, optionally under a
/// `components` key) or from text with one vector per line.
pub fn read_lattice_vectors(text: &str) -> Result<Vec<LatticeVector>, FormatError> {
    let trimmed = text.trim_start();
    let rows: Vec<Vec<i64>> = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        match serde_json::from_str(text)? {
            ComponentsJson::Wrapped { components } => components,
            ComponentsJson::Bare(rows) => rows,
        }
    } else {
        text.lines().filter(|l| !l.trim().is_empty()).map(integers).collect::<Result<_, _>>()?
    };
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(FormatError::RaggedVectors);
    }
    Ok(rows.into_iter().map(LatticeVector::new).collect())
}

/// A lattice point given as `a,b` or `(a,b)`.
pub fn read_point(text: &str) -> Result<LatticePoint, FormatError> {
    let ints = integers(text)?;
    match ints.as_slice() {
        [x, y] => Ok(LatticePoint::new(*x, *y)),
        _ => Err(FormatError::OddCoordinateCount(ints.len())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rank: usize,
    pub primitive: bool,
    pub label: String,
}

impl From<&RootSublatticeClass> for ClassJson {
    fn from(c: &RootSublatticeClass) -> Self {
        ClassJson { rank: c.rank, primitive: c.primitive, label: c.label.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationJson {
    pub v: [i64; 2],
    pub w: [i64; 2],
    pub k: i64,
}

impl From<&MutationData> for MutationJson {
    fn from(m: &MutationData) -> Self {
        MutationJson { v: [m.v().x, m.v().y], w: [m.w().x, m.w().y], k: m.k() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStepJson {
    pub source: PolygonJson,
    pub mutation: MutationJson,
    pub target: PolygonJson,
}

impl From<&PathStep> for PathStepJson {
    fn from(s: &PathStep) -> Self {
        PathStepJson {
            source: (&s.source).into(),
            mutation: (&s.mutation).into(),
            target: (&s.target).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintJson {
    pub coefficients: Vec<String>,
}

impl From<&PeriodFingerprint> for FingerprintJson {
    fn from(fp: &PeriodFingerprint) -> Self {
        FingerprintJson { coefficients: fp.coefficients.iter().map(|c| c.to_string()).collect() }
    }
}
