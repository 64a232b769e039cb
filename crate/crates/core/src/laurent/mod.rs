//! Laurent polynomials in two variables with exact rational coefficients.

mod equivalence;
mod mmlp;
mod mutation;
mod parse;
mod period;
pub(crate) mod slice;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::point::{LatticePoint, Mat2};
use crate::polygon::{convex_hull, edge_chart, validate_fano, FanoPolygon, PolygonError};

pub use equivalence::{mutation_equivalent_laurent, EquivalenceBounds, LaurentStep};
pub use mmlp::{mmlp, MmlpError, DEFAULT_MMLP_DEPTH};
pub use mutation::{algebraic_mutation, binomial_factor};
pub use parse::{parse_laurent, ParseError};
pub use period::{period_coefficients, PeriodFingerprint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("not mutable: division fails at height {height}")]
    NotMutable { height: i64 },
    #[error("invalid mutation factor: {0}")]
    InvalidFactor(&'static str),
    #[error("Newton polygon: {0}")]
    Newton(#[from] PolygonError),
}

/// A Laurent polynomial `Σ c_m x^m` with `m ∈ ℤ²`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<LatticePoint, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(LatticePoint::ORIGIN, BigRational::one())
    }

    pub fn monomial(exp: LatticePoint, coef: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (LatticePoint, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(terms: &[((i64, i64), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e.into(), BigRational::from_integer(BigInt::from(c)))))
    }

    /// Adds `coef · x^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: LatticePoint, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &BigRational)> {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<LatticePoint, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, exp: LatticePoint) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(LatticePoint::ORIGIN)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn scale(&self, a: &BigRational) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * a)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Monomial change of basis `x^m ↦ x^{U m}`.
    pub fn substitute(&self, u: &Mat2) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (u.apply(*e), c.clone())))
    }

    /// Convex hull of the support, as a Fano polygon.
    pub fn newton_polygon(&self) -> Result<FanoPolygon, PolygonError> {
        validate_fano(&self.support())
    }

    /// A representative of `self` under all monomial changes of basis: two
    /// polynomials agree up to a change of basis iff their canonical forms agree.
    /// `None` if the support does not span the plane.
    pub fn canonical_form(&self) -> Option<Vec<(LatticePoint, BigRational)>> {
        // charts anchored at consecutive nonzero hull vertices are permuted by
        // any change of basis, so the minimum over them is invariant
        let hull: Vec<LatticePoint> =
            convex_hull(&self.support()).into_iter().filter(|p| *p != LatticePoint::ORIGIN).collect();
        let n = hull.len();
        let mut best: Option<Vec<(LatticePoint, BigRational)>> = None;
        for i in 0..n {
            for q in [hull[(i + 1) % n], hull[(i + n - 1) % n]] {
                if hull[i].cross(q) == 0 {
                    continue;
                }
                let image: Vec<_> = self.substitute(&edge_chart(hull[i], q)).terms.into_iter().collect();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
        best
    }
}

/// Newton polygon of `f`.
pub fn newton_polygon(f: &LaurentPoly) -> Result<FanoPolygon, PolygonError> {
    f.newton_polygon()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<LatticePoint, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(*e1 + *e2).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: LatticePoint) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("x", e.x), ("y", e.y)] {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text form: terms in increasing exponent order, e.g.
/// `x^-1*y^-1 + 2*x - 1/3*y`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *e == LatticePoint::ORIGIN {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, *e)?;
            }
        }
        Ok(())
    }
}
