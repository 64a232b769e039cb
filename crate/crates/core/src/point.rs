//! Points of the rank-two lattice and its unimodular transformations.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

/// A point of `ℤ²`. Used both for lattice points of polygons (the lattice `M`)
/// and for covectors such as inward normals (the dual lattice `N`); the pairing
/// between the two is the ordinary dot product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    #[inline]
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Pairing `⟨self, other⟩`.
    #[inline]
    pub fn dot(self, other: Self) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Determinant of the 2×2 matrix with columns `self`, `other`.
    #[inline]
    pub fn cross(self, other: Self) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Non-negative gcd of the coordinates; zero only at the origin.
    #[inline]
    pub fn content(self) -> i64 {
        self.x.gcd(&self.y)
    }

    #[inline]
    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    /// The primitive vector pointing in the same direction. The origin maps to itself.
    pub fn primitive(self) -> Self {
        let g = self.content();
        if g == 0 {
            self
        } else {
            Self::new(self.x / g, self.y / g)
        }
    }

    /// Rotation by a quarter turn counterclockwise. For an edge direction of a
    /// counterclockwise polygon this is the inward normal direction.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn max_abs(self) -> i64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for LatticePoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * rhs.x, self * rhs.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Extended gcd with non-negative gcd: returns `(g, s, t)` with `s·a + t·b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// An integer 2×2 matrix acting on column vectors, `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1, b: 0, c: 0, d: 1 };

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    /// Matrix with the given rows.
    pub fn from_rows(r1: LatticePoint, r2: LatticePoint) -> Self {
        Self::new(r1.x, r1.y, r2.x, r2.y)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    #[inline]
    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det.abs() != 1 {
            return None;
        }
        Some(Mat2::new(self.d * det, -self.b * det, -self.c * det, self.a * det))
    }

    /// Inverse transpose; maps covectors so that pairings are preserved:
    /// `⟨U p, U^{-T} u⟩ = ⟨p, u⟩`.
    pub fn dual(&self) -> Option<Mat2> {
        self.inverse().map(|m| Mat2::new(m.a, m.c, m.b, m.d))
    }
}
