use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use super::{validate_fano, FanoPolygon, PolygonError};
use crate::point::{ext_gcd, LatticePoint, Mat2};

/// Mutation data `(v, w, k)`: heights are measured by the covector `v`, and the
/// factor is the segment from the origin to `k·w` with `⟨w, v⟩ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MutationData {
    v: LatticePoint,
    w: LatticePoint,
    k: i64,
}

impl MutationData {
    pub fn new(v: LatticePoint, w: LatticePoint, k: i64) -> Result<Self, PolygonError> {
        if !v.is_primitive() {
            return Err(PolygonError::InvalidMutation("v must be primitive"));
        }
        if !w.is_primitive() {
            return Err(PolygonError::InvalidMutation("w must be primitive"));
        }
        if w.dot(v) != 0 {
            return Err(PolygonError::InvalidMutation("w must be orthogonal to v"));
        }
        if k < 1 {
            return Err(PolygonError::InvalidMutation("k must be positive"));
        }
        Ok(Self { v, w, k })
    }

    pub fn v(&self) -> LatticePoint {
        self.v
    }

    pub fn w(&self) -> LatticePoint {
        self.w
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The mutation undoing this one.
    pub fn inverse(&self) -> MutationData {
        MutationData { v: -self.v, w: self.w, k: self.k }
    }

    /// The shear `p ↦ p + ⟨p, v⟩·k·w`.
    pub fn shear(&self) -> Mat2 {
        let (v, kw) = (self.v, self.k * self.w);
        Mat2::new(1 + kw.x * v.x, kw.x * v.y, kw.y * v.x, 1 + kw.y * v.y)
    }

    /// Transport along a unimodular map `U` acting on points.
    pub fn transform(&self, u: &Mat2) -> MutationData {
        let dual = u.dual().expect("transform must be unimodular");
        MutationData { v: dual.apply(self.v), w: u.apply(self.w), k: self.k }
    }
}

impl fmt::Display for MutationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} w={} k={}", self.v, self.w, self.k)
    }
}

/// Endpoints of the slice `P ∩ {⟨x, v⟩ = h}`, written as `α` in `x = α·w + h·z`
/// for a fixed `z` with `⟨z, v⟩ = 1`. `None` if the slice is empty.
fn slice_interval(p: &FanoPolygon, v: LatticePoint, w: LatticePoint, h: i64) -> Option<(Ratio<i64>, Ratio<i64>)> {
    let (_, s, t) = ext_gcd(v.x, v.y);
    let z = LatticePoint::new(s, t);
    let mut lo: Option<Ratio<i64>> = None;
    let mut hi: Option<Ratio<i64>> = None;
    for e in p.edges() {
        // ⟨u, α w + h z⟩ >= -height
        let coef = e.normal.dot(w);
        let rhs = -e.height - h * e.normal.dot(z);
        if coef == 0 {
            if rhs > 0 {
                return None;
            }
        } else {
            let bound = Ratio::new(rhs, coef);
            if coef > 0 {
                lo = Some(lo.map_or(bound, |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound, |u| u.min(bound)));
            }
        }
    }
    let (lo, hi) = (lo?, hi?);
    (lo <= hi).then_some((lo, hi))
}

impl FanoPolygon {
    fn height_range(&self, v: LatticePoint) -> (i64, i64) {
        let hs = self.vertices.iter().map(|&p| p.dot(v));
        let lo = hs.clone().min().unwrap_or(0);
        (lo, hs.max().unwrap_or(0))
    }

    /// Checks that each negative-height slice contains the segment `(-h)·k·w`.
    fn check_mutable(&self, m: &MutationData) -> Result<(), PolygonError> {
        let (hmin, _) = self.height_range(m.v);
        for h in hmin..0 {
            let needed = Ratio::from_integer(-h * m.k);
            match slice_interval(self, m.v, m.w, h) {
                Some((lo, hi)) if hi - lo >= needed => {}
                _ => return Err(PolygonError::NotMutable { height: h }),
            }
        }
        Ok(())
    }

    pub fn is_mutable(&self, m: &MutationData) -> bool {
        self.check_mutable(m).is_ok()
    }

    /// Polygon mutation: negative-height slices lose a `(-h)·k·w` summand at
    /// their `+w` end, non-negative slices gain an `h·k·w` summand.
    pub fn mutate(&self, m: &MutationData) -> Result<FanoPolygon, PolygonError> {
        self.check_mutable(m)?;
        let shear = m.shear();
        let edges = self.edges();
        let n = edges.len();
        let mut points = Vec::with_capacity(2 * n);
        for i in 0..n {
            // vertex i is shared by edges i-1 and i
            let p = edges[i].start;
            let side = [edges[(i + n - 1) % n].normal.dot(m.w), edges[i].normal.dot(m.w)];
            if side.iter().any(|&s| s > 0) {
                points.push(p);
            }
            if side.iter().any(|&s| s < 0) {
                points.push(shear.apply(p));
            }
        }
        Ok(validate_fano(&points).expect("mutation of a Fano polygon must be Fano"))
    }

    /// All mutation data accepted by [`FanoPolygon::mutate`] with `v` among the
    /// inward edge normals and their negatives.
    pub fn admissible_mutations(&self) -> Vec<MutationData> {
        let edges = self.edges();
        let mut candidates: Vec<LatticePoint> = edges.iter().flat_map(|e| [e.normal, -e.normal]).collect();
        candidates.sort();
        candidates.dedup();
        let mut out = Vec::new();
        for v in candidates {
            let Some(base) = edges.iter().find(|e| e.normal == v) else {
                continue;
            };
            for w in [v.perp(), -v.perp()] {
                for k in 1..=base.t_count {
                    let m = MutationData { v, w, k };
                    if !self.is_mutable(&m) {
                        break;
                    }
                    out.push(m);
                }
            }
        }
        out
    }
}

/// Functional form of [`FanoPolygon::mutate`].
pub fn mutate_polygon(p: &FanoPolygon, m: &MutationData) -> Result<FanoPolygon, PolygonError> {
    p.mutate(m)
}
