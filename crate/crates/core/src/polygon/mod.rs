//! Fano polygons: validation, edge data, singularity content, normal forms,
//! mutations and mutation-graph search.

mod enumerate;
mod graph;
mod mutation;
mod normal_form;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::intmat;
use crate::point::{LatticePoint, Mat2};

pub use enumerate::{enumerate_fano_polygons, t_polygon_classes_in_box};
pub use graph::{find_mutation_path, mutation_graph, GraphEdge, MutationGraph, PathStep};
pub use mutation::{mutate_polygon, MutationData};
pub(crate) use normal_form::edge_chart;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("points do not span the plane (convex hull is degenerate)")]
    NotFullDimensional,
    #[error("vertex list is not strictly convex counterclockwise at {point}")]
    NotConvex { point: LatticePoint },
    #[error("origin is not in the strict interior (boundary edge through {point})")]
    OriginNotInterior { point: LatticePoint },
    #[error("vertex {point} is not primitive")]
    NonPrimitiveVertex { point: LatticePoint },
    #[error("invalid mutation data: {0}")]
    InvalidMutation(&'static str),
    #[error("polygon is not mutable: slice at height {height} does not decompose")]
    NotMutable { height: i64 },
}

/// A convex lattice polygon with primitive vertices and the origin in its strict
/// interior. Vertices are stored counterclockwise, starting at the
/// lexicographically smallest one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanoPolygon {
    vertices: Vec<LatticePoint>,
}

/// Data attached to one edge `E`, oriented counterclockwise from `start` to `end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Primitive inward normal `u`.
    pub normal: LatticePoint,
    /// `h_E = -⟨u, E⟩ > 0`.
    pub height: i64,
    /// Lattice length `ℓ_E`.
    pub length: i64,
    /// Number of T-cones, `a_E = ℓ_E div h_E`.
    pub t_count: i64,
    /// Width of the residual R-cone, `m_E = ℓ_E mod h_E`.
    pub residue: i64,
}

impl EdgeData {
    /// Primitive direction of the edge, `(end - start) / ℓ_E`.
    pub fn direction(&self) -> LatticePoint {
        (self.end - self.start).primitive()
    }
}

/// An R-cone, recorded by its residual width and the height of its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RCone {
    pub residue: i64,
    pub height: i64,
}

impl fmt::Display for RCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={},h={})", self.residue, self.height)
    }
}

/// Number of T-cones together with the cyclically ordered basket of R-cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularityContent {
    pub t_cones: i64,
    pub basket: Vec<RCone>,
}

impl SingularityContent {
    /// Equality with the basket compared as a multiset.
    pub fn same_as(&self, other: &SingularityContent) -> bool {
        self.t_cones == other.t_cones && self.sorted_basket() == other.sorted_basket()
    }

    pub fn sorted_basket(&self) -> Vec<RCone> {
        let mut b = self.basket.clone();
        b.sort();
        b
    }
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.t_cones)?;
        for (i, c) in self.basket.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("})")
    }
}

fn turn(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a - o).cross(b - o)
}

/// Strict convex hull, counterclockwise from the lexicographically smallest point.
/// Collinear boundary points are dropped.
pub(crate) fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Builds a [`FanoPolygon`] from an arbitrary finite point set: the convex hull is
/// taken, non-vertex points are dropped and the Fano conditions are checked.
pub fn validate_fano(points: &[LatticePoint]) -> Result<FanoPolygon, PolygonError> {
    if points.len() < 3 {
        return Err(PolygonError::TooFewPoints(points.len()));
    }
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Err(PolygonError::NotFullDimensional);
    }
    FanoPolygon::check(hull)
}

impl FanoPolygon {
    /// Strict constructor for an explicit counterclockwise vertex cycle. Unlike
    /// [`validate_fano`], redundant or reflex points are rejected.
    pub fn from_ccw_vertices(vertices: &[LatticePoint]) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewPoints(n));
        }
        for i in 0..n {
            let (a, b, c) = (vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]);
            if turn(a, b, c) <= 0 {
                return Err(PolygonError::NotConvex { point: b });
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let mut v = vertices.to_vec();
        v.rotate_left(start);
        // a cycle turning left everywhere may still wind more than once
        let hull = convex_hull(&v);
        if let Some(i) = (0..n).find(|&i| hull.get(i) != Some(&v[i])) {
            return Err(PolygonError::NotConvex { point: v[i] });
        }
        Self::check(v)
    }

    fn check(vertices: Vec<LatticePoint>) -> Result<Self, PolygonError> {
        if let Some(&p) = vertices.iter().find(|p| !p.is_primitive()) {
            return Err(PolygonError::NonPrimitiveVertex { point: p });
        }
        let n = vertices.len();
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if turn(a, b, LatticePoint::ORIGIN) <= 0 {
                return Err(PolygonError::OriginNotInterior { point: a });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Image under a unimodular transformation, re-canonicalised.
    ///
    /// # Panics
    /// If `m` is not unimodular.
    pub fn transform(&self, m: &Mat2) -> FanoPolygon {
        assert!(m.is_unimodular(), "transform must be unimodular");
        let mut v: Vec<LatticePoint> = self.vertices.iter().map(|&p| m.apply(p)).collect();
        if m.det() < 0 {
            v.reverse();
        }
        let start = (0..v.len()).min_by_key(|&i| v[i]).unwrap_or(0);
        v.rotate_left(start);
        FanoPolygon { vertices: v }
    }

    pub fn edges(&self) -> Vec<EdgeData> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (start, end) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let d = end - start;
                let length = d.content();
                let normal = d.primitive().perp();
                let height = -normal.dot(start);
                EdgeData {
                    start,
                    end,
                    normal,
                    height,
                    length,
                    t_count: length / height,
                    residue: length % height,
                }
            })
            .collect()
    }

    pub fn singularity_content(&self) -> SingularityContent {
        let edges = self.edges();
        SingularityContent {
            t_cones: edges.iter().map(|e| e.t_count).sum(),
            basket: edges
                .iter()
                .filter(|e| e.residue > 0)
                .map(|e| RCone { residue: e.residue, height: e.height })
                .collect(),
        }
    }

    /// True iff every edge length is divisible by its height.
    pub fn is_t_polygon(&self) -> bool {
        self.edges().iter().all(|e| e.residue == 0)
    }

    /// Index in `ℤ²` of the sublattice spanned by the inward edge normals.
    pub fn normal_vector_index(&self) -> i64 {
        let rows: Vec<Vec<i128>> = self
            .edges()
            .iter()
            .map(|e| alloc::vec![e.normal.x as i128, e.normal.y as i128])
            .collect();
        intmat::saturation_index(&rows) as i64
    }

    /// Number of lattice points on the boundary, `Σ_E ℓ_E`.
    pub fn boundary_point_count(&self) -> i64 {
        self.edges().iter().map(|e| e.length).sum()
    }

    /// True iff `p` lies in the closed polygon.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().iter().all(|e| e.normal.dot(p) >= -e.height)
    }

    /// True iff `p` lies on the boundary.
    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        let edges = self.edges();
        edges.iter().all(|e| e.normal.dot(p) >= -e.height)
            && edges.iter().any(|e| e.normal.dot(p) == -e.height)
    }

    /// All lattice points of the closed polygon, sorted.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let edges = self.edges();
        let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for v in &self.vertices {
            x0 = x0.min(v.x);
            x1 = x1.max(v.x);
            y0 = y0.min(v.y);
            y1 = y1.max(v.y);
        }
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let p = LatticePoint::new(x, y);
                if edges.iter().all(|e| e.normal.dot(p) >= -e.height) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Largest absolute coordinate of a vertex.
    pub fn max_abs_coordinate(&self) -> i64 {
        self.vertices.iter().map(|v| v.max_abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Shorthand used throughout the tests and the catalog.
pub fn polygon(points: &[(i64, i64)]) -> Result<FanoPolygon, PolygonError> {
    let pts: Vec<LatticePoint> = points.iter().map(|&p| p.into()).collect();
    validate_fano(&pts)
}
