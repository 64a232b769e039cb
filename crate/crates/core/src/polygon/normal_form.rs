use alloc::vec::Vec;

use super::FanoPolygon;
use crate::point::{ext_gcd, LatticePoint, Mat2};

/// The unimodular map sending the primitive vector along `p` to `(1, 0)` and
/// `q` to `(b, c)` with `c > 0` and `0 <= b < c`. `p`, `q` must be independent.
pub(crate) fn edge_chart(p: LatticePoint, q: LatticePoint) -> Mat2 {
    let p = p.primitive();
    let (_, s, t) = ext_gcd(p.x, p.y);
    let mut r1 = LatticePoint::new(s, t);
    let mut r2 = LatticePoint::new(-p.y, p.x);
    let mut c = r2.dot(q);
    if c < 0 {
        r2 = -r2;
        c = -c;
    }
    let b = r1.dot(q);
    r1 = r1 - b.div_euclid(c) * r2;
    Mat2::from_rows(r1, r2)
}

impl FanoPolygon {
    /// Canonical representative of the `GL(2, ℤ)` orbit.
    pub fn normal_form(&self) -> FanoPolygon {
        self.normal_form_with_transforms().0
    }

    /// The normal form together with every unimodular map `U` with
    /// `self.transform(U) == normal_form`, sorted. More than one map exists
    /// exactly when the polygon has nontrivial automorphisms.
    pub fn normal_form_with_transforms(&self) -> (FanoPolygon, Vec<Mat2>) {
        let v = &self.vertices;
        let n = v.len();
        let mut best: Option<FanoPolygon> = None;
        let mut maps: Vec<Mat2> = Vec::new();
        for i in 0..n {
            for q in [v[(i + 1) % n], v[(i + n - 1) % n]] {
                let m = edge_chart(v[i], q);
                let image = self.transform(&m);
                match &best {
                    Some(b) if image > *b => {}
                    Some(b) if image == *b => maps.push(m),
                    _ => {
                        best = Some(image);
                        maps.clear();
                        maps.push(m);
                    }
                }
            }
        }
        maps.sort();
        maps.dedup();
        (best.expect("polygon has vertices"), maps)
    }

    /// True iff the two polygons are `GL(2, ℤ)`-equivalent.
    pub fn is_equivalent(&self, other: &FanoPolygon) -> bool {
        self.num_vertices() == other.num_vertices() && self.normal_form() == other.normal_form()
    }
}

#[cfg(test)]
mod tests {
    use super::super::polygon;
    use super::*;

    #[test]
    fn chart_normalises_pair() {
        let p = LatticePoint::new(2, 1);
        let q = LatticePoint::new(-2, 1);
        let m = edge_chart(p, q);
        assert!(m.is_unimodular());
        assert_eq!(m.apply(p), LatticePoint::new(1, 0));
        let img = m.apply(q);
        assert_eq!(img.y, 4);
        assert!((0..4).contains(&img.x));
    }

    #[test]
    fn normal_form_is_orbit_invariant() {
        let p = polygon(&[(-2, -1), (1, -1), (2, 1), (-2, 1)]).unwrap();
        let nf = p.normal_form();
        for m in [Mat2::new(1, 1, 0, 1), Mat2::new(0, 1, 1, 0), Mat2::new(2, 3, 1, 2), Mat2::new(-1, 0, 4, 1)] {
            assert_eq!(p.transform(&m).normal_form(), nf);
        }
        assert_eq!(nf.normal_form(), nf);
    }

    #[test]
    fn transforms_reach_the_normal_form() {
        let sq = polygon(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        let (nf, maps) = sq.normal_form_with_transforms();
        // the square has the dihedral group of order 8 as automorphisms
        assert_eq!(maps.len(), 8);
        for m in maps {
            assert_eq!(sq.transform(&m), nf);
        }
    }

    #[test]
    fn inequivalent_polygons_differ() {
        let sq = polygon(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        let other = polygon(&[(1, 0), (0, 1), (-1, -1), (0, -1)]).unwrap();
        assert!(!sq.is_equivalent(&other));
        let tri = polygon(&[(1, 0), (0, 1), (-1, -1)]).unwrap();
        let tri2 = polygon(&[(1, 1), (-1, 0), (0, -1)]).unwrap();
        assert!(tri.is_equivalent(&tri2));
    }
}
