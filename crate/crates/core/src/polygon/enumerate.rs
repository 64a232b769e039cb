use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::FanoPolygon;
use crate::point::LatticePoint;

fn half(p: LatticePoint) -> u8 {
    u8::from(!(p.y > 0 || (p.y == 0 && p.x > 0)))
}

fn by_angle(a: &LatticePoint, b: &LatticePoint) -> Ordering {
    half(*a).cmp(&half(*b)).then_with(|| 0.cmp(&a.cross(*b)))
}

fn turn(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a - o).cross(b - o)
}

/// Every Fano polygon with all vertices in the box `[-bound, bound]²`.
pub fn enumerate_fano_polygons(bound: i64) -> Vec<FanoPolygon> {
    let mut pts: Vec<LatticePoint> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| LatticePoint::new(x, y)))
        .filter(|p| p.is_primitive())
        .collect();
    pts.sort_by(by_angle);
    let mut out = Vec::new();
    let mut seq = Vec::new();
    for i in 0..pts.len() {
        seq.push(i);
        extend(&pts, &mut seq, &mut out);
        seq.pop();
    }
    out
}

// Vertices are chosen in increasing angular order, so each polygon is produced
// exactly once, starting from its first vertex in that order.
fn extend(pts: &[LatticePoint], seq: &mut Vec<usize>, out: &mut Vec<FanoPolygon>) {
    let m = seq.len();
    let last = pts[seq[m - 1]];
    if m >= 3 {
        let first = pts[seq[0]];
        let closes = last.cross(first) > 0
            && turn(pts[seq[m - 2]], last, first) > 0
            && turn(last, first, pts[seq[1]]) > 0;
        if closes {
            let vs: Vec<LatticePoint> = seq.iter().map(|&i| pts[i]).collect();
            if let Ok(p) = FanoPolygon::from_ccw_vertices(&vs) {
                out.push(p);
            }
        }
    }
    for j in seq[m - 1] + 1..pts.len() {
        let p = pts[j];
        if last.cross(p) <= 0 {
            break;
        }
        if m >= 2 && turn(pts[seq[m - 2]], last, p) <= 0 {
            continue;
        }
        seq.push(j);
        extend(pts, seq, out);
        seq.pop();
    }
}

/// Normal forms of all T-polygons whose normal form lies in `[-bound, bound]²`,
/// sorted and without repetition.
pub fn t_polygon_classes_in_box(bound: i64) -> Vec<FanoPolygon> {
    let set: BTreeSet<FanoPolygon> = enumerate_fano_polygons(bound)
        .into_iter()
        .filter(FanoPolygon::is_t_polygon)
        .map(|p| p.normal_form())
        .filter(|nf| nf.max_abs_coordinate() <= bound)
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_box_matches_subset_oracle() {
        let all = enumerate_fano_polygons(1);
        let classes: BTreeSet<FanoPolygon> = all.iter().map(|p| p.normal_form()).collect();
        // oracle: hulls of all subsets of the eight nonzero points of the box
        let ring: Vec<LatticePoint> = (-1..=1)
            .flat_map(|x| (-1..=1).map(move |y| LatticePoint::new(x, y)))
            .filter(|p| *p != LatticePoint::ORIGIN)
            .collect();
        let mut polys = BTreeSet::new();
        let mut oracle = BTreeSet::new();
        for mask in 0u32..256 {
            let pts: Vec<LatticePoint> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| ring[i]).collect();
            if let Ok(p) = super::super::validate_fano(&pts) {
                oracle.insert(p.normal_form());
                polys.insert(p);
            }
        }
        assert_eq!(all.len(), polys.len());
        assert_eq!(classes, oracle);
        for p in &all {
            let interior = p.lattice_points().into_iter().filter(|&q| !p.on_boundary(q)).count();
            assert_eq!(interior, 1);
        }
    }

    #[test]
    fn t_polygon_classes_are_t_polygons_in_normal_form() {
        let t = t_polygon_classes_in_box(2);
        assert!(!t.is_empty());
        for p in &t {
            assert!(p.is_t_polygon());
            assert_eq!(p.normal_form(), *p);
            assert!(p.max_abs_coordinate() <= 2);
        }
    }
}
