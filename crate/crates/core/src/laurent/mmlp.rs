use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::mutation::mutate_terms;
use super::slice::{Coefficient, SliceFrame, UPoly};
use super::LaurentPoly;
use crate::point::LatticePoint;
use crate::polygon::FanoPolygon;

pub const DEFAULT_MMLP_DEPTH: usize = 3;

/// Upper bound on the number of mutated images examined per level.
const FRONTIER_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MmlpError {
    #[error("polygon is not a T-polygon")]
    NotTPolygon,
    #[error("solution is not unique: {dimension} free parameters remain")]
    NonUniqueSolution { dimension: usize },
    #[error("mutability constraints are inconsistent")]
    Inconsistent,
}

/// `constant + Σ coeff_i · c_i` in the unknown interior coefficients `c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct AffineForm {
    constant: BigRational,
    vars: BTreeMap<usize, BigRational>,
}

impl AffineForm {
    fn constant(c: BigRational) -> Self {
        AffineForm { constant: c, vars: BTreeMap::new() }
    }

    fn var(i: usize) -> Self {
        AffineForm { constant: BigRational::zero(), vars: [(i, BigRational::one())].into_iter().collect() }
    }
}

impl Coefficient for AffineForm {
    fn zero_value() -> Self {
        AffineForm::constant(BigRational::zero())
    }

    fn vanishes(&self) -> bool {
        self.constant.is_zero() && self.vars.is_empty()
    }

    fn add_scaled(&mut self, other: &Self, s: &BigRational) {
        if s.is_zero() {
            return;
        }
        self.constant += &other.constant * s;
        for (i, c) in &other.vars {
            let e = self.vars.entry(*i).or_insert_with(BigRational::zero);
            *e += c * s;
            if e.is_zero() {
                self.vars.remove(i);
            }
        }
    }
}

/// Incrementally maintained reduced row echelon form: every pivot variable is
/// expressed through free variables only.
#[derive(Default)]
struct LinearSystem {
    nvars: usize,
    pivots: BTreeMap<usize, AffineForm>,
}

impl LinearSystem {
    fn reduce(&self, f: &AffineForm) -> AffineForm {
        let mut out = AffineForm::constant(f.constant.clone());
        for (i, c) in &f.vars {
            match self.pivots.get(i) {
                Some(expr) => out.add_scaled(expr, c),
                None => out.add_scaled(&AffineForm::var(*i), c),
            }
        }
        out
    }

    /// Imposes `f = 0`.
    fn impose(&mut self, f: &AffineForm) -> Result<(), MmlpError> {
        let r = self.reduce(f);
        let Some((&p, c)) = r.vars.iter().next_back() else {
            return if r.constant.is_zero() { Ok(()) } else { Err(MmlpError::Inconsistent) };
        };
        // p = -(r - c·p) / c
        let scale = -BigRational::one() / c;
        let mut expr = AffineForm::zero_value();
        expr.add_scaled(&r, &scale);
        expr.vars.remove(&p);
        for other in self.pivots.values_mut() {
            if let Some(k) = other.vars.remove(&p) {
                other.add_scaled(&expr, &k);
            }
        }
        self.pivots.insert(p, expr);
        Ok(())
    }

    fn dimension(&self) -> usize {
        self.nvars - self.pivots.len()
    }
}

type AffinePoly = BTreeMap<LatticePoint, AffineForm>;

fn reduce_poly(system: &LinearSystem, g: &AffinePoly) -> AffinePoly {
    g.iter()
        .map(|(e, c)| (*e, system.reduce(c)))
        .filter(|(_, c)| !c.vanishes())
        .collect()
}

/// Coefficients on the lattice points of `p`: binomial along edges, zero at
/// the origin and one unknown per remaining interior point.
fn initial_poly(p: &FanoPolygon) -> (AffinePoly, usize) {
    let edges = p.edges();
    let mut poly = AffinePoly::new();
    let mut nvars = 0;
    for q in p.lattice_points() {
        if q == LatticePoint::ORIGIN {
            continue;
        }
        let on_edge = edges.iter().find(|e| e.normal.dot(q) == -e.height);
        let form = match on_edge {
            Some(e) => {
                let d = q - e.start;
                let t = d.content();
                AffineForm::constant(BigRational::from_integer(binomial(BigInt::from(e.length), BigInt::from(t))))
            }
            None => {
                nvars += 1;
                AffineForm::var(nvars - 1)
            }
        };
        poly.insert(q, form);
    }
    (poly, nvars)
}

/// Remainders of the divisibility conditions along every edge: the slice at
/// height `-j` must be divisible by `(1 + x^w)^{a_E·j}`.
fn edge_constraints(q: &FanoPolygon, g: &AffinePoly) -> Vec<AffineForm> {
    let mut out = Vec::new();
    for e in q.edges() {
        let frame = SliceFrame::new(e.normal, e.direction());
        let m = mutate_terms(g, &frame, &UPoly::binomial(e.t_count as u32));
        out.extend(m.remainders.into_iter().flat_map(|(_, r)| r));
    }
    out
}

/// The normalised maximally mutable Laurent polynomial with Newton polygon `p`.
///
/// Edge coefficients are binomial and the constant term is zero. The interior
/// coefficients are determined by requiring mutability along every edge of
/// `p` and of its mutated images, for mutation sequences of length up to
/// `depth`. Stops as soon as the solution is unique.
pub fn mmlp(p: &FanoPolygon, depth: usize) -> Result<LaurentPoly, MmlpError> {
    if !p.is_t_polygon() {
        return Err(MmlpError::NotTPolygon);
    }
    let (poly, nvars) = initial_poly(p);
    let mut system = LinearSystem { nvars, ..Default::default() };
    let mut frontier: Vec<(FanoPolygon, AffinePoly)> = alloc::vec![(p.clone(), poly.clone())];
    let mut seen: BTreeSet<FanoPolygon> = BTreeSet::new();
    seen.insert(p.normal_form());
    for level in 0..depth.max(1) {
        if level > 0 && system.dimension() == 0 {
            break;
        }
        for (q, g) in &frontier {
            for c in edge_constraints(q, g) {
                system.impose(&c)?;
            }
        }
        if level + 1 >= depth || system.dimension() == 0 {
            continue;
        }
        let mut next = Vec::new();
        'outer: for (q, g) in &frontier {
            let g = reduce_poly(&system, g);
            for m in q.admissible_mutations() {
                if m.w() != m.v().perp() {
                    continue;
                }
                let image = q.mutate(&m).expect("admissible mutation");
                if !seen.insert(image.normal_form()) {
                    continue;
                }
                let frame = SliceFrame::new(m.v(), m.w());
                let mutated = mutate_terms(&g, &frame, &UPoly::binomial(m.k() as u32));
                for (_, rem) in &mutated.remainders {
                    for c in rem {
                        system.impose(c)?;
                    }
                }
                next.push((image, mutated.terms));
                if next.len() >= FRONTIER_CAP {
                    break 'outer;
                }
            }
        }
        frontier = next;
    }
    if system.dimension() > 0 {
        return Err(MmlpError::NonUniqueSolution { dimension: system.dimension() });
    }
    let solved = reduce_poly(&system, &poly);
    Ok(LaurentPoly::from_terms(solved.into_iter().map(|(e, c)| {
        debug_assert!(c.vars.is_empty());
        (e, c.constant)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{parse_laurent, period_coefficients};
    use crate::polygon::polygon;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn no_interior_points() {
        let sq = polygon(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        assert_eq!(mmlp(&sq, 3).unwrap(), parse_laurent("x + y + x^-1 + y^-1").unwrap());
        let hex = polygon(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]).unwrap();
        assert_eq!(mmlp(&hex, 3).unwrap(), parse_laurent("x + x*y + y + x^-1 + x^-1*y^-1 + y^-1").unwrap());
    }

    #[test]
    fn corner_square() {
        let p = polygon(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap();
        let f = mmlp(&p, 3).unwrap();
        for (e, c) in f.terms() {
            let expected = if e.x.abs() == 1 && e.y.abs() == 1 { 1 } else { 2 };
            assert_eq!(*c, r(expected), "{e}");
        }
        assert_eq!(f.constant_term(), r(0));
        let fp = period_coefficients(&f, 3);
        assert_eq!(fp.coefficients, [1, 0, 20, 96].map(r).to_vec());
    }

    #[test]
    fn interior_unknowns_are_solved() {
        let tri = polygon(&[(-1, -1), (2, -1), (-1, 2)]).unwrap();
        let f = mmlp(&tri, 3).unwrap();
        assert!(f.terms().all(|(_, c)| c.is_integer()));
        assert_eq!(f.coefficient((0, 0).into()), r(0));
        let fp = period_coefficients(&f, 4);
        assert_eq!(fp.coefficients, [1, 0, 54, 492, 9882].map(r).to_vec());
    }

    #[test]
    fn rejects_non_t_polygons() {
        let p = polygon(&[(-2, -1), (1, -1), (2, 1), (-2, 1)]).unwrap();
        assert_eq!(mmlp(&p, 3), Err(MmlpError::NotTPolygon));
    }

    #[test]
    fn affine_system() {
        let mut s = LinearSystem { nvars: 2, ..Default::default() };
        // c0 + c1 - 3 = 0, c0 - c1 - 1 = 0
        let mut f = AffineForm::constant(r(-3));
        f.add_scaled(&AffineForm::var(0), &r(1));
        f.add_scaled(&AffineForm::var(1), &r(1));
        s.impose(&f).unwrap();
        assert_eq!(s.dimension(), 1);
        let mut g = AffineForm::constant(r(-1));
        g.add_scaled(&AffineForm::var(0), &r(1));
        g.add_scaled(&AffineForm::var(1), &r(-1));
        s.impose(&g).unwrap();
        assert_eq!(s.dimension(), 0);
        assert_eq!(s.reduce(&AffineForm::var(0)), AffineForm::constant(r(2)));
        assert_eq!(s.reduce(&AffineForm::var(1)), AffineForm::constant(r(1)));
        assert_eq!(s.impose(&AffineForm::constant(r(1))), Err(MmlpError::Inconsistent));
        assert!(s.impose(&f).is_ok());
    }
}
