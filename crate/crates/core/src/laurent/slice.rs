//! Slicing a polynomial by the height `⟨m, v⟩` and univariate arithmetic along
//! the orthogonal direction `w`. Generic over the coefficient type so that the
//! same code serves numeric polynomials and polynomials whose coefficients are
//! still unknown affine forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::point::{ext_gcd, LatticePoint};

pub(crate) trait Coefficient: Clone {
    fn zero_value() -> Self;
    fn vanishes(&self) -> bool;
    /// `self += s · other`.
    fn add_scaled(&mut self, other: &Self, s: &BigRational);
}

impl Coefficient for BigRational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, s: &BigRational) {
        *self += other * s;
    }
}

/// A univariate Laurent polynomial `Σ coeffs[i] t^{low + i}` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly {
    pub low: i64,
    pub coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn one() -> Self {
        UPoly { low: 0, coeffs: vec![BigRational::one()] }
    }

    /// `(1 + t)^n`.
    pub fn binomial(n: u32) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for _ in 0..n {
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        UPoly { low: 0, coeffs }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly { low: self.low + other.low, coeffs }
    }

    pub fn pow(&self, n: u32) -> UPoly {
        (0..n).fold(UPoly::one(), |acc, _| acc.mul(self))
    }
}

/// Coordinates `m = base(h) + t·w` on the line `⟨m, v⟩ = h`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SliceFrame {
    v: LatticePoint,
    w: LatticePoint,
    z: LatticePoint,
}

impl SliceFrame {
    /// `v` primitive, `w` a primitive generator of `v^⊥`.
    pub fn new(v: LatticePoint, w: LatticePoint) -> Self {
        let (_, s, t) = ext_gcd(v.x, v.y);
        SliceFrame { v, w, z: LatticePoint::new(s, t) }
    }

    pub fn height(&self, m: LatticePoint) -> i64 {
        m.dot(self.v)
    }

    /// Position along `w` of a point at height `h`.
    pub fn position(&self, m: LatticePoint) -> i64 {
        let d = m - self.height(m) * self.z;
        if self.w.x != 0 {
            d.x / self.w.x
        } else {
            d.y / self.w.y
        }
    }

    pub fn point(&self, h: i64, t: i64) -> LatticePoint {
        h * self.z + t * self.w
    }

    /// Groups terms by height; each slice is a sparse map position → coefficient.
    pub fn slices<C: Coefficient>(&self, terms: &BTreeMap<LatticePoint, C>) -> BTreeMap<i64, BTreeMap<i64, C>> {
        let mut out: BTreeMap<i64, BTreeMap<i64, C>> = BTreeMap::new();
        for (m, c) in terms {
            out.entry(self.height(*m)).or_default().insert(self.position(*m), c.clone());
        }
        out
    }
}

fn dense<C: Coefficient>(sparse: &BTreeMap<i64, C>) -> (i64, Vec<C>) {
    let (Some((&lo, _)), Some((&hi, _))) = (sparse.first_key_value(), sparse.last_key_value()) else {
        return (0, Vec::new());
    };
    let mut v = vec![C::zero_value(); (hi - lo + 1) as usize];
    for (t, c) in sparse {
        v[(t - lo) as usize] = c.clone();
    }
    (lo, v)
}

/// `g · f` for a sparse slice `g`.
pub(crate) fn multiply<C: Coefficient>(g: &BTreeMap<i64, C>, f: &UPoly) -> BTreeMap<i64, C> {
    let mut out: BTreeMap<i64, C> = BTreeMap::new();
    for (t, c) in g {
        for (j, a) in f.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out.entry(t + f.low + j as i64).or_insert_with(C::zero_value).add_scaled(c, a);
        }
    }
    out.retain(|_, c| !c.vanishes());
    out
}

/// Laurent division `g / d`: the quotient, and the coefficients of the remainder
/// (all zero iff `d` divides `g`). `d` must be trimmed and nonzero.
pub(crate) fn divide<C: Coefficient>(g: &BTreeMap<i64, C>, d: &UPoly) -> (BTreeMap<i64, C>, Vec<C>) {
    let (glow, mut num) = dense(g);
    let deg = d.coeffs.len() - 1;
    if num.is_empty() {
        return (BTreeMap::new(), Vec::new());
    }
    // t is a unit, so divisibility of Laurent polynomials reduces to ordinary
    // polynomials once the lowest powers are split off
    let inv_lead = BigRational::one() / &d.coeffs[deg];
    let mut quotient: BTreeMap<i64, C> = BTreeMap::new();
    if num.len() > deg {
        for i in (deg..num.len()).rev() {
            let mut q = C::zero_value();
            q.add_scaled(&num[i], &inv_lead);
            if q.vanishes() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let neg = -dc.clone();
                    num[i - deg + j].add_scaled(&q, &neg);
                }
            }
            quotient.insert(glow - d.low + (i - deg) as i64, q);
        }
    }
    num.truncate(deg.min(num.len()));
    (quotient, num)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn binomials() {
        let b = UPoly::binomial(4);
        assert_eq!(b.coeffs, [1, 4, 6, 4, 1].map(r).to_vec());
        assert_eq!(UPoly::binomial(1).pow(3), UPoly::binomial(3));
    }

    #[test]
    fn exact_and_inexact_division() {
        // t^-1 (1+t)^3 / (1+t)^2 = t^-1 + 1
        let g: BTreeMap<i64, BigRational> = [(-1, r(1)), (0, r(3)), (1, r(3)), (2, r(1))].into_iter().collect();
        let (q, rem) = divide(&g, &UPoly::binomial(2));
        assert!(rem.iter().all(Zero::is_zero));
        assert_eq!(q, [(-1, r(1)), (0, r(1))].into_iter().collect());
        let g: BTreeMap<i64, BigRational> = [(1, r(1))].into_iter().collect();
        let (_, rem) = divide(&g, &UPoly::binomial(1));
        assert!(rem.iter().any(|c| !c.vanishes()));
        // divisor with a shifted support: (t^-1 + 1)
        let d = UPoly { low: -1, coeffs: vec![r(1), r(1)] };
        let g: BTreeMap<i64, BigRational> = [(0, r(1)), (1, r(1))].into_iter().collect();
        let (q, rem) = divide(&g, &d);
        assert!(rem.iter().all(Zero::is_zero));
        assert_eq!(q, [(1, r(1))].into_iter().collect());
    }

    #[test]
    fn frame_coordinates() {
        let f = SliceFrame::new(LatticePoint::new(2, 1), LatticePoint::new(-1, 2));
        for m in [LatticePoint::new(3, -4), LatticePoint::new(0, 0), LatticePoint::new(-5, 7)] {
            assert_eq!(f.point(f.height(m), f.position(m)), m);
        }
    }
}
