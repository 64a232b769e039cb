use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::slice::{divide, multiply, Coefficient, SliceFrame, UPoly};
use super::{LaurentError, LaurentPoly};
use crate::point::LatticePoint;

/// `(1 + x^w)^k`.
pub fn binomial_factor(w: LatticePoint, k: u32) -> LaurentPoly {
    let b = UPoly::binomial(k);
    LaurentPoly::from_terms(b.coeffs.into_iter().enumerate().map(|(i, c)| ((i as i64) * w, c)))
}

/// Result of applying `x^m ↦ x^m F^{⟨m,v⟩}` slice by slice. Heights whose
/// division left a remainder are listed with the remainder coefficients.
pub(crate) struct Mutated<C> {
    pub terms: BTreeMap<LatticePoint, C>,
    pub remainders: Vec<(i64, Vec<C>)>,
}

pub(crate) fn mutate_terms<C: Coefficient>(
    terms: &BTreeMap<LatticePoint, C>,
    frame: &SliceFrame,
    factor: &UPoly,
) -> Mutated<C> {
    let mut out = Mutated { terms: BTreeMap::new(), remainders: Vec::new() };
    for (h, slice) in frame.slices(terms) {
        let power = factor.pow(h.unsigned_abs() as u32);
        let image = if h >= 0 {
            multiply(&slice, &power)
        } else {
            let (q, rem) = divide(&slice, &power);
            if rem.iter().any(|c| !c.vanishes()) {
                out.remainders.push((h, rem));
            }
            q
        };
        for (t, c) in image {
            if !c.vanishes() {
                out.terms.insert(frame.point(h, t), c);
            }
        }
    }
    out
}

/// Algebraic mutation of `f` with respect to the covector `v` and a factor
/// supported on `v^⊥`: every monomial `x^m` is sent to `x^m F^{⟨m,v⟩}`, which
/// must leave a Laurent polynomial.
pub fn algebraic_mutation(f: &LaurentPoly, v: LatticePoint, factor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    if !v.is_primitive() {
        return Err(LaurentError::InvalidFactor("v must be primitive"));
    }
    if factor.is_zero() {
        return Err(LaurentError::InvalidFactor("factor must be nonzero"));
    }
    let w = v.perp();
    let frame = SliceFrame::new(v, w);
    let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
    for (e, c) in factor.terms() {
        if e.dot(v) != 0 {
            return Err(LaurentError::InvalidFactor("factor exponents must be orthogonal to v"));
        }
        coeffs.insert(frame.position(*e), c.clone());
    }
    let (&low, _) = coeffs.first_key_value().expect("nonzero factor");
    let (&high, _) = coeffs.last_key_value().expect("nonzero factor");
    let mut dense = alloc::vec![<BigRational as Coefficient>::zero_value(); (high - low + 1) as usize];
    for (t, c) in coeffs {
        dense[(t - low) as usize] = c;
    }
    let upoly = UPoly { low, coeffs: dense };
    let m = mutate_terms(f.term_map(), &frame, &upoly);
    if let Some((h, _)) = m.remainders.first() {
        return Err(LaurentError::NotMutable { height: *h });
    }
    Ok(LaurentPoly::from_terms(m.terms))
}
