use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::point::LatticePoint;

/// The first coefficients `c_0, …, c_D` of the classical period, `c_d = const(f^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodFingerprint {
    pub coefficients: Vec<BigRational>,
}

impl PeriodFingerprint {
    pub fn horizon(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Coefficients as integers, if they all are.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.coefficients.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Agreement on the common prefix.
    pub fn agrees_with(&self, other: &[BigRational]) -> bool {
        self.coefficients.iter().zip(other).all(|(a, b)| a == b)
    }
}

impl fmt::Display for PeriodFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

type IntPoly = BTreeMap<LatticePoint, BigInt>;

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            *out.entry(*e1 + *e2).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `const(f^d)` for `d = 0..=dmax`.
///
/// The coefficients are cleared of denominators first; then only the powers up
/// to `⌈dmax/2⌉` are formed and `const(f^d)` is read off as the pairing of
/// `f^{⌈d/2⌉}` with `f^{⌊d/2⌋}`.
pub fn period_coefficients(f: &LaurentPoly, dmax: usize) -> PeriodFingerprint {
    let denom = f.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let scaled: IntPoly = f.terms().map(|(e, c)| (*e, (c * &denom).to_integer())).collect();
    let half = dmax.div_ceil(2);
    let mut powers: Vec<IntPoly> = vec![[(LatticePoint::ORIGIN, BigInt::one())].into_iter().collect()];
    for i in 1..=half {
        let next = mul(&powers[i - 1], &scaled);
        powers.push(next);
    }
    let mut coefficients = Vec::with_capacity(dmax + 1);
    let mut denom_power = BigInt::one();
    for d in 0..=dmax {
        let (a, b) = (d.div_ceil(2), d / 2);
        let (small, large) = if powers[a].len() <= powers[b].len() { (&powers[a], &powers[b]) } else { (&powers[b], &powers[a]) };
        let mut c = BigInt::zero();
        for (e, x) in small {
            if let Some(y) = large.get(&-*e) {
                c += x * y;
            }
        }
        coefficients.push(BigRational::new(c, denom_power.clone()));
        denom_power *= &denom;
    }
    PeriodFingerprint { coefficients }
}
