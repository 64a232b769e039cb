//! Reference data for the ten mutation classes of T-polygons.

mod builtin;
mod closed_form;
mod validate;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::laurent::{period_coefficients, LaurentPoly, PeriodFingerprint};
use crate::polygon::{FanoPolygon, SingularityContent};

pub use closed_form::{ClosedForm, IndexSpec, LinearForm, SumIndex};
pub use validate::{Discrepancy, EntryReport, ValidationReport};

/// Number of mutation classes of T-polygons.
pub const CLASS_COUNT: usize = 10;

/// Horizon up to which the stored fingerprints are pairwise distinct.
pub const REFERENCE_HORIZON: usize = 8;

/// Smallest fingerprint horizon accepted by [`Catalog::match_period`].
pub const MIN_MATCH_HORIZON: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry with id {0}")]
    UnknownId(u32),
    #[error("catalog must have exactly {CLASS_COUNT} entries, found {0}")]
    EntryCount(usize),
    #[error("duplicate catalog id {0}")]
    DuplicateId(u8),
    #[error("entry {id}: {reason}")]
    InvalidEntry { id: u8, reason: String },
    #[error("invalid closed form: {0}")]
    InvalidClosedForm(String),
    #[error("entries {first} and {second} have equal fingerprints up to t^{REFERENCE_HORIZON}")]
    IndistinctFingerprints { first: u8, second: u8 },
}

/// Invariants of a representative polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryInvariants {
    pub content: SingularityContent,
    pub normal_index: i64,
    pub boundary_points: i64,
}

impl EntryInvariants {
    pub fn of(p: &FanoPolygon) -> Self {
        EntryInvariants {
            content: p.singularity_content(),
            normal_index: p.normal_vector_index(),
            boundary_points: p.boundary_point_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub id: u8,
    pub polygon: FanoPolygon,
    pub mmlp: LaurentPoly,
    /// The expansion as printed, `c_0, c_1, …` with zeros filled in.
    pub printed_sequence: Vec<BigInt>,
    pub closed_form: ClosedForm,
    pub invariants: EntryInvariants,
}

impl ReferenceEntry {
    /// Checks that the polygon is a T-polygon and that `mmlp` is normalized
    /// with Newton polygon `polygon`; the invariants are computed.
    pub fn new(
        id: u8,
        polygon: FanoPolygon,
        mmlp: LaurentPoly,
        printed_sequence: Vec<BigInt>,
        closed_form: ClosedForm,
    ) -> Result<Self, CatalogError> {
        let invalid = |reason: &str| Err(CatalogError::InvalidEntry { id, reason: reason.into() });
        if !(1..=CLASS_COUNT as u8).contains(&id) {
            return Err(CatalogError::UnknownId(id.into()));
        }
        if !polygon.is_t_polygon() {
            return invalid("polygon is not a T-polygon");
        }
        if !mmlp.constant_term().is_zero() {
            return invalid("Laurent polynomial has a nonzero constant term");
        }
        if mmlp.newton_polygon().ok().as_ref() != Some(&polygon) {
            return invalid("Newton polygon of the Laurent polynomial differs from the polygon");
        }
        if polygon.vertices().iter().any(|v| mmlp.coefficient(*v) != BigRational::from_integer(1.into())) {
            return invalid("vertex coefficients must be 1");
        }
        let invariants = EntryInvariants::of(&polygon);
        Ok(ReferenceEntry { id, polygon, mmlp, printed_sequence, closed_form, invariants })
    }
}

/// The ten reference entries, sorted by id, with their fingerprints.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<ReferenceEntry>,
    fingerprints: Vec<PeriodFingerprint>,
}

impl Catalog {
    /// Requires ids `1..=10` exactly once each and pairwise distinct
    /// fingerprints up to [`REFERENCE_HORIZON`].
    pub fn new(mut entries: Vec<ReferenceEntry>) -> Result<Self, CatalogError> {
        if entries.len() != CLASS_COUNT {
            return Err(CatalogError::EntryCount(entries.len()));
        }
        entries.sort_by_key(|e| e.id);
        for pair in entries.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(CatalogError::DuplicateId(pair[0].id));
            }
        }
        let fingerprints: Vec<PeriodFingerprint> =
            entries.iter().map(|e| period_coefficients(&e.mmlp, REFERENCE_HORIZON)).collect();
        for i in 0..fingerprints.len() {
            for j in i + 1..fingerprints.len() {
                if fingerprints[i] == fingerprints[j] {
                    return Err(CatalogError::IndistinctFingerprints { first: entries[i].id, second: entries[j].id });
                }
            }
        }
        Ok(Catalog { entries, fingerprints })
    }

    /// The catalog shipped with the library.
    pub fn builtin() -> Self {
        Catalog::new(builtin::entries()).expect("builtin catalog is valid")
    }

    pub fn entries(&self) -> &[ReferenceEntry] {
        &self.entries
    }

    pub fn entry(&self, id: u32) -> Result<&ReferenceEntry, CatalogError> {
        self.entries.iter().find(|e| u32::from(e.id) == id).ok_or(CatalogError::UnknownId(id))
    }

    /// Oracle fingerprint of entry `id` up to [`REFERENCE_HORIZON`].
    pub fn fingerprint(&self, id: u32) -> Result<&PeriodFingerprint, CatalogError> {
        let i = self.entries.iter().position(|e| u32::from(e.id) == id).ok_or(CatalogError::UnknownId(id))?;
        Ok(&self.fingerprints[i])
    }

    /// Coefficients `t^0 … t^dmax` of the closed form of entry `id`.
    pub fn closed_form_series(&self, id: u32, dmax: usize) -> Result<Vec<BigRational>, CatalogError> {
        self.entry(id)?.closed_form.series(dmax)
    }

    /// The id whose fingerprint agrees with `fp` on the common horizon. `None`
    /// when `fp` is shorter than [`MIN_MATCH_HORIZON`] or matches no entry.
    pub fn match_period(&self, fp: &PeriodFingerprint) -> Option<u8> {
        if fp.horizon() < MIN_MATCH_HORIZON {
            return None;
        }
        let mut hits = self.entries.iter().zip(&self.fingerprints).filter(|(_, r)| fp.agrees_with(&r.coefficients));
        let (entry, _) = hits.next()?;
        hits.next().is_none().then_some(entry.id)
    }

    /// Re-derives every entry and compares it against the stored data.
    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn builtin_has_ten_entries() {
        let c = Catalog::builtin();
        assert_eq!(c.entries().len(), CLASS_COUNT);
        assert_eq!(c.entries().iter().map(|e| e.id).collect::<Vec<_>>(), (1..=10).collect::<Vec<_>>());
        assert!(matches!(c.entry(11), Err(CatalogError::UnknownId(11))));
    }

    #[test]
    fn closed_form_examples() {
        let c = Catalog::builtin();
        assert_eq!(c.closed_form_series(9, 6).unwrap(), ints(&[1, 0, 4, 0, 36, 0, 400]));
        assert_eq!(c.closed_form_series(10, 3).unwrap(), ints(&[1, 0, 0, 6]));
        assert_eq!(c.closed_form_series(8, 5).unwrap(), ints(&[1, 0, 2, 6, 6, 60]));
        assert_eq!(c.closed_form_series(0, 3), Err(CatalogError::UnknownId(0)));
    }

    #[test]
    fn sums_without_prefactor_match_the_oracle() {
        let c = Catalog::builtin();
        for id in 6..=10 {
            let series = c.closed_form_series(id, REFERENCE_HORIZON).unwrap();
            assert_eq!(series, c.fingerprint(id).unwrap().coefficients, "id {id}");
        }
    }

    #[test]
    fn prefactor_forms_disagree_under_the_plain_reading() {
        let c = Catalog::builtin();
        // t^2 coefficients of e^{-ct} times the sum, taken literally
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(c.closed_form_series(3, 2).unwrap()[2], q(72, 1));
        assert_eq!(c.closed_form_series(4, 2).unwrap()[2], q(28, 1));
        assert_eq!(c.closed_form_series(5, 2).unwrap()[2], q(29, 2));
    }

    #[test]
    fn matching() {
        let c = Catalog::builtin();
        let square = parse_laurent("x+y+x^-1+y^-1").unwrap();
        assert_eq!(c.match_period(&period_coefficients(&square, 8)), Some(9));
        let tri = parse_laurent("x+y+x^-1*y^-1").unwrap();
        assert_eq!(c.match_period(&period_coefficients(&tri, 6)), Some(10));
        let mut zeros = vec![BigRational::zero(); 9];
        zeros[0] = BigRational::from_integer(1.into());
        assert_eq!(c.match_period(&PeriodFingerprint { coefficients: zeros }), None);
        assert_eq!(c.match_period(&period_coefficients(&square, 4)), None);
    }

    #[test]
    fn invariants_separate_classes() {
        let c = Catalog::builtin();
        let e = c.entries();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let (a, b) = (&e[i].invariants, &e[j].invariants);
                assert!(a.content != b.content || a.normal_index != b.normal_index, "{} vs {}", e[i].id, e[j].id);
                if a.content == b.content {
                    assert_eq!((e[i].id, e[j].id), (8, 9));
                }
            }
        }
        assert_eq!(e[7].invariants.normal_index, 1);
        assert_eq!(e[8].invariants.normal_index, 2);
        assert_eq!(e[8].invariants.content.t_cones, 4);
        assert!(e[8].invariants.content.basket.is_empty());
    }

    #[test]
    fn entry_checks() {
        let c = Catalog::builtin();
        let e = c.entry(9).unwrap().clone();
        let with_constant = &e.mmlp + &LaurentPoly::one();
        let err = ReferenceEntry::new(9, e.polygon.clone(), with_constant, vec![], e.closed_form.clone());
        assert!(matches!(err, Err(CatalogError::InvalidEntry { id: 9, .. })));
        let other = c.entry(10).unwrap().mmlp.clone();
        assert!(ReferenceEntry::new(9, e.polygon.clone(), other, vec![], e.closed_form.clone()).is_err());
        let mut entries = c.entries().to_vec();
        entries[3].id = 5;
        assert_eq!(Catalog::new(entries.clone()).err(), Some(CatalogError::DuplicateId(5)));
        entries.pop();
        assert_eq!(Catalog::new(entries).err(), Some(CatalogError::EntryCount(9)));
    }
}
