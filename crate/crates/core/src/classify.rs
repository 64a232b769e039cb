//! Classification of T-polygons into the catalog's mutation classes.

use alloc::vec::Vec;

use thiserror::Error;

use crate::catalog::{Catalog, EntryInvariants};
use crate::laurent::{mmlp, period_coefficients, LaurentPoly, MmlpError, PeriodFingerprint, DEFAULT_MMLP_DEPTH};
use crate::polygon::{find_mutation_path, FanoPolygon, PathStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("polygon is not a T-polygon")]
    NotTPolygon,
    #[error("horizon must be at least 2")]
    HorizonTooSmall,
    #[error("maximally mutable Laurent polynomial: {0}")]
    Mmlp(MmlpError),
    #[error("period fingerprint {0} matches no catalog entry")]
    NoMatch(PeriodFingerprint),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyBounds {
    /// Number of period coefficients compared, beyond `c_0`.
    pub horizon: usize,
    pub mmlp_depth: usize,
    pub max_nodes: usize,
    /// Mutation steps explored when searching for a witness.
    pub search_depth: usize,
}

impl Default for ClassifyBounds {
    fn default() -> Self {
        ClassifyBounds { horizon: 8, mmlp_depth: DEFAULT_MMLP_DEPTH, max_nodes: 5000, search_depth: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class_id: u8,
    pub invariants: EntryInvariants,
    pub mmlp: LaurentPoly,
    pub fingerprint: PeriodFingerprint,
    /// Mutations from the input to the catalog representative, or `None` if
    /// the search bounds were exhausted first.
    pub witness: Option<Vec<PathStep>>,
}

/// Invariants, maximally mutable polynomial, period fingerprint and catalog
/// match of `p`, confirmed by a bounded mutation search when possible.
///
/// The class id is decided by the fingerprint; a missing witness does not
/// change it.
pub fn classify_polygon(
    p: &FanoPolygon,
    catalog: &Catalog,
    bounds: &ClassifyBounds,
) -> Result<Classification, ClassifyError> {
    if bounds.horizon < 2 {
        return Err(ClassifyError::HorizonTooSmall);
    }
    if !p.is_t_polygon() {
        return Err(ClassifyError::NotTPolygon);
    }
    let invariants = EntryInvariants::of(p);
    let f = mmlp(p, bounds.mmlp_depth).map_err(ClassifyError::Mmlp)?;
    let fingerprint = period_coefficients(&f, bounds.horizon);
    let class_id = catalog.match_period(&fingerprint).ok_or_else(|| ClassifyError::NoMatch(fingerprint.clone()))?;
    let representative = &catalog.entry(class_id.into()).expect("matched id exists").polygon;
    let witness = find_mutation_path(p, representative, bounds.max_nodes, bounds.search_depth);
    Ok(Classification { class_id, invariants, mmlp: f, fingerprint, witness })
}
