use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Catalog, EntryInvariants, REFERENCE_HORIZON};
use crate::laurent::{mmlp, period_coefficients, MmlpError, PeriodFingerprint, DEFAULT_MMLP_DEPTH};

/// One disagreement found while re-deriving an entry. Differences between the
/// printed data or closed form and the oracle are expected for some entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    SolverFailed(MmlpError),
    /// The solver returned a polynomial different from the stored one.
    MmlpMismatch,
    NotTPolygon,
    InvariantMismatch,
    PrintedVsOracle { order: usize, printed: BigInt, oracle: BigRational },
    ClosedFormVsOracle { order: usize, closed_form: BigRational, oracle: BigRational },
    ClosedFormInvalid,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::SolverFailed(e) => write!(f, "solver failed: {e}"),
            Discrepancy::MmlpMismatch => f.write_str("re-derived Laurent polynomial differs from the stored one"),
            Discrepancy::NotTPolygon => f.write_str("polygon is not a T-polygon"),
            Discrepancy::InvariantMismatch => f.write_str("stored invariants differ from the recomputed ones"),
            Discrepancy::PrintedVsOracle { order, printed, oracle } => {
                write!(f, "printed t^{order} coefficient {printed} vs oracle {oracle}")
            }
            Discrepancy::ClosedFormVsOracle { order, closed_form, oracle } => {
                write!(f, "closed form t^{order} coefficient {closed_form} vs oracle {oracle}")
            }
            Discrepancy::ClosedFormInvalid => f.write_str("closed form cannot be evaluated"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub id: u8,
    /// Fingerprint of the stored polynomial, the authoritative period data.
    pub oracle: PeriodFingerprint,
    pub is_t_polygon: bool,
    pub invariants: EntryInvariants,
    pub discrepancies: Vec<Discrepancy>,
}

impl EntryReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn printed_agrees(&self) -> bool {
        !self.discrepancies.iter().any(|d| matches!(d, Discrepancy::PrintedVsOracle { .. }))
    }

    pub fn closed_form_agrees(&self) -> bool {
        !self.discrepancies.iter().any(|d| matches!(d, Discrepancy::ClosedFormVsOracle { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: Vec<EntryReport>,
}

impl ValidationReport {
    pub fn entry(&self, id: u8) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// True iff every entry re-derives to the stored data; disagreements with
    /// printed or closed-form series do not count.
    pub fn data_consistent(&self) -> bool {
        self.entries.iter().all(|e| {
            e.discrepancies.iter().all(|d| {
                matches!(d, Discrepancy::PrintedVsOracle { .. } | Discrepancy::ClosedFormVsOracle { .. })
            })
        })
    }
}

pub(super) fn validate(catalog: &Catalog) -> ValidationReport {
    let entries = catalog
        .entries()
        .iter()
        .map(|entry| {
            let mut discrepancies = Vec::new();
            match mmlp(&entry.polygon, DEFAULT_MMLP_DEPTH) {
                Ok(f) if f == entry.mmlp => {}
                Ok(_) => discrepancies.push(Discrepancy::MmlpMismatch),
                Err(e) => discrepancies.push(Discrepancy::SolverFailed(e)),
            }
            let is_t_polygon = entry.polygon.is_t_polygon();
            if !is_t_polygon {
                discrepancies.push(Discrepancy::NotTPolygon);
            }
            let invariants = EntryInvariants::of(&entry.polygon);
            if invariants != entry.invariants {
                discrepancies.push(Discrepancy::InvariantMismatch);
            }
            let horizon = REFERENCE_HORIZON.max(entry.printed_sequence.len().saturating_sub(1));
            let oracle = period_coefficients(&entry.mmlp, horizon);
            for (order, printed) in entry.printed_sequence.iter().enumerate() {
                let value = &oracle.coefficients[order];
                if BigRational::from_integer(printed.clone()) != *value {
                    discrepancies.push(Discrepancy::PrintedVsOracle {
                        order,
                        printed: printed.clone(),
                        oracle: value.clone(),
                    });
                }
            }
            match entry.closed_form.series(horizon) {
                Ok(series) => {
                    for (order, (cf, value)) in series.iter().zip(&oracle.coefficients).enumerate() {
                        if cf != value {
                            discrepancies.push(Discrepancy::ClosedFormVsOracle {
                                order,
                                closed_form: cf.clone(),
                                oracle: value.clone(),
                            });
                        }
                    }
                }
                Err(_) => discrepancies.push(Discrepancy::ClosedFormInvalid),
            }
            EntryReport { id: entry.id, oracle, is_t_polygon, invariants, discrepancies }
        })
        .collect();
    ValidationReport { entries }
}
