//! The catalog as a JSON file.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use tpoly_core::catalog::{Catalog, CatalogError, ClosedForm, EntryInvariants, IndexSpec, ReferenceEntry};
use tpoly_core::polygon::RCone;

use crate::formats::{FormatError, LaurentJson, PolygonJson, TermJson};

/// Environment variable naming a catalog file to use instead of the builtin one.
pub const CATALOG_ENV: &str = "TPOLY_CATALOG";

#[derive(Debug, Error)]
pub enum CatalogFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry {id}: {source}")]
    Entry { id: u8, source: FormatError },
    #[error("entry {id}: bad printed coefficient '{text}'")]
    PrintedCoefficient { id: u8, text: String },
    #[error("entry {0}: stored invariants differ from the polygon's")]
    Invariants(u8),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexJson {
    pub name: String,
    #[serde(default)]
    pub lower: Vec<String>,
    #[serde(default)]
    pub upper: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub exp_decay: u32,
    pub indices: Vec<IndexJson>,
    pub power: String,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
}

impl From<&ClosedForm> for ClosedFormJson {
    fn from(cf: &ClosedForm) -> Self {
        let names = cf.index_names();
        let render = |forms: &[tpoly_core::catalog::LinearForm]| forms.iter().map(|f| f.render(&names)).collect();
        ClosedFormJson {
            exp_decay: cf.exp_decay,
            indices: cf
                .indices
                .iter()
                .map(|i| IndexJson {
                    name: i.name.clone(),
                    lower: render(&i.lower),
                    upper: i.upper.as_ref().map(|u| u.render(&names)),
                })
                .collect(),
            power: cf.power.render(&names),
            numerator: render(&cf.numerator),
            denominator: render(&cf.denominator),
        }
    }
}

impl ClosedFormJson {
    pub fn to_closed_form(&self) -> Result<ClosedForm, CatalogError> {
        let lowers: Vec<Vec<&str>> = self.indices.iter().map(|i| i.lower.iter().map(String::as_str).collect()).collect();
        let specs: Vec<IndexSpec<'_>> = self
            .indices
            .iter()
            .zip(&lowers)
            .map(|(i, lower)| IndexSpec { name: &i.name, lower, upper: i.upper.as_deref() })
            .collect();
        let numerator: Vec<&str> = self.numerator.iter().map(String::as_str).collect();
        let denominator: Vec<&str> = self.denominator.iter().map(String::as_str).collect();
        ClosedForm::parse(self.exp_decay, &specs, &self.power, &numerator, &denominator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RConeJson {
    pub residue: i64,
    pub height: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub t_cones: i64,
    pub basket: Vec<RConeJson>,
    pub normal_index: i64,
    pub boundary_points: i64,
}

impl From<&EntryInvariants> for InvariantsJson {
    fn from(inv: &EntryInvariants) -> Self {
        InvariantsJson {
            t_cones: inv.content.t_cones,
            basket: inv.content.basket.iter().map(|c| RConeJson { residue: c.residue, height: c.height }).collect(),
            normal_index: inv.normal_index,
            boundary_points: inv.boundary_points,
        }
    }
}

impl InvariantsJson {
    fn matches(&self, inv: &EntryInvariants) -> bool {
        let basket: Vec<RCone> = self.basket.iter().map(|c| RCone { residue: c.residue, height: c.height }).collect();
        self.t_cones == inv.content.t_cones
            && basket == inv.content.basket
            && self.normal_index == inv.normal_index
            && self.boundary_points == inv.boundary_points
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub id: u8,
    pub polygon: PolygonJson,
    pub terms: Vec<TermJson>,
    pub printed_sequence: Vec<String>,
    pub closed_form: ClosedFormJson,
    /// Checked against the polygon when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsJson>,
}

impl From<&ReferenceEntry> for EntryJson {
    fn from(e: &ReferenceEntry) -> Self {
        EntryJson {
            id: e.id,
            polygon: (&e.polygon).into(),
            terms: LaurentJson::from(&e.mmlp).terms,
            printed_sequence: e.printed_sequence.iter().map(|c| c.to_string()).collect(),
            closed_form: (&e.closed_form).into(),
            invariants: Some((&e.invariants).into()),
        }
    }
}

impl EntryJson {
    pub fn to_entry(&self) -> Result<ReferenceEntry, CatalogFileError> {
        let id = self.id;
        let polygon = self.polygon.to_polygon().map_err(|e| CatalogFileError::Entry { id, source: e.into() })?;
        let mmlp = LaurentJson { terms: self.terms.clone() }.to_laurent().map_err(|source| CatalogFileError::Entry { id, source })?;
        let printed = self
            .printed_sequence
            .iter()
            .map(|t| t.trim().parse::<BigInt>().map_err(|_| CatalogFileError::PrintedCoefficient { id, text: t.clone() }))
            .collect::<Result<Vec<_>, _>>()?;
        let closed_form = self.closed_form.to_closed_form()?;
        let entry = ReferenceEntry::new(id, polygon, mmlp, printed, closed_form)?;
        if self.invariants.as_ref().is_some_and(|inv| !inv.matches(&entry.invariants)) {
            return Err(CatalogFileError::Invariants(id));
        }
        Ok(entry)
    }
}

/// A JSON array with one entry per line.
pub fn catalog_to_json(catalog: &Catalog) -> String {
    let lines: Vec<String> = catalog
        .entries()
        .iter()
        .map(|e| format!("  {}", serde_json::to_string(&EntryJson::from(e)).expect("entry serializes")))
        .collect();
    format!("[\n{}\n]", lines.join(",\n"))
}

pub fn catalog_from_json(text: &str) -> Result<Catalog, CatalogFileError> {
    let entries: Vec<EntryJson> = serde_json::from_str(text)?;
    let entries = entries.iter().map(EntryJson::to_entry).collect::<Result<Vec<_>, _>>()?;
    Ok(Catalog::new(entries)?)
}

pub fn load_catalog_file(path: &Path) -> Result<Catalog, CatalogFileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CatalogFileError::Io { path: path.display().to_string(), source })?;
    catalog_from_json(&text)
}

/// The catalog at `path` if given, else the builtin one.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog, CatalogFileError> {
    match path {
        Some(p) => load_catalog_file(p),
        None => Ok(Catalog::builtin()),
    }
}
