//! File formats, the catalog file, seeded corpora and the command line for
//! `tpoly-core`.

pub mod catalog_file;
pub mod cli;
pub mod corpus;
pub mod dot;
pub mod formats;
