//! Core algorithms for Fano polygons, their mutations, maximally mutable
//! Laurent polynomials, period sequences and the boundary classification in the
//! lattice `I_{1,9}`.
//!
//! The crate is `no_std` and needs only `alloc`; file formats, the catalog file
//! and the command line live in the `tpoly` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod classify;
pub mod intmat;
pub mod laurent;
pub mod point;
pub mod polygon;
pub mod rootlattice;

pub use point::{LatticePoint, Mat2};
pub use polygon::{validate_fano, FanoPolygon, PolygonError};
