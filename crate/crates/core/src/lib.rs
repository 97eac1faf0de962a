//! Exact computations around nil Hecke algebras, KLR (quiver Hecke)
//! algebras and their cyclotomic quotients, together with the
//! decategorified sl2 models and quiver representation counts they lift.
//!
//! Every structure comes with an independent check: relations are verified
//! through polynomial representations, counts through brute force.

pub mod cyclotomic;
pub mod error;
pub mod exact_poly;
pub mod field;
pub mod klr;
pub mod linalg;
pub mod nilhecke;
pub mod perm;
pub mod poly;
pub mod quiver_orbits;
pub mod report;
pub mod root_data;
pub mod sl2_models;

pub use error::{Error, Result};
pub use exact_poly::{LaurentPoly, Rational, SeriesTrunc};
pub use root_data::{CartanDatum, RootVector, Sequence, Weight};
