//! Exact equivariant holomorphic Euler characteristics of complex contact
//! manifolds with circle actions, computed from fixed-point weight data.
//!
//! The main entry points are [`equivariant_index`], which evaluates the
//! holomorphic Lefschetz formula exactly, and [`certificate`], which explains
//! rigidity term by term through limits at `z = 0` and `z = ∞`. The
//! [`oracle`] module computes the same numbers non-equivariantly from
//! characteristic classes.

pub mod algebra;
pub mod characters;
pub mod contact;
pub mod error;
pub mod lefschetz;
pub mod models;
pub mod oracle;
pub mod region;

pub use algebra::{LaurentPoly, Rat, RationalFn, TruncElt, TruncRing};
pub use characters::{BundleSpec, Character, Variant};
pub use contact::{ContactFixedData, ContactPointDecomp, FixedPoint, ValidationReport};
pub use error::{ContactError, Error, Result};
pub use lefschetz::{
    certificate, equivariant_index, scan, Classification, EquivariantIndex, LimitCertificate,
    ScanRow, Verdict,
};
pub use region::{RegionCell, RegionStatus};
