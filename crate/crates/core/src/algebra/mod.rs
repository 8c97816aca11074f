//! Exact arithmetic substrate: rationals, Laurent polynomials, rational
//! functions in `z`, and truncated graded polynomial rings.

mod laurent;
mod poly;
mod rat;
mod rational_fn;
pub mod series;
mod trunc;

pub use laurent::LaurentPoly;
pub use poly::ZPoly;
pub use rat::Rat;
pub use rational_fn::RationalFn;
pub use trunc::{TruncElt, TruncRing};

use crate::error::Result;

/// Exact sum of two rational functions.
pub fn rf_add(a: &RationalFn, b: &RationalFn) -> RationalFn {
    a.add(b)
}

pub fn rf_to_laurent(f: &RationalFn) -> Result<LaurentPoly> {
    f.to_laurent()
}

pub fn ord_bounds(f: &RationalFn) -> Result<(i64, i64)> {
    f.ord_bounds()
}

pub fn ring_exp(x: &TruncElt) -> Result<TruncElt> {
    x.exp()
}

pub fn ring_integrate(x: &TruncElt) -> Rat {
    x.integrate()
}
