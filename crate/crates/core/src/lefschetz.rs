//! Equivariant index via the holomorphic Lefschetz formula at isolated fixed
//! points, rigidity classification, and per-term limit certificates.
//!
//! At a fixed point with tangent exponents `m_1, …, m_{2n+1}` the local
//! contribution of a bundle with character `Σ z^w` is
//! `Σ z^w / Π (1 - z^{-m_i})`. The sum over fixed points is an exact rational
//! function which, for genuine data, reduces to a Laurent polynomial.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{LaurentPoly, RationalFn};
use crate::characters::{char_bundle, BundleSpec, Variant};
use crate::contact::{decompose_all, ContactFixedData, ContactPointDecomp};
use crate::error::{Error, Result};
use crate::region::{cell_status, RegionStatus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// The index is identically zero.
    Vanishing,
    /// The index is the nonzero constant `a₀`.
    RigidNonzero(BigInt),
    NonConstant,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Vanishing => "Vanishing",
            Classification::RigidNonzero(_) => "RigidNonzero",
            Classification::NonConstant => "NonConstant",
        }
    }

    pub fn is_rigid(&self) -> bool {
        !matches!(self, Classification::NonConstant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantIndex {
    pub laurent: LaurentPoly,
    pub classification: Classification,
}

impl EquivariantIndex {
    fn from_laurent(laurent: LaurentPoly) -> Result<Self> {
        if !laurent.is_integral() {
            return Err(Error::NonIntegralCoefficient);
        }
        let classification = if laurent.is_zero() {
            Classification::Vanishing
        } else if laurent.is_constant() {
            Classification::RigidNonzero(laurent.constant_term().to_integer().unwrap())
        } else {
            Classification::NonConstant
        };
        Ok(EquivariantIndex {
            laurent,
            classification,
        })
    }

    /// The constant value when rigid.
    pub fn value(&self) -> Option<BigInt> {
        match &self.classification {
            Classification::Vanishing => Some(BigInt::from(0)),
            Classification::RigidNonzero(v) => Some(v.clone()),
            Classification::NonConstant => None,
        }
    }

    /// Coefficient `a₀` of `z^0`, the multiplicity of the trivial
    /// representation. Equals the ordinary index only when rigid.
    pub fn constant_term(&self) -> BigInt {
        self.laurent.constant_term().to_integer().unwrap()
    }

    /// Value at `z = 1`: the ordinary holomorphic Euler characteristic.
    pub fn at_one(&self) -> BigInt {
        self.laurent
            .terms()
            .map(|(_, c)| c.to_integer().unwrap())
            .sum()
    }
}

/// Local Lefschetz contribution of one fixed point.
pub fn point_term(
    decomp: &ContactPointDecomp,
    spec: &BundleSpec,
    tangent_weights: &[i64],
) -> Result<RationalFn> {
    let chr = char_bundle(decomp, spec)?;
    let num = LaurentPoly::from_exponents(chr.weights());
    let inv_den = RationalFn::lefschetz_denominator(tangent_weights)?;
    Ok(RationalFn::from_laurent(&num).mul(&inv_den))
}

fn index_from_decomps(
    data: &ContactFixedData,
    decomps: &[ContactPointDecomp],
    spec: &BundleSpec,
) -> Result<EquivariantIndex> {
    spec.check(data.n)?;
    let total = decomps
        .par_iter()
        .zip(data.points.par_iter())
        .map(|(d, pt)| point_term(d, spec, &pt.tangent_weights))
        .try_reduce(RationalFn::zero, |a, b| Ok(a.add(&b)))?;
    EquivariantIndex::from_laurent(total.to_laurent()?)
}

/// `χ(X, O(E))_z` for the bundle `E` selected by `spec`.
pub fn equivariant_index(data: &ContactFixedData, spec: &BundleSpec) -> Result<EquivariantIndex> {
    let decomps = decompose_all(data)?;
    index_from_decomps(data, &decomps, spec)
}

// ---------------------------------------------------------------------------
// Limit certificates
// ---------------------------------------------------------------------------

/// Behaviour of one summand `z^w / Π(1 - z^{-m_i})` at `0` and `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermBound {
    pub weight: i64,
    /// How many character terms share this weight.
    pub multiplicity: usize,
    pub ord_at_zero: i64,
    pub deg_at_infinity: i64,
    pub bounded_at_zero: bool,
    pub bounded_at_infinity: bool,
    pub strict_at_zero: bool,
    pub strict_at_infinity: bool,
    /// `|w| ≤ Σ |m_i|`, the coarse per-factor bound.
    pub within_weight_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCertificate {
    pub label: String,
    pub h: i64,
    pub terms: Vec<TermBound>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every term bounded at both ends and all tend to zero at one common end.
    StrictlyVanishing,
    /// Every term bounded at both ends.
    Bounded,
    /// Some term has a pole at `0` or `∞`.
    Unbounded,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::StrictlyVanishing => "StrictlyVanishing",
            Verdict::Bounded => "Bounded",
            Verdict::Unbounded => "Unbounded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitCertificate {
    pub spec: BundleSpec,
    pub points: Vec<PointCertificate>,
    pub verdict: Verdict,
}

fn point_certificate(
    label: &str,
    decomp: &ContactPointDecomp,
    spec: &BundleSpec,
    tangent_weights: &[i64],
) -> Result<PointCertificate> {
    let chr = char_bundle(decomp, spec)?;
    let inv_den = RationalFn::lefschetz_denominator(tangent_weights)?;
    let abs_sum: i64 = tangent_weights.iter().map(|m| m.abs()).sum();
    let mut terms: Vec<TermBound> = Vec::new();
    for &w in chr.weights() {
        if let Some(last) = terms.last_mut() {
            if last.weight == w {
                last.multiplicity += 1;
                continue;
            }
        }
        let (ord, deg) = inv_den.mul_z_pow(w).ord_bounds()?;
        terms.push(TermBound {
            weight: w,
            multiplicity: 1,
            ord_at_zero: ord,
            deg_at_infinity: deg,
            bounded_at_zero: ord >= 0,
            bounded_at_infinity: deg <= 0,
            strict_at_zero: ord > 0,
            strict_at_infinity: deg < 0,
            within_weight_bound: w.abs() <= abs_sum,
        });
    }
    Ok(PointCertificate {
        label: label.to_string(),
        h: decomp.h,
        terms,
    })
}

fn verdict_of(points: &[PointCertificate]) -> Verdict {
    let all = |f: fn(&TermBound) -> bool| points.iter().flat_map(|p| &p.terms).all(f);
    if !all(|t| t.bounded_at_zero && t.bounded_at_infinity) {
        Verdict::Unbounded
    } else if all(|t| t.strict_at_zero) || all(|t| t.strict_at_infinity) {
        Verdict::StrictlyVanishing
    } else {
        Verdict::Bounded
    }
}

fn certificate_from_decomps(
    data: &ContactFixedData,
    decomps: &[ContactPointDecomp],
    spec: &BundleSpec,
) -> Result<LimitCertificate> {
    spec.check(data.n)?;
    let points = decomps
        .iter()
        .zip(&data.points)
        .map(|(d, pt)| point_certificate(&pt.label, d, spec, &pt.tangent_weights))
        .collect::<Result<Vec<_>>>()?;
    let verdict = verdict_of(&points);
    Ok(LimitCertificate {
        spec: *spec,
        points,
        verdict,
    })
}

/// Per-term limit analysis of the Lefschetz sum at `0` and `∞`.
///
/// `Bounded` implies the index is constant; `StrictlyVanishing` implies it is
/// zero.
pub fn certificate(data: &ContactFixedData, spec: &BundleSpec) -> Result<LimitCertificate> {
    let decomps = decompose_all(data)?;
    certificate_from_decomps(data, &decomps, spec)
}

// ---------------------------------------------------------------------------
// Scans
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct ScanCell {
    pub index: EquivariantIndex,
    pub verdict: Verdict,
}

#[derive(Debug)]
pub struct ScanRow {
    pub p: i64,
    pub k: i64,
    /// Position relative to the admissible region; `None` when `p` lies
    /// outside the range the region is defined for.
    pub region: Option<RegionStatus>,
    pub result: Result<ScanCell>,
}

/// Evaluate index and certificate on every `(p, k)` cell, sorted by `p` then
/// `k`. Per-cell failures are recorded in the row.
pub fn scan(
    data: &ContactFixedData,
    p_range: impl IntoIterator<Item = i64>,
    k_range: impl IntoIterator<Item = i64> + Clone,
    variant: Variant,
) -> Result<Vec<ScanRow>> {
    let decomps = decompose_all(data)?;
    let mut cells: Vec<(i64, i64)> = Vec::new();
    for p in p_range {
        for k in k_range.clone() {
            cells.push((p, k));
        }
    }
    cells.sort_unstable();
    cells.dedup();
    Ok(cells
        .into_par_iter()
        .map(|(p, k)| {
            let spec = BundleSpec { variant, p, k };
            let result = index_from_decomps(data, &decomps, &spec).and_then(|index| {
                let cert = certificate_from_decomps(data, &decomps, &spec)?;
                Ok(ScanCell {
                    index,
                    verdict: cert.verdict,
                })
            });
            ScanRow {
                p,
                k,
                region: cell_status(data.n, p, k, variant).ok(),
                result,
            }
        })
        .collect())
}
