//! Fixed-point data generators for the two standard families, plus fixture
//! loading.
//!
//! Weight recipes are differences of linear-action weights; the contact
//! validator checks every generated point, so a recipe error surfaces as a
//! validation failure rather than a silently wrong index.

use std::collections::HashSet;
use std::path::Path;

use crate::contact::{validate, ContactFixedData, FixedPoint};
use crate::error::{Error, Result};

fn require_distinct(weights: &[i64], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for &w in weights {
        if !seen.insert(w) {
            return Err(Error::DegenerateWeights(format!(
                "{what} {weights:?} repeat {w}"
            )));
        }
    }
    Ok(())
}

fn join(weights: &[i64]) -> String {
    weights
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `CP^{2n+1}` as the twistor space of `HP^n`, with the circle acting
/// through `(a_0, …, a_n)` on the quaternionic coordinates.
///
/// The signed weights `±a_i` label the `2n+2` fixed points; the point over
/// `w` has tangent weights `{ w' - w : w' ≠ w }`.
pub fn cp_twistor(a: &[i64]) -> Result<ContactFixedData> {
    if a.len() < 2 {
        return Err(Error::DegenerateWeights(
            "need at least two weights (n >= 1)".into(),
        ));
    }
    let n = a.len() as i64 - 1;
    let signed: Vec<i64> = a.iter().copied().chain(a.iter().map(|x| -x)).collect();
    require_distinct(&signed, "signed weights")?;
    let points = signed
        .iter()
        .map(|&w| {
            let tangent = signed.iter().filter(|&&v| v != w).map(|&v| v - w).collect();
            FixedPoint::new(format!("w={w}"), tangent)
        })
        .collect();
    Ok(ContactFixedData {
        name: format!("cp_twistor({})", join(a)),
        n,
        points,
    })
}

/// `P(T* CP^m)` with the circle acting on `CP^m` through weights
/// `(b_0, …, b_m)`; here `n = m - 1`.
///
/// Fixed points are ordered pairs `(i, j)`, `i ≠ j`: the base point `e_i`
/// together with the cotangent line dual to the direction `e_j`.
pub fn projectivized_cotangent(b: &[i64]) -> Result<ContactFixedData> {
    if b.len() < 3 {
        return Err(Error::DegenerateWeights(
            "need at least three weights (m >= 2)".into(),
        ));
    }
    require_distinct(b, "weights")?;
    let m = b.len();
    let mut points = Vec::with_capacity(m * (m - 1));
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let base = (0..m).filter(|&l| l != i).map(|l| b[l] - b[i]);
            let fiber = (0..m).filter(|&k| k != i && k != j).map(|k| b[j] - b[k]);
            points.push(FixedPoint::new(
                format!("({i},{j})"),
                base.chain(fiber).collect(),
            ));
        }
    }
    Ok(ContactFixedData {
        name: format!("projectivized_cotangent({})", join(b)),
        n: m as i64 - 2,
        points,
    })
}

/// Parse fixture JSON and validate it.
pub fn parse_fixture(text: &str) -> Result<ContactFixedData> {
    let data: ContactFixedData =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let report = validate(&data);
    if !report.is_valid() {
        return Err(Error::ValidationFailed(report));
    }
    Ok(data)
}

pub fn load_fixture(path: impl AsRef<Path>) -> Result<ContactFixedData> {
    parse_fixture(&std::fs::read_to_string(path)?)
}

/// Serialize in the fixture schema.
pub fn to_fixture_json(data: &ContactFixedData) -> String {
    serde_json::to_string_pretty(data).expect("fixture data serializes")
}
