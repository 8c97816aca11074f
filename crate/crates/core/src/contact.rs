//! Fixed-point data of a circle action on a complex contact manifold.
//!
//! At an isolated fixed point the tangent space splits as `D ⊕ L`. The
//! exponent `h` of `L` equals `(Σ m_i)/(n+1)`, occurs among the tangent
//! weights, and the remaining `2n` weights of `D` pair up as `m + m' = h`
//! because `D ≅ D* ⊗ L`.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::ContactError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub label: String,
    /// Multiset of `2n+1` tangent exponents; order is irrelevant.
    pub tangent_weights: Vec<i64>,
}

impl FixedPoint {
    pub fn new(label: impl Into<String>, tangent_weights: Vec<i64>) -> Self {
        FixedPoint {
            label: label.into(),
            tangent_weights,
        }
    }
}

/// A manifold's circle-action fingerprint: `dim X = 2n + 1` and its isolated
/// fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactFixedData {
    pub name: String,
    pub n: i64,
    pub points: Vec<FixedPoint>,
}

/// Splitting of one fixed point's tangent weights into the contact direction
/// and the pairing on the distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactPointDecomp {
    pub h: i64,
    /// The `2n` weights of `D`, ascending.
    pub d_weights: Vec<i64>,
    /// Involution on indices of `d_weights` with `d[i] + d[sigma[i]] = h`.
    pub sigma: Vec<usize>,
}

impl ContactPointDecomp {
    pub fn n(&self) -> usize {
        self.d_weights.len() / 2
    }
}

/// `(Σ m_i) / (n + 1)`, the exponent of `L` at the point.
pub fn infer_h(pt: &FixedPoint, n: i64) -> Result<i64, ContactError> {
    let sum: i64 = pt.tangent_weights.iter().sum();
    let divisor = n + 1;
    if sum % divisor != 0 {
        return Err(ContactError::NonIntegralH { sum, divisor });
    }
    Ok(sum / divisor)
}

/// Greedy pairing of ascending weights: each weight takes the first free
/// partner `h - w`; a weight equal to `h/2` is its own partner.
fn sigma_pairing(d: &[i64], h: i64) -> Option<Vec<usize>> {
    let mut sigma: Vec<Option<usize>> = vec![None; d.len()];
    for i in 0..d.len() {
        if sigma[i].is_some() {
            continue;
        }
        let want = h - d[i];
        if want == d[i] {
            sigma[i] = Some(i);
            continue;
        }
        let j = (i + 1..d.len()).find(|&j| sigma[j].is_none() && d[j] == want)?;
        sigma[i] = Some(j);
        sigma[j] = Some(i);
    }
    sigma.into_iter().collect()
}

pub fn decompose(pt: &FixedPoint, n: i64) -> Result<ContactPointDecomp, ContactError> {
    if n < 1 {
        return Err(ContactError::InvalidDimension { n });
    }
    let expected = (2 * n + 1) as usize;
    if pt.tangent_weights.len() != expected {
        return Err(ContactError::WrongWeightCount {
            expected,
            found: pt.tangent_weights.len(),
        });
    }
    if pt.tangent_weights.contains(&0) {
        return Err(ContactError::NotIsolated);
    }
    let h = infer_h(pt, n)?;
    if h == 0 {
        return Err(ContactError::ZeroH);
    }
    let mut sorted = pt.tangent_weights.clone();
    sorted.sort_unstable();
    // Every copy of h leaves the same remaining multiset, so the first one
    // is as good as any.
    let pos = sorted
        .iter()
        .position(|&w| w == h)
        .ok_or(ContactError::NoContactWeight { h })?;
    sorted.remove(pos);
    let sigma = sigma_pairing(&sorted, h).ok_or(ContactError::NoSigmaPairing { h })?;
    let sum: i64 = sorted.iter().sum();
    if sum != n * h {
        return Err(ContactError::DistributionSum {
            sum,
            expected: n * h,
        });
    }
    Ok(ContactPointDecomp {
        h,
        d_weights: sorted,
        sigma,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub label: String,
    pub error: ContactError,
}

impl Serialize for Violation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Violation", 3)?;
        s.serialize_field("kind", self.error.kind())?;
        s.serialize_field("label", &self.label)?;
        s.serialize_field("message", &self.error.to_string())?;
        s.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every point; the data is valid iff the report is empty.
pub fn validate(data: &ContactFixedData) -> ValidationReport {
    let mut violations = Vec::new();
    if data.n < 1 {
        violations.push(Violation {
            label: data.name.clone(),
            error: ContactError::InvalidDimension { n: data.n },
        });
        return ValidationReport { violations };
    }
    if data.points.is_empty() {
        violations.push(Violation {
            label: data.name.clone(),
            error: ContactError::NoFixedPoints,
        });
    }
    let per_point: Vec<Option<Violation>> = data
        .points
        .par_iter()
        .map(|pt| {
            decompose(pt, data.n).err().map(|error| Violation {
                label: pt.label.clone(),
                error,
            })
        })
        .collect();
    violations.extend(per_point.into_iter().flatten());
    ValidationReport { violations }
}

/// Decompose every point of already-validated data, in point order.
pub fn decompose_all(data: &ContactFixedData) -> crate::Result<Vec<ContactPointDecomp>> {
    let report = validate(data);
    if !report.is_valid() {
        return Err(crate::Error::ValidationFailed(report));
    }
    data.points
        .iter()
        .map(|pt| {
            decompose(pt, data.n).map_err(|source| crate::Error::Contact {
                label: pt.label.clone(),
                source,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(w: &[i64]) -> FixedPoint {
        FixedPoint::new("p", w.to_vec())
    }

    #[test]
    fn infer_h_examples() {
        assert_eq!(infer_h(&pt(&[1, -2, -3]), 1), Ok(-2));
        assert_eq!(infer_h(&pt(&[3, 4, 1]), 1), Ok(4));
        assert_eq!(
            infer_h(&pt(&[1, 1, 1]), 1),
            Err(ContactError::NonIntegralH { sum: 3, divisor: 2 })
        );
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&pt(&[1, -2, -3]), 1).unwrap();
        assert_eq!(d.h, -2);
        assert_eq!(d.d_weights, vec![-3, 1]);
        assert_eq!(d.sigma, vec![1, 0]);

        let d = decompose(&pt(&[2, 3, -1]), 1).unwrap();
        assert_eq!(d.h, 2);
        assert_eq!(d.d_weights, vec![-1, 3]);
        assert_eq!(d.sigma, vec![1, 0]);

        assert_eq!(
            decompose(&pt(&[1, 1, -4]), 1),
            Err(ContactError::NoContactWeight { h: -1 })
        );
    }

    #[test]
    fn central_weights_are_fixed_by_sigma() {
        // n = 2, h = 4: D = {2, 2, 1, 3}
        let d = decompose(&pt(&[2, 2, 1, 3, 4]), 2).unwrap();
        assert_eq!(d.h, 4);
        assert_eq!(d.d_weights, vec![1, 2, 2, 3]);
        for (i, &j) in d.sigma.iter().enumerate() {
            assert_eq!(d.d_weights[i] + d.d_weights[j], d.h);
            assert_eq!(d.sigma[j], i);
        }
    }

    #[test]
    fn asymmetric_distribution_rejected() {
        // h = 3, D = {1, 1, 1, 3}
        assert_eq!(
            decompose(&pt(&[3, 1, 1, 1, 3]), 2),
            Err(ContactError::NoSigmaPairing { h: 3 })
        );
    }

    #[test]
    fn odd_h_with_unpaired_center_rejected() {
        // n = 1, h = 3: D = {1, 1}; 1 + 1 != 3.
        assert!(decompose(&pt(&[1, 1, 4]), 1).is_err());
    }

    #[test]
    fn zero_weight_is_not_isolated() {
        assert_eq!(
            decompose(&pt(&[0, 2, 2]), 1),
            Err(ContactError::NotIsolated)
        );
    }

    #[test]
    fn wrong_count() {
        assert_eq!(
            decompose(&pt(&[1, 2]), 1),
            Err(ContactError::WrongWeightCount {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn validate_reports_every_bad_point() {
        let data = ContactFixedData {
            name: "t".into(),
            n: 1,
            points: vec![
                FixedPoint::new("good", vec![1, -2, -3]),
                FixedPoint::new("bad", vec![2, -2, -3]),
                FixedPoint::new("flat", vec![0, 1, 1]),
            ],
        };
        let r = validate(&data);
        assert_eq!(r.violations.len(), 2);
        assert_eq!(r.violations[0].label, "bad");
        assert_eq!(r.violations[0].error.kind(), "NonIntegralH");
        assert_eq!(r.violations[1].error, ContactError::NotIsolated);
    }
}
