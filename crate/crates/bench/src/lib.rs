//! Benchmark workloads shared by the criterion targets.

use contact_index::models::{cp_twistor, projectivized_cotangent};
use contact_index::ContactFixedData;

/// Named fixed-point data of increasing size.
pub fn workloads() -> Vec<(&'static str, ContactFixedData)> {
    vec![
        ("cp3", cp_twistor(&[1, 2]).unwrap()),
        ("cp5", cp_twistor(&[1, 3, -5]).unwrap()),
        ("cp7", cp_twistor(&[2, -3, 5, 7]).unwrap()),
        ("flag3", projectivized_cotangent(&[0, 1, 3]).unwrap()),
        (
            "cotangent_cp3",
            projectivized_cotangent(&[0, 2, -3, 7]).unwrap(),
        ),
    ]
}
