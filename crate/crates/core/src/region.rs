//! The admissible `(p, k)` region for rigidity and vanishing.
//!
//! Exterior powers: `0 ≤ k ≤ n+1-p` for `0 ≤ p ≤ n`, and `n-p ≤ k ≤ 1` for
//! `n+1 ≤ p ≤ 2n`. Symmetric powers (non-negative exponents only):
//! `0 ≤ k ≤ n+1-p` for `0 ≤ p ≤ n`. A cell is interior when both inequalities
//! hold strictly.

use std::fmt::Write as _;

use serde::Serialize;

use crate::characters::Variant;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionStatus {
    /// Strictly inside: the index vanishes.
    Interior,
    /// On the region with an equality: the index is rigid.
    Boundary,
    Outside,
}

impl RegionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionStatus::Interior => "interior",
            RegionStatus::Boundary => "boundary",
            RegionStatus::Outside => "outside",
        }
    }

    pub fn in_region(&self) -> bool {
        !matches!(self, RegionStatus::Outside)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegionCell {
    pub p: i64,
    pub k: i64,
    pub status: RegionStatus,
}

/// Range of `p` the region is defined for.
pub fn p_range(n: i64, variant: Variant) -> std::ops::RangeInclusive<i64> {
    match variant {
        Variant::Exterior => 0..=2 * n,
        Variant::Sym => 0..=n,
    }
}

/// Closed interval of admissible `k` for the given `p`.
pub fn k_interval(n: i64, p: i64, variant: Variant) -> Result<(i64, i64)> {
    if n < 1 || !p_range(n, variant).contains(&p) {
        return Err(Error::OutOfRangeP { n, p });
    }
    Ok(if p <= n { (0, n + 1 - p) } else { (n - p, 1) })
}

pub fn cell_status(n: i64, p: i64, k: i64, variant: Variant) -> Result<RegionStatus> {
    let (lo, hi) = k_interval(n, p, variant)?;
    Ok(if lo < k && k < hi {
        RegionStatus::Interior
    } else if lo <= k && k <= hi {
        RegionStatus::Boundary
    } else {
        RegionStatus::Outside
    })
}

/// All cells for `p` in range and `k` one step beyond the extreme bounds on
/// each side, ordered by `p` then `k`.
pub fn region_grid(n: i64, variant: Variant) -> Result<Vec<RegionCell>> {
    if n < 1 {
        return Err(Error::OutOfRangeP { n, p: 0 });
    }
    let intervals: Vec<(i64, (i64, i64))> = p_range(n, variant)
        .map(|p| k_interval(n, p, variant).map(|iv| (p, iv)))
        .collect::<Result<_>>()?;
    let k_min = intervals.iter().map(|(_, (lo, _))| *lo).min().unwrap() - 1;
    let k_max = intervals.iter().map(|(_, (_, hi))| *hi).max().unwrap() + 1;
    let mut cells = Vec::new();
    for &(p, _) in &intervals {
        for k in k_min..=k_max {
            cells.push(RegionCell {
                p,
                k,
                status: cell_status(n, p, k, variant)?,
            });
        }
    }
    Ok(cells)
}

pub fn grid_csv(cells: &[RegionCell]) -> String {
    let mut out = String::from("p,k,status\n");
    for c in cells {
        writeln!(out, "{},{},{}", c.p, c.k, c.status.as_str()).unwrap();
    }
    out
}

/// Terminal picture: one row per `p` (largest on top), `k` increasing to the
/// right. `#` interior, `+` boundary, `.` outside.
pub fn grid_ascii(cells: &[RegionCell]) -> String {
    let Some(k_min) = cells.iter().map(|c| c.k).min() else {
        return String::new();
    };
    let k_max = cells.iter().map(|c| c.k).max().unwrap();
    let mut ps: Vec<i64> = cells.iter().map(|c| c.p).collect();
    ps.dedup();
    let width = ps.iter().map(|p| p.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for &p in ps.iter().rev() {
        write!(out, "p={p:>width$} ").unwrap();
        for c in cells.iter().filter(|c| c.p == p) {
            out.push(match c.status {
                RegionStatus::Interior => '#',
                RegionStatus::Boundary => '+',
                RegionStatus::Outside => '.',
            });
        }
        out.push('\n');
    }
    writeln!(out, "{:>w$}k={k_min}..{k_max}", "", w = width + 3).unwrap();
    out
}
