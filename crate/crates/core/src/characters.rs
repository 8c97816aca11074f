//! Characters (weight multisets) of `∧ᵖD* ⊗ L^{-k}` and `Symᵖ D* ⊗ L^{-k}`
//! at a fixed point.
//!
//! Convention: a weight `w` contributes `z^w` to the trace. The weights of
//! `D*` are the negated weights of `D`, and `L^{-k}` has weight `-k h`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contact::ContactPointDecomp;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Exterior powers `∧ᵖD*`.
    #[serde(rename = "ext")]
    Exterior,
    /// Symmetric powers `Symᵖ D*`.
    Sym,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Exterior => "ext",
            Variant::Sym => "sym",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ext" | "exterior" => Ok(Variant::Exterior),
            "sym" | "symmetric" => Ok(Variant::Sym),
            other => Err(Error::InvalidSpec(format!("unknown variant {other:?}"))),
        }
    }
}

/// Selects the bundle `∧ᵖD* ⊗ L^{-k}` or `Symᵖ D* ⊗ L^{-k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BundleSpec {
    pub variant: Variant,
    pub p: i64,
    pub k: i64,
}

impl BundleSpec {
    pub fn exterior(p: i64, k: i64) -> Self {
        BundleSpec {
            variant: Variant::Exterior,
            p,
            k,
        }
    }

    pub fn sym(p: i64, k: i64) -> Self {
        BundleSpec {
            variant: Variant::Sym,
            p,
            k,
        }
    }

    /// Check the spec against a contact distribution of rank `2n`.
    pub fn check(&self, n: i64) -> Result<()> {
        let ok = match self.variant {
            Variant::Exterior => (0..=2 * n).contains(&self.p),
            Variant::Sym => self.p >= 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "{} p = {} out of range for rank {}",
                self.variant,
                self.p,
                2 * n
            )))
        }
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, p={}, k={})", self.variant, self.p, self.k)
    }
}

/// Multiset of integer exponents, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn from_weights(mut w: Vec<i64>) -> Self {
        w.sort_unstable();
        Character(w)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, by: i64) -> Character {
        Character(self.0.iter().map(|w| w + by).collect())
    }
}

/// Visit every strictly increasing index tuple of length `p` drawn from
/// `0..n` (or weakly increasing when `repeat`), in lexicographic order.
fn for_each_tuple(n: usize, p: usize, repeat: bool, mut f: impl FnMut(&[usize])) {
    if p == 0 {
        f(&[]);
        return;
    }
    if n == 0 || (!repeat && p > n) {
        return;
    }
    let mut idx: Vec<usize> = if repeat { vec![0; p] } else { (0..p).collect() };
    loop {
        f(&idx);
        // Advance the rightmost position that still has room.
        let mut i = p;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let limit = if repeat { n - 1 } else { n - p + i };
            if idx[i] < limit {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..p {
            idx[j] = if repeat { idx[i] } else { idx[j - 1] + 1 };
        }
    }
}

/// Character of `∧ᵖD*`: `{ -(m_{i₁} + … + m_{iₚ}) }` over `p`-subsets.
pub fn char_exterior(d_weights: &[i64], p: usize) -> Character {
    let mut out = Vec::new();
    for_each_tuple(d_weights.len(), p, false, |ix| {
        out.push(-ix.iter().map(|&i| d_weights[i]).sum::<i64>());
    });
    Character::from_weights(out)
}

/// Character of `Symᵖ D*`: negated sums over size-`p` multisets.
pub fn char_sym(d_weights: &[i64], p: usize) -> Character {
    let mut out = Vec::new();
    for_each_tuple(d_weights.len(), p, true, |ix| {
        out.push(-ix.iter().map(|&i| d_weights[i]).sum::<i64>());
    });
    Character::from_weights(out)
}

/// Character of the bundle selected by `spec` at a decomposed fixed point.
pub fn char_bundle(decomp: &ContactPointDecomp, spec: &BundleSpec) -> Result<Character> {
    spec.check(decomp.n() as i64)?;
    let p = spec.p as usize;
    let base = match spec.variant {
        Variant::Exterior => char_exterior(&decomp.d_weights, p),
        Variant::Sym => char_sym(&decomp.d_weights, p),
    };
    Ok(base.shifted(-spec.k * decomp.h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decomp() -> ContactPointDecomp {
        ContactPointDecomp {
            h: -2,
            d_weights: vec![-3, 1],
            sigma: vec![1, 0],
        }
    }

    #[test]
    fn exterior_examples() {
        let d = [1, -3];
        assert_eq!(char_exterior(&d, 0).weights(), &[0]);
        assert_eq!(char_exterior(&d, 1).weights(), &[-1, 3]);
        assert_eq!(char_exterior(&d, 2).weights(), &[2]);
        assert!(char_exterior(&d, 3).is_empty());
    }

    #[test]
    fn sym_examples() {
        let d = [1, -3];
        assert_eq!(char_sym(&d, 2).weights(), &[-2, 2, 6]);
        assert_eq!(char_sym(&d, 0).weights(), &[0]);
        assert_eq!(char_sym(&d, 1).weights(), &[-1, 3]);
    }

    #[test]
    fn bundle_examples() {
        let d = decomp();
        let w = |p, k| char_bundle(&d, &BundleSpec::exterior(p, k)).unwrap();
        assert_eq!(w(0, 1).weights(), &[2]);
        assert_eq!(w(1, 1).weights(), &[1, 5]);
        assert_eq!(w(2, 0).weights(), &[2]);
    }

    #[test]
    fn out_of_range_exterior_is_invalid() {
        assert!(matches!(
            char_bundle(&decomp(), &BundleSpec::exterior(3, 0)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(char_bundle(&decomp(), &BundleSpec::sym(5, 0)).is_ok());
    }

    #[test]
    fn tuple_counts() {
        let mut c = 0;
        for_each_tuple(6, 3, false, |_| c += 1);
        assert_eq!(c, 20);
        let mut c = 0;
        for_each_tuple(4, 3, true, |_| c += 1);
        assert_eq!(c, 20);
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("ext".parse::<Variant>().unwrap(), Variant::Exterior);
        assert_eq!("sym".parse::<Variant>().unwrap(), Variant::Sym);
        assert!("wedge".parse::<Variant>().is_err());
    }
}
