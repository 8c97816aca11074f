//! Truncated graded polynomial rings `Q[x_1..x_g] / (x_i^{d_i+1}, deg > cap)`.
//!
//! Every generator has degree one. Elements carry a shared handle to their
//! ring; mixing elements of different rings is a programming error.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    cap: u32,
}

impl TruncRing {
    /// Ring with relations `x_i^{d_i + 1} = 0` and total-degree cap equal to
    /// the top degree `Σ d_i`.
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Arc<Self> {
        let cap = degrees.iter().sum();
        TruncRing::with_cap(names, degrees, cap)
    }

    pub fn with_cap(names: Vec<String>, degrees: Vec<u32>, cap: u32) -> Arc<Self> {
        assert_eq!(
            names.len(),
            degrees.len(),
            "one truncation degree per generator"
        );
        Arc::new(TruncRing {
            names,
            degrees,
            cap,
        })
    }

    /// `Q[x] / (x^{d+1})`.
    pub fn single(name: &str, d: u32) -> Arc<Self> {
        TruncRing::new(vec![name.to_string()], vec![d])
    }

    pub fn generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn admits(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.degrees).all(|(e, d)| e <= d) && exps.iter().sum::<u32>() <= self.cap
    }
}

#[derive(Clone)]
pub struct TruncElt {
    ring: Arc<TruncRing>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PartialEq for TruncElt {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for TruncElt {}

impl TruncElt {
    pub fn zero(ring: &Arc<TruncRing>) -> Self {
        TruncElt {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<TruncRing>, c: Rat) -> Self {
        TruncElt::monomial(ring, vec![0; ring.generators()], c)
    }

    pub fn one(ring: &Arc<TruncRing>) -> Self {
        TruncElt::constant(ring, Rat::one())
    }

    /// The generator `x_i`.
    pub fn generator(ring: &Arc<TruncRing>, i: usize) -> Self {
        let mut e = vec![0; ring.generators()];
        e[i] = 1;
        TruncElt::monomial(ring, e, Rat::one())
    }

    /// `c * x^exps`; zero if the monomial is truncated away.
    pub fn monomial(ring: &Arc<TruncRing>, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), ring.generators());
        let mut out = TruncElt::zero(ring);
        if !c.is_zero() && ring.admits(&exps) {
            out.terms.insert(exps, c);
        }
        out
    }

    pub fn ring(&self) -> &Arc<TruncRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_part(&self) -> Rat {
        self.coeff(&vec![0; self.ring.generators()])
    }

    /// Homogeneous component of total degree `deg`.
    pub fn part(&self, deg: u32) -> TruncElt {
        TruncElt {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &TruncElt) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "elements of different truncated rings"
        );
    }

    pub fn scale(&self, c: &Rat) -> TruncElt {
        if c.is_zero() {
            return TruncElt::zero(&self.ring);
        }
        TruncElt {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TruncElt {
        let mut out = TruncElt::one(&self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Truncated `Σ x^k / k!`. The constant part must vanish.
    pub fn exp(&self) -> Result<TruncElt> {
        if !self.constant_part().is_zero() {
            return Err(Error::NonNilpotentExp);
        }
        let mut out = TruncElt::one(&self.ring);
        let mut power = TruncElt::one(&self.ring);
        for k in 1..=self.ring.cap {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&inv_factorial(k));
        }
        Ok(out)
    }

    /// Coefficient of the top monomial `x_1^{d_1} ⋯ x_g^{d_g}`.
    pub fn integrate(&self) -> Rat {
        self.coeff(self.ring.degrees())
    }
}

fn inv_factorial(k: u32) -> Rat {
    (1..=k as i64).map(Rat::from_int).product::<Rat>().recip()
}

impl Add for &TruncElt {
    type Output = TruncElt;
    fn add(self, rhs: &TruncElt) -> TruncElt {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TruncElt {
    type Output = TruncElt;
    fn sub(self, rhs: &TruncElt) -> TruncElt {
        self + &(-rhs)
    }
}

impl Neg for &TruncElt {
    type Output = TruncElt;
    fn neg(self) -> TruncElt {
        TruncElt {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

fn add_exponents(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(i, j)| i + j).collect()
}

impl Mul for &TruncElt {
    type Output = TruncElt;
    fn mul(self, rhs: &TruncElt) -> TruncElt {
        self.check_ring(rhs);
        let mut out = TruncElt::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = add_exponents(a, b);
                if self.ring.admits(&e) {
                    out.add_term(e, x * y);
                }
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for TruncElt {
            type Output = TruncElt;
            fn $method(self, rhs: TruncElt) -> TruncElt {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Debug for TruncElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, &k) in self.ring.names.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
