//! Dense univariate polynomials over the integers, with a modular gcd.
//!
//! These are the working representation behind [`RationalFn`](super::RationalFn);
//! rational coefficients are handled by pulling out a scalar content.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients stored low degree first with no trailing
/// zeros. The zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    /// `c * z^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divide by `z^k`; the low `k` coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        ZPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content-free part with positive leading coefficient, plus the signed
    /// content such that `self = content * primitive`.
    pub fn primitive_split(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar(&c))
    }

    pub fn primitive_part(&self) -> ZPoly {
        self.primitive_split().1
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> ZPoly {
        if c.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(o) = other.coeffs.get(i) {
                c += o;
            }
            out.push(c);
        }
        ZPoly::new(out)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZPoly::new(out)
    }

    /// Exact division over the integers. Returns `None` unless
    /// `self = divisor * q` for some integer polynomial `q`.
    pub fn div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::new(quot))
    }

    /// Greatest common divisor, primitive with positive leading coefficient
    /// (content gcd included). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let a = self.primitive_part();
        let b = other.primitive_part();
        modular_gcd(&a, &b).scale(&c)
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}z")?,
                _ => write!(f, "{c}z^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Modular gcd (Brown-style small-prime method with CRT and trial division).
// ---------------------------------------------------------------------------

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes below 2^31, descending.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes {
            next: (1u64 << 31) - 1,
        }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return Some(c);
            }
        }
        None
    }
}

fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod b` in F_p[z]; `b` nonzero.
fn rem_mod_p(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let q = mulmod(top, inv, p);
            let shift = a.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                let t = mulmod(q, bj, p);
                a[shift + j] = (a[shift + j] + p - t) % p;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Monic gcd in F_p[z].
fn gcd_mod_p(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a, b);
    while !b.is_empty() {
        let r = rem_mod_p(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = invmod(lead, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

fn symmetric_lift(c: &BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

/// gcd of two primitive, nonzero integer polynomials.
fn modular_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return ZPoly::one();
    }
    let lc_gcd = a.leading().unwrap().gcd(b.leading().unwrap());
    let (mut a, mut b) = (a.clone(), b.clone());
    // Strip common powers of z cheaply first.
    let za = a.low_degree().unwrap();
    let zb = b.low_degree().unwrap();
    let zcommon = za.min(zb);
    a = a.shift_down(za);
    b = b.shift_down(zb);
    let finish = |g: ZPoly| g.shift_up(zcommon);
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return finish(ZPoly::one());
    }

    // Current CRT image: coefficients mod `modulus` (non-negative residues).
    let mut image: Option<(Vec<BigInt>, BigInt)> = None;
    let mut lifted_prev: Option<Vec<BigInt>> = None;

    for p in Primes::new() {
        let la = reduce_mod(a.leading().unwrap(), p);
        let lb = reduce_mod(b.leading().unwrap(), p);
        if la == 0 || lb == 0 {
            continue;
        }
        let ap: Vec<u64> = a.coeffs.iter().map(|c| reduce_mod(c, p)).collect();
        let bp: Vec<u64> = b.coeffs.iter().map(|c| reduce_mod(c, p)).collect();
        let mut gp = gcd_mod_p(ap, bp, p);
        if gp.len() == 1 {
            return finish(ZPoly::one());
        }
        let scale = reduce_mod(&lc_gcd, p);
        for c in gp.iter_mut() {
            *c = mulmod(*c, scale, p);
        }

        let bigp = BigInt::from(p);
        image = match image.take() {
            Some((coeffs, modulus)) if coeffs.len() == gp.len() => {
                let inv = BigInt::from(invmod(reduce_mod(&modulus, p), p));
                let combined: Vec<BigInt> = coeffs
                    .iter()
                    .zip(&gp)
                    .map(|(old, &new)| {
                        let diff = (BigInt::from(new) - old).mod_floor(&bigp);
                        let t = (diff * &inv).mod_floor(&bigp);
                        old + &modulus * t
                    })
                    .collect();
                Some((combined, modulus * &bigp))
            }
            Some((coeffs, modulus)) if coeffs.len() < gp.len() => {
                // Unlucky prime: degree too high.
                Some((coeffs, modulus))
            }
            _ => {
                lifted_prev = None;
                Some((gp.iter().map(|&c| BigInt::from(c)).collect(), bigp))
            }
        };

        let (coeffs, modulus) = image.as_ref().unwrap();
        let lifted: Vec<BigInt> = coeffs.iter().map(|c| symmetric_lift(c, modulus)).collect();
        if lifted_prev.as_ref() == Some(&lifted) {
            let candidate = ZPoly::new(lifted.clone()).primitive_part();
            if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
                return finish(candidate);
            }
        }
        lifted_prev = Some(lifted);
    }
    unreachable!("ran out of primes below 2^31")
}
