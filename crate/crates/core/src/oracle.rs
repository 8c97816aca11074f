//! Non-equivariant holomorphic Euler characteristics from characteristic
//! classes, as an independent check on the Lefschetz engine.
//!
//! Everything is computed from power sums of formal roots (Newton's
//! identities); roots themselves are never materialized. Only the
//! `CP^{2n+1}` model ships: cohomology `Q[x]/(x^{2n+2})`, `c(TX) = (1+x)^{2n+2}`,
//! `c(L) = 1 + 2x` and `c(D) = c(TX)/c(L)`.

use std::sync::Arc;

use crate::algebra::series::{ahat_log_coefficients, todd_log_coefficients, Series};
use crate::algebra::{Rat, TruncElt, TruncRing};
use crate::characters::{BundleSpec, Variant};
use crate::error::{Error, Result};

/// Chern classes of a complex vector bundle in a truncated cohomology ring.
#[derive(Clone, Debug)]
pub struct BundleClassData {
    pub rank: usize,
    /// `c_1, …, c_rank`; `c_0 = 1` is implicit.
    pub chern: Vec<TruncElt>,
    pub ring: Arc<TruncRing>,
}

impl BundleClassData {
    pub fn new(ring: &Arc<TruncRing>, chern: Vec<TruncElt>) -> Self {
        BundleClassData {
            rank: chern.len(),
            chern,
            ring: ring.clone(),
        }
    }

    /// Read `c_1..c_rank` off the homogeneous parts of a total Chern class.
    pub fn from_total(ring: &Arc<TruncRing>, rank: usize, total: &TruncElt) -> Self {
        BundleClassData::new(ring, (1..=rank as u32).map(|i| total.part(i)).collect())
    }

    pub fn total_chern(&self) -> TruncElt {
        self.chern
            .iter()
            .fold(TruncElt::one(&self.ring), |acc, c| &acc + c)
    }

    /// `c_i`, zero above the rank.
    fn c(&self, i: usize) -> TruncElt {
        self.chern
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| TruncElt::zero(&self.ring))
    }

    /// Power sums `p_j = Σ y_i^j` for `j = 1..=cap`, by Newton's identities.
    /// Index 0 of the result holds `p_0 = rank`.
    pub fn power_sums(&self) -> Vec<TruncElt> {
        let cap = self.ring.cap() as usize;
        let mut p = vec![TruncElt::constant(
            &self.ring,
            Rat::from_int(self.rank as i64),
        )];
        for j in 1..=cap {
            let mut acc = self.c(j).scale(&Rat::from_int(j as i64));
            if j % 2 == 0 {
                acc = -&acc;
            }
            for i in 1..j {
                let term = &self.c(i) * &p[j - i];
                acc = if i % 2 == 1 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            p.push(acc);
        }
        p
    }
}

/// Cohomological model of `CP^{2n+1}` with its contact bundles.
#[derive(Clone, Debug)]
pub struct CohModel {
    pub n: i64,
    pub ring: Arc<TruncRing>,
    pub tx: BundleClassData,
    pub l: BundleClassData,
    pub d: BundleClassData,
}

pub fn cp_model(n: i64) -> Result<CohModel> {
    if n < 1 {
        return Err(Error::InvalidSpec(format!("n = {n} must be positive")));
    }
    let dim = (2 * n + 1) as u32;
    let ring = TruncRing::single("x", dim);
    let x = TruncElt::generator(&ring, 0);
    let one = TruncElt::one(&ring);
    let c_tx = (&one + &x).pow(dim + 1);
    let c_l = &one + &x.scale(&Rat::from_int(2));
    let c_d = &c_tx * &unit_inverse(&c_l);
    Ok(CohModel {
        n,
        tx: BundleClassData::from_total(&ring, dim as usize, &c_tx),
        l: BundleClassData::from_total(&ring, 1, &c_l),
        d: BundleClassData::from_total(&ring, 2 * n as usize, &c_d),
        ring,
    })
}

/// Inverse of an element with nonzero constant term.
fn unit_inverse(u: &TruncElt) -> TruncElt {
    let ring = u.ring();
    let c0 = u.constant_part();
    assert!(!c0.is_zero(), "not a unit");
    let inv0 = c0.recip();
    // u = c0 (1 + t), t nilpotent
    let t = &u.scale(&inv0) - &TruncElt::one(ring);
    let mut out = TruncElt::one(ring);
    let mut power = TruncElt::one(ring);
    for _ in 0..ring.cap() {
        power = &power * &(-&t);
        if power.is_zero() {
            break;
        }
        out = &out + &power;
    }
    out.scale(&inv0)
}

fn factorial(n: usize) -> Rat {
    (1..=n as i64).map(Rat::from_int).product()
}

/// `Σ_i e^{s y_i} = rank + Σ_{j≥1} s^j p_j / j!`.
fn exp_power_sum(p: &[TruncElt], s: i64) -> TruncElt {
    let mut out = p[0].clone();
    for (j, pj) in p.iter().enumerate().skip(1) {
        let coeff = Rat::from_int(s.pow(j as u32)) / factorial(j);
        out = &out + &pj.scale(&coeff);
    }
    out
}

/// Chern character `rank + Σ p_j / j!`.
pub fn ch_from_chern(b: &BundleClassData) -> TruncElt {
    exp_power_sum(&b.power_sums(), 1)
}

/// `ch(∧ᵖ b*)` or `ch(Symᵖ b*)` via the λ-ring recursion on the Adams
/// operations `ψ^m(b*)`, whose characters are `Σ e^{-m y_i}`.
pub fn ch_lambda(b: &BundleClassData, p: usize, variant: Variant) -> Result<TruncElt> {
    if variant == Variant::Exterior && p > b.rank {
        return Err(Error::InvalidSpec(format!(
            "exterior power {p} of a rank {} bundle",
            b.rank
        )));
    }
    let sums = b.power_sums();
    let adams: Vec<TruncElt> = (1..=p).map(|m| exp_power_sum(&sums, -(m as i64))).collect();
    let mut e = vec![TruncElt::one(&b.ring)];
    for q in 1..=p {
        let mut acc = TruncElt::zero(&b.ring);
        for i in 1..=q {
            let term = &e[q - i] * &adams[i - 1];
            acc = match variant {
                Variant::Exterior if i % 2 == 0 => &acc - &term,
                _ => &acc + &term,
            };
        }
        e.push(acc.scale(&Rat::new(1, q as i64)));
    }
    Ok(e.pop().unwrap())
}

/// Multiplicative genus `Π f(y_i)` given the coefficients of `log f`.
fn genus(b: &BundleClassData, log_coeffs: &Series) -> TruncElt {
    let sums = b.power_sums();
    let mut exponent = TruncElt::zero(&b.ring);
    for (j, pj) in sums.iter().enumerate().skip(1) {
        exponent = &exponent + &pj.scale(&log_coeffs.coeff(j));
    }
    exponent.exp().expect("power sums have no constant part")
}

pub fn todd_of(b: &BundleClassData) -> TruncElt {
    genus(b, &todd_log_coefficients(b.ring.cap() as usize + 1))
}

pub fn a_hat_of(b: &BundleClassData) -> TruncElt {
    genus(b, &ahat_log_coefficients(b.ring.cap() as usize + 1))
}

/// `Td(X) = Π y_i / (1 - e^{-y_i})`.
pub fn todd(model: &CohModel) -> TruncElt {
    todd_of(&model.tx)
}

/// `Â(X) = Π (y_i/2) / sinh(y_i/2)`.
pub fn a_hat(model: &CohModel) -> TruncElt {
    a_hat_of(&model.tx)
}

/// `χ(X, O(E))` by Hirzebruch–Riemann–Roch, `E` selected by `spec`.
pub fn holomorphic_euler(model: &CohModel, spec: &BundleSpec) -> Result<Rat> {
    spec.check(model.n)?;
    let bundle_ch = ch_lambda(&model.d, spec.p as usize, spec.variant)?;
    let twist = model.l.chern[0].scale(&Rat::from_int(-spec.k)).exp()?;
    let value = (&(&bundle_ch * &twist) * &todd(model)).integrate();
    if !value.is_integer() {
        return Err(Error::NonIntegralResult(value.to_string()));
    }
    Ok(value)
}
