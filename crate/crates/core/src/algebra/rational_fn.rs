//! Rational functions in one variable `z` over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::laurent::LaurentPoly;
use super::poly::ZPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// `num / den` in canonical form.
///
/// Internally the numerator is `scale * z^shift * num` with `num` a primitive
/// integer polynomial with positive leading coefficient and nonzero constant
/// term, and `den` is a primitive integer polynomial with positive leading
/// coefficient and nonzero constant term, coprime to `num`. All z-powers live
/// in the numerator's monomial factor. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    scale: Rat,
    shift: i64,
    num: ZPoly,
    den: ZPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            scale: Rat::zero(),
            shift: 0,
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn::from_laurent(&LaurentPoly::one())
    }

    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        let (dscale, dshift, dpoly) = den.to_scaled_zpoly().ok_or(Error::ZeroDenominator)?;
        let Some((nscale, nshift, npoly)) = num.to_scaled_zpoly() else {
            return Ok(RationalFn::zero());
        };
        Ok(RationalFn::reduce(
            nscale / dscale,
            nshift - dshift,
            npoly,
            dpoly,
        ))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        match p.to_scaled_zpoly() {
            None => RationalFn::zero(),
            Some((scale, shift, num)) => RationalFn {
                scale,
                shift,
                num,
                den: ZPoly::one(),
            },
        }
    }

    /// `1 / Π (1 - z^{-m})` over the given exponents.
    pub fn lefschetz_denominator(exponents: &[i64]) -> Result<Self> {
        let mut den = LaurentPoly::one();
        for &m in exponents {
            den = &den * &(&LaurentPoly::one() - &LaurentPoly::z_pow(-m));
        }
        RationalFn::new(&LaurentPoly::one(), &den)
    }

    /// Canonicalize `scale * z^shift * num / den`, where `num` and `den` are
    /// primitive with nonzero constant terms.
    fn reduce(scale: Rat, shift: i64, num: ZPoly, den: ZPoly) -> Self {
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        // Both are still primitive up to sign; re-normalize signs and content.
        let (nc, num) = num.primitive_split();
        let (dc, den) = den.primitive_split();
        RationalFn {
            scale: scale * Rat::new(nc, dc),
            shift,
            num,
            den,
        }
    }

    /// Split an integer Laurent combination `z^shift * poly` (any content, any
    /// low-order zeros) into canonical numerator pieces.
    fn from_parts(scale: Rat, shift: i64, poly: ZPoly, den: ZPoly) -> Self {
        let Some(low) = poly.low_degree() else {
            return RationalFn::zero();
        };
        let poly = poly.shift_down(low);
        let (c, prim) = poly.primitive_split();
        RationalFn::reduce(scale * Rat::from_int(c), shift + low as i64, prim, den)
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    /// Numerator as a Laurent polynomial (carries all powers of `z`).
    pub fn numerator(&self) -> LaurentPoly {
        LaurentPoly::from_scaled_zpoly(&self.scale, self.shift, &self.num)
    }

    /// Denominator: an ordinary polynomial with positive leading coefficient
    /// and nonzero constant term.
    pub fn denominator(&self) -> LaurentPoly {
        LaurentPoly::from_scaled_zpoly(&Rat::one(), 0, &self.den)
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&other.den);
        let (self_cof, other_cof) = if g.degree() == Some(0) {
            (other.den.clone(), self.den.clone())
        } else {
            (
                other.den.div_exact(&g).expect("gcd divides"),
                self.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let den = self.den.mul(&self_cof);

        // Bring both numerators to a common integer scale and z-shift.
        let lcm = self.scale.denom().lcm(other.scale.denom());
        let a_int: BigInt = self.scale.numer() * (&lcm / self.scale.denom());
        let b_int: BigInt = other.scale.numer() * (&lcm / other.scale.denom());
        let base = self.shift.min(other.shift);
        let a = self
            .num
            .mul(&self_cof)
            .scale(&a_int)
            .shift_up((self.shift - base) as usize);
        let b = other
            .num
            .mul(&other_cof)
            .scale(&b_int)
            .shift_up((other.shift - base) as usize);
        RationalFn::from_parts(Rat::new(BigInt::one(), lcm), base, a.add(&b), den)
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            scale: -&self.scale,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() || other.is_zero() {
            return RationalFn::zero();
        }
        // Cross-cancel before multiplying to keep degrees down.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RationalFn::from_parts(
            &self.scale * &other.scale,
            self.shift + other.shift,
            n1.mul(&n2),
            d1.mul(&d2),
        )
    }

    /// Multiply by `z^k`; the canonical form is preserved.
    pub fn mul_z_pow(&self, k: i64) -> RationalFn {
        if self.is_zero() {
            return self.clone();
        }
        RationalFn {
            shift: self.shift + k,
            ..self.clone()
        }
    }

    pub fn recip(&self) -> Result<RationalFn> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // den / (scale z^shift num)
        let (dc, den) = self.num.primitive_split();
        let (nc, num) = self.den.primitive_split();
        Ok(RationalFn {
            scale: self.scale.recip() * Rat::new(nc, dc),
            shift: -self.shift,
            num,
            den,
        })
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn> {
        Ok(self.mul(&other.recip()?))
    }

    /// The Laurent polynomial equal to `self`, or `NotPolynomial` if `self`
    /// has a pole away from `0` and `∞`.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        match self.den.degree() {
            Some(0) => {
                let d = Rat::from_int(self.den.coeffs()[0].clone());
                Ok(LaurentPoly::from_scaled_zpoly(
                    &(&self.scale / &d),
                    self.shift,
                    &self.num,
                ))
            }
            _ => Err(Error::NotPolynomial),
        }
    }

    /// `(order at z = 0, degree at z = ∞)`.
    ///
    /// `f` is bounded at `0` iff the order is `>= 0` and tends to zero iff it
    /// is `> 0`; bounded at `∞` iff the degree is `<= 0` and tends to zero iff
    /// it is `< 0`.
    pub fn ord_bounds(&self) -> Result<(i64, i64)> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let num_hi = self.shift + self.num.degree().unwrap() as i64;
        let den_hi = self.den.degree().unwrap() as i64;
        Ok((self.shift, num_hi - den_hi))
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator(), self.denominator())
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
