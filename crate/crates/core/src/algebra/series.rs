//! Truncated formal power series in one variable over the rationals.
//!
//! Used to derive the logarithmic coefficients of multiplicative genera, so
//! that Todd and Â classes can be assembled from power sums.

use super::rat::Rat;

/// Coefficients `a_0, a_1, …, a_{len-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series(pub Vec<Rat>);

impl Series {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.len().min(other.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.0.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Series {
        let n = self.len();
        let a0 = self.coeff(0);
        assert!(
            !a0.is_zero(),
            "series with zero constant term is not invertible"
        );
        let inv0 = a0.recip();
        let mut out = vec![Rat::zero(); n];
        if n == 0 {
            return Series(out);
        }
        out[0] = inv0.clone();
        for k in 1..n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &(self.coeff(j) * &out[k - j]);
            }
            out[k] = -(s * &inv0);
        }
        Series(out)
    }

    pub fn derivative(&self) -> Series {
        Series(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_int(i as i64))
                .collect(),
        )
    }

    /// `log(f)` for `f(0) = 1`, computed as `∫ f'/f`.
    pub fn log(&self) -> Series {
        assert!(self.coeff(0).is_one(), "log needs constant term 1");
        let n = self.len();
        let mut quotient = self.derivative();
        quotient.0.resize(n.saturating_sub(1), Rat::zero());
        let mut inv = self.inverse();
        inv.0.truncate(n.saturating_sub(1));
        let q = quotient.mul(&inv);
        let mut out = vec![Rat::zero(); n];
        for (i, c) in q.0.iter().enumerate() {
            out[i + 1] = c / Rat::from_int(i as i64 + 1);
        }
        Series(out)
    }
}

fn factorial(n: u64) -> Rat {
    (1..=n as i64).map(Rat::from_int).product()
}

/// `(1 - e^{-y}) / y` to `len` terms.
fn one_minus_exp_neg_over_y(len: usize) -> Series {
    Series(
        (0..len as u64)
            .map(|k| {
                let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
                sign / factorial(k + 1)
            })
            .collect(),
    )
}

/// `sinh(y/2) / (y/2)` to `len` terms.
fn sinh_half_over_half(len: usize) -> Series {
    Series(
        (0..len as u64)
            .map(|k| {
                if k % 2 == 1 {
                    Rat::zero()
                } else {
                    // (y/2)^k / (k+1)!
                    Rat::new(1, 1i64 << k) / factorial(k + 1)
                }
            })
            .collect(),
    )
}

/// Coefficients `t_j` of `log(y / (1 - e^{-y})) = Σ t_j y^j`, for `j < len`.
pub fn todd_log_coefficients(len: usize) -> Series {
    one_minus_exp_neg_over_y(len).inverse().log()
}

/// Coefficients of `log((y/2) / sinh(y/2))`, for `j < len`.
pub fn ahat_log_coefficients(len: usize) -> Series {
    sinh_half_over_half(len).inverse().log()
}

/// Coefficients of `log((1 - e^{-y}) / y)`, for `j < len`.
pub fn euler_log_coefficients(len: usize) -> Series {
    one_minus_exp_neg_over_y(len).log()
}
