//! Dense exact polynomials in one variable `t` with unbounded integer
//! coefficients. Degrees stay small at the scales this library targets, so
//! a dense representation keeps the arithmetic simple and obviously exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// `coeffs[i]` is the coefficient of `t^i`. The zero polynomial is the
/// empty vector; otherwise the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^k - 1` for `k >= 1`.
    pub fn t_pow_minus_one(k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = -BigInt::one();
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact evaluation at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Multiply by `t^k - 1` in one shift-and-subtract pass.
    pub fn mul_t_pow_minus_one(&self, k: usize) -> IntPolynomial {
        assert!(k >= 1);
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + k];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i + k] += a;
            coeffs[i] -= a;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Long division by a divisor with leading coefficient ±1, returning
    /// `(quotient, remainder)` with `deg r < deg d`. Every divisor in this
    /// crate (binomials `t^k - 1`, cyclotomic polynomials) is monic.
    pub fn div_rem(
        &self,
        divisor: &IntPolynomial,
    ) -> Result<(IntPolynomial, IntPolynomial), Error> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = &divisor.coeffs[dd];
        if !lead.is_one() && !(-lead).is_one() {
            return Err(Error::Internal(
                "polynomial division requires a unit leading coefficient".into(),
            ));
        }
        let Some(sd) = self.degree() else {
            return Ok((IntPolynomial::zero(), IntPolynomial::zero()));
        };
        if sd < dd {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let negate = lead.is_negative();
        let mut rem = self.coeffs.clone();
        let qlen = sd - dd + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let c = if negate {
                -rem[i + dd].clone()
            } else {
                rem[i + dd].clone()
            };
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + k] -= &c * dc;
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        Ok((
            IntPolynomial::from_coeffs(q),
            IntPolynomial::from_coeffs(rem),
        ))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial, Error> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The n-th cyclotomic polynomial, built by exact division:
/// `Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial, Error> {
    if n == 0 {
        return Err(Error::InvalidLevel(
            "cyclotomic index must be positive".into(),
        ));
    }
    if n == 1 {
        return Ok(IntPolynomial::from_i64(&[-1, 1]));
    }
    let mut p = IntPolynomial::t_pow_minus_one(n as usize);
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.exact_div(&cyclotomic(d)?)?;
        }
    }
    Ok(p)
}
