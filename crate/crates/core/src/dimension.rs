//! Graded Weyl dimensions and their vanishing orders at roots of unity.
//!
//! The graded dimension of the induced module of dominant highest weight
//! `lambda` is the exact polynomial quotient
//!
//! ```text
//! dim_t = prod_{alpha > 0} (t^{<lambda+rho, coroot>} - 1) / (t^{<rho, coroot>} - 1),
//! ```
//!
//! a polynomial with constant term 1 whose value at `t = 1` is the Weyl
//! dimension. Its vanishing order at a primitive l-th root of unity is the
//! multiplicity of the l-th cyclotomic polynomial, and equals the number of
//! positive roots with `l | <lambda+rho, coroot>` whenever `l` exceeds the
//! Coxeter number (no denominator factor can then vanish there).

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::linkage::LinkageParams;
use crate::poly::{cyclotomic, IntPolynomial};
use crate::root_system::{RootSystem, Weight};

/// Divisibility data for one dominant weight: the vanishing order `a`, the
/// Weyl dimension, and whether `l^a` divides the dimension (always, after
/// multiplying by `d_R`; on its own whenever `l` is prime).
#[derive(Clone, Debug)]
pub struct DivisibilityReport {
    pub weight: Weight,
    pub l: i64,
    /// Vanishing order `a` at a primitive l-th root of unity.
    pub order: u32,
    pub weyl_dim: BigUint,
    pub l_pow_a_divides_dim: bool,
    pub d_r_times_dim_divisible: bool,
    pub l_prime: bool,
}

/// Exact graded dimension polynomial for a dominant weight.
pub fn graded_dimension(rs: &RootSystem, lambda: &Weight) -> Result<IntPolynomial, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut numerator = IntPolynomial::one();
    for root in rs.positive_roots() {
        let p = rs.shifted_pairing(lambda, root);
        numerator = numerator.mul_t_pow_minus_one(p as usize);
    }
    // Dividing the numerator by the denominator binomials one at a time
    // stays polynomial at every step, since the final quotient is one.
    let mut quotient = numerator;
    for root in rs.positive_roots() {
        let d = root.dual_height() as usize;
        quotient = quotient.exact_div(&IntPolynomial::t_pow_minus_one(d))?;
    }
    if quotient.constant_term() != 1.into() {
        return Err(Error::Internal(format!(
            "graded dimension of {lambda} has constant term {}",
            quotient.constant_term()
        )));
    }
    Ok(quotient)
}

/// Weyl dimension `prod <lambda+rho, coroot> / prod <rho, coroot>`,
/// computed exactly; equals the graded dimension evaluated at 1.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut numerator = BigUint::from(1u32);
    for root in rs.positive_roots() {
        numerator *= BigUint::from(rs.shifted_pairing(lambda, root) as u64);
    }
    let denominator = rs.weyl_denominator();
    if (&numerator % denominator) != BigUint::zero() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} is not an integer"
        )));
    }
    Ok(numerator / denominator)
}

/// Multiplicity of the l-th cyclotomic polynomial in `p`, by repeated
/// exact division.
pub fn cyclotomic_vanishing_order(p: &IntPolynomial, l: i64) -> Result<u32, Error> {
    if l < 2 {
        return Err(Error::InvalidLevel(format!(
            "cyclotomic order needs l >= 2, got {l}"
        )));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = cyclotomic(l as u64)?;
    let mut order = 0;
    let mut current = p.clone();
    loop {
        let (q, r) = current.div_rem(&phi)?;
        if !r.is_zero() {
            return Ok(order);
        }
        order += 1;
        current = q;
        if current.is_zero() {
            return Err(Error::Internal("nonzero polynomial reduced to zero".into()));
        }
    }
}

/// Number of positive roots with `l | <lambda+rho, coroot>`; the expected
/// vanishing order of the graded dimension.
pub fn expected_order(params: &LinkageParams, lambda: &Weight) -> Result<u32, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rs = params.rs();
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|root| rs.shifted_pairing(lambda, root) % params.l() == 0)
        .count() as u32)
}

fn is_prime(l: i64) -> bool {
    if l < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= l {
        if l % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Full divisibility report for a dominant weight. The vanishing order is
/// computed twice (root counting and polynomial division) and the two must
/// agree; a mismatch is an internal error.
pub fn divisibility_report(
    params: &LinkageParams,
    lambda: &Weight,
) -> Result<DivisibilityReport, Error> {
    let rs = params.rs();
    let l = params.l();
    let graded = graded_dimension(rs, lambda)?;
    let order = expected_order(params, lambda)?;
    let by_division = cyclotomic_vanishing_order(&graded, l)?;
    if order != by_division {
        return Err(Error::Internal(format!(
            "vanishing order mismatch for {lambda}: counted {order}, divided {by_division}"
        )));
    }
    let weyl_dim = weyl_dimension(rs, lambda)?;
    let at_one = graded.eval_at_one();
    if at_one != weyl_dim.clone().into() {
        return Err(Error::Internal(format!(
            "graded dimension of {lambda} evaluates to {at_one}, Weyl dimension is {weyl_dim}"
        )));
    }
    let l_pow_a = BigUint::from(l as u64).pow(order);
    let l_pow_a_divides_dim = (&weyl_dim % &l_pow_a).is_zero();
    let d_r_times_dim_divisible = ((rs.weyl_denominator() * &weyl_dim) % &l_pow_a).is_zero();
    Ok(DivisibilityReport {
        weight: lambda.clone(),
        l,
        order,
        weyl_dim,
        l_pow_a_divides_dim,
        d_r_times_dim_divisible,
        l_prime: is_prime(l),
    })
}
