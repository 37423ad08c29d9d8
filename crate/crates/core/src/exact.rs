//! Arbitrary-precision natural/integer arithmetic and the basic
//! combinatorics every exact identity in the proof replay rests on.
//!
//! Everything here is exact: no rounding, no modular reduction. Division
//! exists only as [`exact_div`], which fails loudly when the quotient
//! would not be an integer.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: BigInt, divisor: BigInt },
    #[error("division by zero")]
    DivisorZero,
}

/// n! with factorial(0) = 1.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k); returns 0 when k > n.
///
/// Uses the multiplicative formula with a running exact division, so the
/// intermediate values never exceed the final result times n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1): it equals C(n, i+1) * (i+1)!
        // divided by i!, i.e. a binomial coefficient times an integer.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Greatest common divisor; gcd(0, b) = b.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Exact quotient a / b. Errors when b = 0 or b does not divide a.
pub fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt, ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisorZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ExactError::NotDivisible {
            dividend: a.clone(),
            divisor: b.clone(),
        })
    }
}

/// Exact quotient on naturals; same contract as [`exact_div`].
pub fn exact_div_nat(a: &BigUint, b: &BigUint) -> Result<BigUint, ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisorZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ExactError::NotDivisible {
            dividend: BigInt::from(a.clone()),
            divisor: BigInt::from(b.clone()),
        })
    }
}
