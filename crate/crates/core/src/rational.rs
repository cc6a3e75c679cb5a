//! Exact rational scalars.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary precision rational number; every coefficient in the crate is one of these.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Numeric sign as -1, 0 or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x > &Rational::zero() {
        1
    } else {
        -1
    }
}
