//! Exact scalar arithmetic.
//!
//! Every coefficient in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator (both invariants
//! are maintained by `num_rational`). No floating point appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Converts an exact rational that must be a nonnegative integer into `u64`.
pub fn to_u64(q: &Rational) -> Result<u64> {
    if !is_integer(q) {
        return Err(Error::NonIntegerDegree(q.to_string()));
    }
    if q.is_negative() {
        return Err(Error::NegativeDegree(q.to_string()));
    }
    q.numer()
        .to_u64()
        .ok_or_else(|| Error::DegreeOverflow(q.to_string()))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Odd semifactorial `m!! = m(m−2)(m−4)⋯1` for odd `m ≥ −1`, with `(−1)!! = 1`.
pub fn semifactorial(m: i64) -> BigInt {
    debug_assert!(m >= -1 && m % 2 != 0);
    let mut acc = BigInt::one();
    let mut k = m;
    while k >= 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

/// Binomial coefficient with the combinatorial convention: 0 outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = ratio(6, 4);
        assert_eq!(q, ratio(3, 2));
        assert_eq!(q.denom(), &BigInt::from(2));
        let neg = ratio(1, -2);
        assert!(
            neg.denom() > &BigInt::zero(),
            "denominator normalized positive"
        );
    }

    #[test]
    fn u64_conversion_guards() {
        assert_eq!(to_u64(&rat(16)).unwrap(), 16);
        assert!(matches!(
            to_u64(&ratio(1, 2)),
            Err(Error::NonIntegerDegree(_))
        ));
        assert!(matches!(to_u64(&rat(-3)), Err(Error::NegativeDegree(_))));
    }

    #[test]
    fn factorials_and_semifactorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(semifactorial(-1), BigInt::from(1));
        assert_eq!(semifactorial(1), BigInt::from(1));
        assert_eq!(semifactorial(5), BigInt::from(15));
        assert_eq!(semifactorial(7), BigInt::from(105));
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-2, 1), BigInt::zero());
        assert_eq!(binomial(4, 0), BigInt::from(1));
    }
}
