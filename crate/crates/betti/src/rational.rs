//! The scalar type for all table entries and series coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// `num_rational::BigRational` already maintains the invariants we need:
/// values are kept in lowest terms with a positive denominator, and all
/// arithmetic is exact.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"n"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// `j^l` as an exact integer, with the convention `0^0 = 1`.
pub fn int_pow(j: i64, l: u32) -> BigInt {
    if l == 0 {
        BigInt::one()
    } else {
        BigInt::from(j).pow(l)
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}

/// Binomial coefficient `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// True when the rational is strictly positive.
pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}
