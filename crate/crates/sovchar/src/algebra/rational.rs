//! Arbitrary-precision rational coefficients.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form we rely on everywhere: positive denominator, fully reduced,
//! zero stored as 0/1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a numerator/denominator pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Exact factorial as a rational (integer-valued).
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from(acc)
}

/// Render as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn to_string_frac(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"` decimal strings.
pub fn parse_frac(s: &str) -> Option<Rational> {
    let mut it = s.splitn(2, '/');
    let n: BigInt = it.next()?.trim().parse().ok()?;
    match it.next() {
        None => Some(Rational::from(n)),
        Some(d) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Integer power with negative exponents allowed (base must be nonzero for
/// negative `e`).
pub fn pow_signed(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::Pow::pow(base, e as u64)
    } else {
        assert!(!base.is_zero(), "pow_signed: zero base with negative exponent");
        num_traits::pow::Pow::pow(&base.recip(), (-e) as u64)
    }
}
