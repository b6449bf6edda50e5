//! Floating-point logarithms of arbitrary-size integers and rationals.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
#[allow(unused_imports)] // `Float` is unused when std is linked
use num_traits::{Float, ToPrimitive};

/// Splits `x > 0` as `mantissa * 2^exponent` with `mantissa` in `[2^63, 2^64)`
/// (or the exact value when it fits in 64 bits).
fn split(x: &BigUint) -> (f64, i64) {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64, 0);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64, shift as i64)
}

/// Natural logarithm of a positive integer, accurate to a few ulps of the result.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let (m, e) = split(x);
    m.ln() + e as f64 * core::f64::consts::LN_2
}

/// Natural logarithm of a positive integer. Returns NaN for `x <= 0`.
pub fn ln_bigint(x: &BigInt) -> f64 {
    match x.sign() {
        Sign::Plus => ln_biguint(x.magnitude()),
        _ => f64::NAN,
    }
}

/// `ln(a / b)` for positive integers, with the binary exponents cancelled
/// before they are converted to floating point.
pub fn ln_ratio(a: &BigInt, b: &BigInt) -> f64 {
    if a.sign() != Sign::Plus || b.sign() != Sign::Plus {
        return f64::NAN;
    }
    let (ma, ea) = split(a.magnitude());
    let (mb, eb) = split(b.magnitude());
    (ma / mb).ln() + (ea - eb) as f64 * core::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(x: &BigRational) -> f64 {
    ln_ratio(x.numer(), x.denom())
}

/// `ln(n!)` via `lgamma`; absolute error is a few ulps of the result.
pub fn ln_factorial(n: u64) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

/// Exact `n!`.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn logs_of_small_and_huge_integers() {
        assert!((ln_bigint(&BigInt::from(1000)) - 1000f64.ln()).abs() < 1e-14);
        let big = BigInt::one() << 5000u32;
        assert!((ln_bigint(&big) - 5000.0 * core::f64::consts::LN_2).abs() < 1e-9);
        assert!(ln_bigint(&BigInt::from(-3)).is_nan());
    }

    #[test]
    fn ratio_cancels_exponents() {
        let f = BigInt::from(factorial(400));
        let g = BigInt::from(factorial(399));
        assert!((ln_ratio(&f, &g) - 400f64.ln()).abs() < 1e-14);
        assert!((ln_factorial(400) - ln_bigint(&f)).abs() < 1e-10);
    }
}
