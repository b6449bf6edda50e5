use alloc::vec;
use alloc::vec::Vec;
use core::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// The stored vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePolynomial<T = BigInt> {
    coeffs: Vec<T>,
}

impl<T: Zero> DensePolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T: Zero + Clone> DensePolynomial<T> {
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Zero + One> DensePolynomial<T> {
    pub fn one() -> Self {
        Self { coeffs: vec![T::one()] }
    }
}

impl<T> DensePolynomial<T>
where
    T: Zero + Clone + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc += c;
        }
        acc
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        add_product_into(&mut out, &self.coeffs, &other.coeffs);
        Self::new(out)
    }

    /// `self^e` by repeated multiplication, which beats squaring when `self`
    /// is short and the power is long.
    pub fn pow(&self, e: usize) -> Self
    where
        T: One,
    {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `out[i + j] += a[i] * b[j]`; `out` must be long enough.
pub(crate) fn add_product_into<T>(out: &mut [T], a: &[T], b: &[T])
where
    T: Zero + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn product_and_power() {
        // (t^2 - t)^2 = t^4 - 2t^3 + t^2
        let q = p(&[0, -1, 1]);
        assert_eq!(q.mul(&q), p(&[0, 0, 1, -2, 1]));
        assert_eq!(q.pow(2), q.mul(&q));
        assert_eq!(q.pow(0), DensePolynomial::one());
        assert!(q.mul(&DensePolynomial::zero()).is_zero());
    }

    #[test]
    fn eval_over_rationals() {
        let q = DensePolynomial::new(vec![
            BigRational::from_integer(1.into()),
            BigRational::from_integer((-3).into()),
            BigRational::from_integer(2.into()),
        ]);
        let half = BigRational::new(1.into(), 2.into());
        assert!(q.eval(&half).is_zero());
    }
}
