use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PartitionSpec;
use crate::combinatorics::{DensePolynomial, StirlingTable};
use crate::{Error, Result};

/// Which invariant a [`CountResult`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    AcyclicOrientations,
    /// `H_s = (-1)^N χ(-s)`.
    TutteAxis,
    Chromatic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub parts: PartitionSpec,
    pub kind: CountKind,
    pub value: BigRational,
}

/// `Π P_{λ_i}(t)`, degree `N`; the constant `1` for the empty graph.
pub fn product_polynomial(parts: &PartitionSpec) -> DensePolynomial {
    product_polynomial_with(&mut StirlingTable::new(), parts)
}

pub fn product_polynomial_with(table: &mut StirlingTable, parts: &PartitionSpec) -> DensePolynomial {
    let mut acc = DensePolynomial::one();
    // parts are non-increasing, so equal sizes are adjacent
    let mut i = 0;
    let ps = parts.parts();
    while i < ps.len() {
        let k = ps[i];
        let run = ps[i..].iter().take_while(|&&x| x == k).count();
        let pk = table.pm_polynomial(k).expect("parts are positive");
        for _ in 0..run {
            acc = acc.mul(&pk);
        }
        i += run;
    }
    acc
}

/// `Σ_j c_j j!`, i.e. `∫_0^∞ e^{-t} p(t) dt` for `p = Σ c_j t^j`.
pub fn gamma_weighted_sum(p: &DensePolynomial) -> BigInt {
    let mut fact = BigInt::one();
    let mut sum = BigInt::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if j > 0 {
            fact *= j;
        }
        if !c.is_zero() {
            sum += c * &fact;
        }
    }
    sum
}

/// Number of acyclic orientations of `K_λ`.
pub fn ao_exact(parts: &PartitionSpec) -> BigInt {
    ao_exact_with(&mut StirlingTable::new(), parts)
}

pub fn ao_exact_with(table: &mut StirlingTable, parts: &PartitionSpec) -> BigInt {
    gamma_weighted_sum(&product_polynomial_with(table, parts))
}

/// `χ_{K_λ}(q)` by the colour-class expansion `Σ_J b_J (q)_J`, where
/// `b_J = (-1)^{N+J} c_J` are the unsigned product coefficients.
pub fn chromatic_eval(parts: &PartitionSpec, q: &BigRational) -> BigRational {
    let poly = product_polynomial(parts);
    let n = parts.vertices();
    let mut falling = BigRational::one();
    let mut x = q.clone();
    let mut sum = BigRational::zero();
    for (j, c) in poly.coeffs().iter().enumerate() {
        if j > 0 {
            falling *= &x;
            x -= BigRational::one();
        }
        if !c.is_zero() {
            let term = &falling * BigRational::from_integer(c.clone());
            if (n + j) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    sum
}

/// `H_s(K_λ) = (-1)^N χ_{K_λ}(-s) = Σ_j c_j s(s+1)⋯(s+j-1)`.
pub fn h_s_exact(parts: &PartitionSpec, s: &BigRational) -> BigRational {
    h_s_exact_with(&mut StirlingTable::new(), parts, s)
}

pub fn h_s_exact_with(table: &mut StirlingTable, parts: &PartitionSpec, s: &BigRational) -> BigRational {
    let poly = product_polynomial_with(table, parts);
    if s.is_integer() {
        // stay in integers: no gcd normalisation per term
        let s = s.to_integer();
        let mut rising = BigInt::one();
        let mut x = s;
        let mut sum = BigInt::zero();
        for (j, c) in poly.coeffs().iter().enumerate() {
            if j > 0 {
                rising *= &x;
                x += 1;
            }
            if !c.is_zero() {
                sum += c * &rising;
            }
        }
        return BigRational::from_integer(sum);
    }
    // Σ c_j (s)_j with a common denominator: (s)_j = a(a+b)⋯(a+(j-1)b) / b^j.
    let (a, b) = (s.numer().clone(), s.denom().clone());
    let deg = poly.coeffs().len();
    let mut numer = BigInt::one();
    let mut x = a;
    let mut sum = BigInt::zero();
    let mut bpow = BigInt::one();
    let mut pows = alloc::vec::Vec::with_capacity(deg);
    for _ in 0..deg {
        pows.push(bpow.clone());
        bpow *= &b;
    }
    let top = pows.last().cloned().unwrap_or_else(BigInt::one);
    for (j, c) in poly.coeffs().iter().enumerate() {
        if j > 0 {
            numer *= &x;
            x += &b;
        }
        if !c.is_zero() {
            // c_j numer_j / b^j = c_j numer_j b^{deg-1-j} / b^{deg-1}
            sum += c * &numer * &pows[deg - 1 - j];
        }
    }
    BigRational::new(sum, top)
}

/// `AO(K_{L,1,…,1}) = (n-L)! (n-L+1)^L` with `n - L` singleton parts.
pub fn ao_one_large_part(large: usize, n: usize) -> Result<BigUint> {
    if large > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "large part {large} exceeds vertex count {n}"
        )));
    }
    let rest = n - large;
    Ok(crate::bignum::factorial(rest as u64) * BigUint::from(rest + 1).pow(large as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: &[usize]) -> PartitionSpec {
        PartitionSpec::new(p.iter().copied())
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn product_polynomial_examples() {
        let c = |v: &[i64]| DensePolynomial::new(v.iter().map(|&x| BigInt::from(x)).collect());
        assert_eq!(product_polynomial(&spec(&[2, 2])), c(&[0, 0, 1, -2, 1]));
        assert_eq!(product_polynomial(&spec(&[1])), c(&[0, 1]));
        assert_eq!(product_polynomial(&spec(&[2, 1, 1])), c(&[0, 0, 0, -1, 1]));
        assert_eq!(product_polynomial(&spec(&[])), DensePolynomial::one());
    }

    #[test]
    fn ao_examples() {
        assert_eq!(ao_exact(&spec(&[2, 2])), 14.into());
        assert_eq!(ao_exact(&spec(&[1, 1, 1])), 6.into());
        assert_eq!(ao_exact(&spec(&[3, 3])), 230.into());
        assert_eq!(ao_exact(&spec(&[])), 1.into());
        assert_eq!(ao_exact(&spec(&[5])), 1.into());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_eval(&spec(&[2, 2]), &int(2)), int(2));
        assert_eq!(chromatic_eval(&spec(&[1, 1]), &int(3)), int(6));
        assert_eq!(chromatic_eval(&spec(&[2, 2]), &int(1)), int(0));
    }

    #[test]
    fn h_s_examples() {
        assert_eq!(h_s_exact(&spec(&[1, 1]), &int(2)), int(6));
        // χ_{C4}(-2) = (-3)^4 + (-3) = 78, and 2 T_{C4}(3, 0) = 2 (27 + 9 + 3)
        assert_eq!(h_s_exact(&spec(&[2, 2]), &int(2)), int(78));
        assert_eq!(
            BigRational::from_integer(ao_exact(&spec(&[3, 2, 2]))),
            h_s_exact(&spec(&[3, 2, 2]), &int(1))
        );
    }

    #[test]
    fn h_s_rational_argument_matches_generic_sum() {
        let parts = spec(&[3, 2, 1]);
        let s = BigRational::new(3.into(), 7.into());
        let poly = product_polynomial(&parts);
        let direct: BigRational = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| crate::combinatorics::rising_factorial(&s, j) * BigRational::from_integer(c.clone()))
            .sum();
        assert_eq!(h_s_exact(&parts, &s), direct);
    }

    #[test]
    fn one_large_part_examples() {
        assert_eq!(ao_one_large_part(2, 4).unwrap(), 18u32.into());
        assert_eq!(ao_one_large_part(0, 3).unwrap(), 6u32.into());
        assert_eq!(ao_one_large_part(5, 5).unwrap(), 1u32.into());
        assert!(ao_one_large_part(6, 5).is_err());
        assert_eq!(ao_exact(&spec(&[2, 1, 1])), 18.into());
    }
}
