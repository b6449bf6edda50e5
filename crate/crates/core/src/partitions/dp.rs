use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::combinatorics::{DensePolynomial, StirlingTable};
use crate::exact::gamma_weighted_sum;

/// Coefficient DP for `Π_k 1/(1 - u^k P_k(t))` (or `Π_k (1 + u^k P_k(t))`
/// for distinct parts), with parts restricted to `k <= max_part`.
///
/// `coeff_poly(m)` is the `u^m` coefficient, a polynomial in `t` of degree
/// at most `m`; its Gamma-weighted sum is the partition sum at `m`.
#[derive(Clone, Debug)]
pub struct PartitionDp {
    n_max: usize,
    distinct: bool,
    max_part: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl PartitionDp {
    pub fn new(n_max: usize, distinct: bool, max_part: Option<usize>) -> Self {
        let max_part = max_part.unwrap_or(n_max).min(n_max);
        let mut coeffs = alloc::vec![Vec::new(); n_max + 1];
        coeffs[0] = alloc::vec![BigInt::from(1)];
        Self {
            n_max,
            distinct,
            max_part,
            coeffs,
        }
    }

    /// Runs every part size, calling `progress(k)` after part size `k`.
    pub fn run(mut self, mut progress: impl FnMut(usize)) -> Self {
        let mut table = StirlingTable::with_max(self.max_part);
        for k in 1..=self.max_part {
            let pk = table.pm_polynomial(k).expect("k >= 1").into_coeffs();
            if self.distinct {
                for m in (k..=self.n_max).rev() {
                    self.absorb(m, k, &pk);
                }
            } else {
                for m in k..=self.n_max {
                    self.absorb(m, k, &pk);
                }
            }
            progress(k);
        }
        self
    }

    /// `coeff[m] += coeff[m-k] * P_k`
    fn absorb(&mut self, m: usize, k: usize, pk: &[BigInt]) {
        let (lo, hi) = self.coeffs.split_at_mut(m);
        let src = &lo[m - k];
        if src.is_empty() {
            return;
        }
        let dst = &mut hi[0];
        let need = src.len() + pk.len() - 1;
        if dst.len() < need {
            dst.resize(need, BigInt::default());
        }
        crate::combinatorics::poly_add_product_into(dst, src, pk);
    }

    pub fn coeff_poly(&self, m: usize) -> DensePolynomial {
        DensePolynomial::new(self.coeffs[m].clone())
    }

    pub fn sum(&self, m: usize) -> BigInt {
        gamma_weighted_sum(&self.coeff_poly(m))
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn max_part(&self) -> usize {
        self.max_part
    }

    pub fn distinct(&self) -> bool {
        self.distinct
    }
}

/// `Σ_{λ ⊢ n, λ_1 <= max_part} AO(K_λ)`, over distinct-part partitions when
/// `distinct` is set. `max_part` defaults to `n`.
pub fn partition_sum(n: usize, distinct: bool, max_part: Option<usize>) -> BigInt {
    PartitionDp::new(n, distinct, max_part).run(|_| {}).sum(n)
}

/// Untruncated sums for every `m <= n` from a single DP pass.
pub fn partition_sums_upto(n: usize, distinct: bool, progress: impl FnMut(usize)) -> Vec<BigInt> {
    let dp = PartitionDp::new(n, distinct, None).run(progress);
    (0..=n).map(|m| dp.sum(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sums() {
        assert_eq!(partition_sum(3, false, None), 11.into());
        assert_eq!(partition_sum(4, true, None), 9.into());
        assert_eq!(partition_sum(0, false, None), 1.into());
        assert_eq!(partition_sum(0, true, None), 1.into());
        // max_part = 1 leaves only K_n
        assert_eq!(partition_sum(5, false, Some(1)), 120.into());
    }

    #[test]
    fn coefficient_polynomial_shape() {
        let dp = PartitionDp::new(8, false, None).run(|_| {});
        assert_eq!(dp.coeff_poly(0), DensePolynomial::one());
        for m in 1..=8 {
            assert_eq!(dp.coeff_poly(m).degree(), Some(m));
        }
    }

    #[test]
    fn sums_upto_agree_with_single_runs() {
        let all = partition_sums_upto(12, true, |_| {});
        for (m, v) in all.iter().enumerate() {
            assert_eq!(v, &partition_sum(m, true, None));
        }
    }
}
