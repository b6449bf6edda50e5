use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::DensePolynomial;
use crate::{Error, Result};

/// Triangle of Stirling numbers of the second kind, grown on demand by
/// `S(m, j) = j S(m-1, j) + S(m-1, j-1)`.
///
/// A table is an ordinary value: share a finished one immutably across
/// threads, or give each thread its own.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

impl StirlingTable {
    pub fn new() -> Self {
        Self {
            rows: alloc::vec![alloc::vec![BigUint::one()]],
        }
    }

    pub fn with_max(max_m: usize) -> Self {
        let mut t = Self::new();
        t.ensure(max_m);
        t
    }

    /// Largest `m` currently stored.
    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn ensure(&mut self, max_m: usize) {
        while self.rows.len() <= max_m {
            let prev = self.rows.last().unwrap();
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::zero());
            for j in 1..=m {
                let mut v = prev.get(j - 1).cloned().unwrap_or_default();
                if j < prev.len() {
                    v += &prev[j] * BigUint::from(j);
                }
                row.push(v);
            }
            self.rows.push(row);
        }
    }

    /// Row `m`: `S(m, 0..=m)`.
    pub fn row(&mut self, m: usize) -> &[BigUint] {
        self.ensure(m);
        &self.rows[m]
    }

    /// Stored row, if already computed.
    pub fn stored_row(&self, m: usize) -> Option<&[BigUint]> {
        self.rows.get(m).map(Vec::as_slice)
    }

    pub fn get(&mut self, m: usize, j: usize) -> BigUint {
        if j > m {
            return BigUint::zero();
        }
        self.row(m)[j].clone()
    }

    /// `P_m(t) = Σ_{j=1}^m (-1)^{m+j} S(m,j) t^j`.
    pub fn pm_polynomial(&mut self, m: usize) -> Result<DensePolynomial> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "P_m is defined for m >= 1".into(),
            ));
        }
        let coeffs = self
            .row(m)
            .iter()
            .enumerate()
            .map(|(j, s)| {
                let v = BigInt::from(s.clone());
                if (m + j) % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        Ok(DensePolynomial::new(coeffs))
    }
}

/// `S(m, j)` from a fresh table.
pub fn stirling2(m: usize, j: usize) -> BigUint {
    StirlingTable::new().get(m, j)
}

/// `P_m(t)` from a fresh table.
pub fn pm_polynomial(m: usize) -> Result<DensePolynomial> {
    StirlingTable::new().pm_polynomial(m)
}
