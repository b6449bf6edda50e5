use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DensePolynomial, StirlingTable};
use crate::{Error, Result};

/// Truncated series `Σ_{ℓ=1}^{order} a_ℓ t^{-ℓ}` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTruncation {
    coeffs: Vec<BigRational>,
}

impl LaurentTruncation {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^{-ell}`, `1 <= ell <= order`.
    pub fn coeff(&self, ell: usize) -> Option<&BigRational> {
        ell.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// `s (s+1) ⋯ (s+j-1)`; `1` for `j = 0`.
pub fn rising_factorial(s: &BigRational, j: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = s.clone();
    for _ in 0..j {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

/// `q (q-1) ⋯ (q-j+1)`; `1` for `j = 0`.
pub fn falling_factorial(q: &BigRational, j: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = q.clone();
    for _ in 0..j {
        acc *= &x;
        x -= BigRational::one();
    }
    acc
}

/// Formal expansion of `log(P_m(t) / t^m)` in powers of `1/t`, up to `order`.
///
/// `P_m(t)/t^m = 1 + u(w)` with `w = 1/t` and
/// `u(w) = Σ_{ℓ=1}^{m-1} (-1)^ℓ S(m, m-ℓ) w^ℓ`; the logarithm is taken through
/// `Σ_k (-1)^{k+1} u^k / k`.
pub fn log_pm_series(m: usize, order: usize) -> Result<LaurentTruncation> {
    log_pm_series_with(&mut StirlingTable::new(), m, order)
}

pub(crate) fn log_pm_series_with(
    table: &mut StirlingTable,
    m: usize,
    order: usize,
) -> Result<LaurentTruncation> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if order == 0 || order > m {
        return Err(Error::SeriesOrder { m, order });
    }
    let row = table.row(m);
    // u[0] = 0, u[ℓ] for ℓ = 1..=order
    let mut u = vec![BigRational::zero(); order + 1];
    for (ell, slot) in u.iter_mut().enumerate().take(order.min(m - 1) + 1).skip(1) {
        let s = BigRational::from_integer(BigInt::from(row[m - ell].clone()));
        *slot = if ell % 2 == 0 { s } else { -s };
    }

    let mut out = vec![BigRational::zero(); order + 1];
    let mut power = u.clone();
    for k in 1..=order {
        let scale = BigRational::new(if k % 2 == 1 { 1 } else { -1 }.into(), BigInt::from(k));
        for (o, p) in out.iter_mut().zip(&power) {
            if !p.is_zero() {
                *o += p * &scale;
            }
        }
        if k < order {
            power = truncated_mul(&power, &u, order);
        }
    }
    out.remove(0);
    Ok(LaurentTruncation { coeffs: out })
}

fn truncated_mul(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// The polynomial `L_ℓ(m)` giving the `t^{-ℓ}` coefficient of
/// `log(P_m(t)/t^m)` as a function of `m`.
///
/// Interpolates through `degree_hint + 1` samples starting at `m = ℓ + 1` and
/// checks two further samples; a wrong `degree_hint` surfaces as
/// [`Error::InterpolationMismatch`].
pub fn collision_polynomial(ell: usize, degree_hint: usize) -> Result<DensePolynomial<BigRational>> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be positive".into()));
    }
    let mut table = StirlingTable::new();
    let first = ell + 1;
    let samples = degree_hint + 1;
    let mut xs = Vec::with_capacity(samples + 2);
    let mut ys = Vec::with_capacity(samples + 2);
    for m in first..first + samples + 2 {
        let series = log_pm_series_with(&mut table, m, ell)?;
        xs.push(BigRational::from_integer(BigInt::from(m)));
        ys.push(series.coeff(ell).unwrap().clone());
    }
    let poly = newton_interpolate(&xs[..samples], &ys[..samples]);
    for (k, (x, y)) in xs.iter().zip(&ys).enumerate().skip(samples) {
        if &poly.eval(x) != y {
            return Err(Error::InterpolationMismatch { m: first + k });
        }
    }
    Ok(poly)
}

/// Interpolating polynomial through `(xs[i], ys[i])`, in monomial form.
fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> DensePolynomial<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form: p = dd[n-1]; p = p (x - xs[i]) + dd[i].
    let mut p: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        p = next;
    }
    DensePolynomial::new(p)
}
