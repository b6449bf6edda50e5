//! Finite-difference Hessians and the dense factorizations used on them.

use alloc::vec::Vec;

use nalgebra::DMatrix;

/// Relative step for [`fd_hessian`].
///
/// Second differences lose about `ε / h²` to rounding, so the step is kept
/// near `ε^{1/6}`; one Richardson level removes the `O(h²)` truncation term.
pub const FD_REL_STEP: f64 = 2e-3;

/// Central-difference Hessian of `f` at `x` with one Richardson refinement.
///
/// Coordinate `i` uses the step `rel_step * max(|x_i|, 1e-3)`.
pub fn fd_hessian(f: impl Fn(&[f64]) -> f64, x: &[f64], rel_step: f64) -> DMatrix<f64> {
    let centre = f(x);
    let mut point = x.to_vec();
    fd_hessian_of_increment(
        |d| {
            for ((p, x), d) in point.iter_mut().zip(x).zip(d) {
                *p = x + d;
            }
            f(&point) - centre
        },
        x,
        rel_step,
    )
}

/// As [`fd_hessian`], but `increment(d)` returns `f(x + d) - f(x)` directly.
///
/// Rounding in a second difference is relative to the values differenced, so
/// a caller able to form the increment without cancellation gets a Hessian
/// limited by truncation alone.
pub fn fd_hessian_of_increment(
    mut increment: impl FnMut(&[f64]) -> f64,
    x: &[f64],
    rel_step: f64,
) -> DMatrix<f64> {
    let steps: Vec<f64> = x.iter().map(|v| rel_step * v.abs().max(1e-3)).collect();
    let coarse = central_hessian(&mut increment, &steps, 1.0);
    let fine = central_hessian(&mut increment, &steps, 0.5);
    (fine * 4.0 - coarse) / 3.0
}

fn central_hessian(g: &mut impl FnMut(&[f64]) -> f64, steps: &[f64], scale: f64) -> DMatrix<f64> {
    let n = steps.len();
    let mut d = alloc::vec![0.0; n];
    let mut eval = |moves: &[(usize, f64)]| {
        d.iter_mut().for_each(|v| *v = 0.0);
        for &(i, m) in moves {
            d[i] = m;
        }
        g(&d)
    };
    let mut h = DMatrix::zeros(n, n);
    for i in 0..n {
        let hi = steps[i] * scale;
        let plus = eval(&[(i, hi)]);
        let minus = eval(&[(i, -hi)]);
        h[(i, i)] = (plus + minus) / (hi * hi);
        for j in 0..i {
            let hj = steps[j] * scale;
            let pp = eval(&[(i, hi), (j, hj)]);
            let pm = eval(&[(i, hi), (j, -hj)]);
            let mp = eval(&[(i, -hi), (j, hj)]);
            let mm = eval(&[(i, -hi), (j, -hj)]);
            let v = (pp - pm - mp + mm) / (4.0 * hi * hj);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}

/// Determinant by LU factorization.
pub fn determinant(m: &DMatrix<f64>) -> f64 {
    m.clone().lu().determinant()
}

/// Solves `m x = b`; `None` when `m` is singular.
pub fn solve(m: &DMatrix<f64>, b: &[f64]) -> Option<Vec<f64>> {
    let rhs = nalgebra::DVector::from_column_slice(b);
    m.clone().lu().solve(&rhs).map(|v| v.iter().copied().collect())
}

/// Leading principal minors `D_1, …, D_n`.
pub fn leading_minors(m: &DMatrix<f64>) -> Vec<f64> {
    (1..=m.nrows())
        .map(|k| determinant(&m.view((0, 0), (k, k)).into_owned()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hessian_of_quadratic_form() {
        let f = |x: &[f64]| 1.5 * x[0] * x[0] + x[0] * x[1] - 0.25 * x[1] * x[1] + x[1];
        let h = fd_hessian(f, &[0.7, -1.2], FD_REL_STEP);
        let expected = DMatrix::from_row_slice(2, 2, &[3.0, 1.0, 1.0, -0.5]);
        assert!((h - expected).amax() < 1e-9);
    }

    #[test]
    fn hessian_of_log_sum() {
        // f = log(x + y + z): H = -J / s²
        let f = |x: &[f64]| (x[0] + x[1] + x[2]).ln();
        let x = [0.4, 0.5, 0.6];
        let h = fd_hessian(f, &x, FD_REL_STEP);
        let s: f64 = x.iter().sum();
        assert!(h.iter().all(|v| (v + 1.0 / (s * s)).abs() < 1e-8));
    }

    #[test]
    fn minors_and_solve() {
        let m = DMatrix::from_row_slice(3, 3, &[2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0]);
        let d = leading_minors(&m);
        assert!((d[0] - 2.0).abs() < 1e-14 && (d[1] - 3.0).abs() < 1e-14 && (d[2] - 4.0).abs() < 1e-13);
        let x = solve(&m, &[1.0, 0.0, 1.0]).unwrap();
        assert!(x.iter().all(|v| (v - 1.0).abs() < 1e-14));
        let singular = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(solve(&singular, &[1.0, 1.0]).is_none());
    }
}
