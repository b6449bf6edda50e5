#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::{check_s, ln_factorial, ln_gamma, AsymptoticValue};
use crate::linalg::{determinant, fd_hessian_of_increment, solve, FD_REL_STEP};
use crate::{Error, Result};

const MAX_NEWTON: usize = 100;
const NEWTON_TOL: f64 = 1e-14;

/// Which side of `e^{-1}` a coordinate `z_i = e^{-r_i}` falls on; `-z log z`
/// increases below it and decreases above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Increasing,
    Decreasing,
}

/// Solution of `Σ e^{-r_i} = p - 1`, `α_i / (r_i e^{-r_i})` independent of `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoint {
    pub alphas: Vec<f64>,
    pub r: Vec<f64>,
    /// `Φ(r_1, …, r_{p-1}) = -Σ_i α_i log r_i`.
    pub phi: f64,
    /// Finite-difference Hessian of `Φ` in the first `p - 1` coordinates.
    pub hessian: DMatrix<f64>,
    pub hessian_det: f64,
    /// `|Σ e^{-r_i} - (p - 1)|`.
    pub singular_residual: f64,
    /// Largest deviation of `α_i / (r_i e^{-r_i})` from their mean.
    pub ratio_residual: f64,
    pub branches: Vec<Branch>,
    pub iterations: usize,
}

/// `Φ(r' + d) - Φ(r')` for `Φ(y) = -Σ_{i<p} α_i log y_i - α_p log h(y)`,
/// `e^{-h(y)} = (p-1) - Σ_{i<p} e^{-y_i}`, formed from `log1p`/`expm1` so
/// the increment carries no cancellation.
fn phase_increment(alphas: &[f64], r: &[f64], d: &[f64]) -> f64 {
    let p = alphas.len();
    let rp = r[p - 1];
    // e^{-h(r'+d)} = e^{-r_p} - Σ e^{-r_i} (e^{-d_i} - 1)
    let shift: f64 = r[..p - 1]
        .iter()
        .zip(d)
        .map(|(ri, di)| (-ri).exp() * (-di).exp_m1())
        .sum();
    let dh = -(-shift / (-rp).exp()).ln_1p();
    -alphas[..p - 1]
        .iter()
        .zip(r)
        .zip(d)
        .map(|((a, ri), di)| a * (di / ri).ln_1p())
        .sum::<f64>()
        - alphas[p - 1] * (dh / rp).ln_1p()
}

fn validate_alphas(alphas: &[f64]) -> Result<()> {
    if alphas.len() < 2 {
        return Err(Error::InvalidArgument("need at least two proportions".into()));
    }
    if alphas.iter().any(|a| !(*a > 0.0) || !a.is_finite()) {
        return Err(Error::InvalidArgument("proportions must be positive".into()));
    }
    let total: f64 = alphas.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "proportions must sum to 1, got {total}"
        )));
    }
    Ok(())
}

/// Residuals `log α_i - log r_i + r_i - κ` followed by `Σ e^{-r_i} - (p-1)`.
fn residuals(alphas: &[f64], r: &[f64], kappa: f64) -> Vec<f64> {
    let p = alphas.len();
    let mut f: Vec<f64> = alphas
        .iter()
        .zip(r)
        .map(|(a, ri)| a.ln() - ri.ln() + ri - kappa)
        .collect();
    f.push(r.iter().map(|v| (-v).exp()).sum::<f64>() - (p as f64 - 1.0));
    f
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Newton iteration for the critical system from the balanced point
/// `r_i = log(p / (p - 1))`.
///
/// Only near-uniform `α` are covered by the asymptotic theorem; elsewhere a
/// positive solution need not exist or be the dominant singularity, and the
/// returned [`Branch`] list is the caller's diagnostic.
pub fn solve_fixed_proportion(alphas: &[f64]) -> Result<CriticalPoint> {
    validate_alphas(alphas)?;
    let p = alphas.len();
    let l = (1.0 / (p as f64 - 1.0)).ln_1p();
    let mut r = alloc::vec![l; p];
    let mut kappa = alphas.iter().map(|a| a.ln()).sum::<f64>() / p as f64 - l.ln() + l;
    let mut f = residuals(alphas, &r, kappa);
    let mut iterations = 0;
    while max_abs(&f) > NEWTON_TOL {
        if iterations == MAX_NEWTON {
            return Err(no_convergence(iterations, max_abs(&f)));
        }
        iterations += 1;
        let mut jac = DMatrix::zeros(p + 1, p + 1);
        for i in 0..p {
            jac[(i, i)] = 1.0 - 1.0 / r[i];
            jac[(i, p)] = -1.0;
            jac[(p, i)] = -(-r[i]).exp();
        }
        let rhs: Vec<f64> = f.iter().map(|v| -v).collect();
        let step = solve(&jac, &rhs).ok_or_else(|| no_convergence(iterations, max_abs(&f)))?;
        let current = max_abs(&f);
        let mut t = 1.0;
        loop {
            let trial: Vec<f64> = r.iter().zip(&step).map(|(ri, d)| ri + t * d).collect();
            if trial.iter().all(|v| *v > 0.0) {
                let k = kappa + t * step[p];
                let g = residuals(alphas, &trial, k);
                if max_abs(&g) < current || t < 1e-3 {
                    r = trial;
                    kappa = k;
                    f = g;
                    break;
                }
            }
            t *= 0.5;
            if t < 1e-9 {
                return Err(no_convergence(iterations, current));
            }
        }
    }

    let ratios: Vec<f64> = alphas
        .iter()
        .zip(&r)
        .map(|(a, ri)| a / (ri * (-ri).exp()))
        .collect();
    let mean = ratios.iter().sum::<f64>() / p as f64;
    let ratio_residual = ratios.iter().fold(0.0f64, |m, v| m.max((v - mean).abs()));
    let singular_residual = f[p].abs();
    let phi = -alphas.iter().zip(&r).map(|(a, ri)| a * ri.ln()).sum::<f64>();
    let hessian = fd_hessian_of_increment(|d| phase_increment(alphas, &r, d), &r[..p - 1], FD_REL_STEP);
    let hessian_det = determinant(&hessian);
    let threshold = (-1.0f64).exp();
    let branches = r
        .iter()
        .map(|ri| {
            if (-ri).exp() < threshold {
                Branch::Increasing
            } else {
                Branch::Decreasing
            }
        })
        .collect();
    Ok(CriticalPoint {
        alphas: alphas.to_vec(),
        r,
        phi,
        hessian,
        hessian_det,
        singular_residual,
        ratio_residual,
        branches,
        iterations,
    })
}

fn no_convergence(iterations: usize, residual: f64) -> Error {
    Error::NoConvergence {
        solver: "fixed-proportion critical system (the asymptotic is conditional away from balance)",
        iterations,
        residual,
    }
}

/// `H_s` of `K_{λ_1,…,λ_p}` with `λ_i = α_i N + δ_i`:
///
/// `Π λ_i! · Π r_i^{-δ_i} · λ_p^{s-1}/Γ(s) · e^{s r_p} / (r_p^s Π_{i<p} r_i)
///  · exp(NΦ) / ((2πN)^{(p-1)/2} √det ℋ)`.
///
/// `lambdas` and `alphas` are matched by position.
pub fn asy_fixed_proportion(lambdas: &[usize], alphas: &[f64], s: f64) -> Result<AsymptoticValue> {
    check_s(s)?;
    if lambdas.len() != alphas.len() {
        return Err(Error::InvalidArgument(format!(
            "{} parts but {} proportions",
            lambdas.len(),
            alphas.len()
        )));
    }
    if lambdas.iter().any(|&l| l == 0) {
        return Err(Error::InvalidArgument("parts must be positive".into()));
    }
    let cp = solve_fixed_proportion(alphas)?;
    if !(cp.hessian_det > 0.0) {
        return Err(Error::Infeasible(format!(
            "reduced Hessian is not positive definite (det = {:e})",
            cp.hessian_det
        )));
    }
    let p = lambdas.len();
    let n: usize = lambdas.iter().sum();
    let nf = n as f64;
    let rp = cp.r[p - 1];
    let log_factorials: f64 = lambdas.iter().map(|&l| ln_factorial(l)).sum();
    let rounding: f64 = -lambdas
        .iter()
        .zip(alphas)
        .zip(&cp.r)
        .map(|((&l, a), ri)| (l as f64 - a * nf) * ri.ln())
        .sum::<f64>();
    let local = (s - 1.0) * (lambdas[p - 1] as f64).ln() - ln_gamma(s) + s * rp
        - s * rp.ln()
        - cp.r[..p - 1].iter().map(|v| v.ln()).sum::<f64>();
    let gaussian = nf * cp.phi
        - 0.5 * (p as f64 - 1.0) * (2.0 * core::f64::consts::PI * nf).ln()
        - 0.5 * cp.hessian_det.ln();
    let log = log_factorials + rounding + local + gaussian;
    Ok(AsymptoticValue::new(log)
        .with("phi", cp.phi)
        .with("hessian_det", cp.hessian_det)
        .with("log_rounding", rounding)
        .with("log_factorials", log_factorials)
        .with("r_p", rp))
}
