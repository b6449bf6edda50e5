#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use super::{check_s, ln_factorial, ln_gamma, AsymptoticValue};
use crate::{Error, Result};

/// `γ_1, …, γ_5` in the equal-size window exponent.
pub const WINDOW_GAMMAS: [f64; 5] = [
    -5.0 / 24.0,
    -1.0 / 8.0,
    -251.0 / 2880.0,
    -19.0 / 288.0,
    -19087.0 / 362880.0,
];

/// `L = log(p / (p - 1))`.
fn turan_l(p: usize) -> f64 {
    (1.0 / (p as f64 - 1.0)).ln_1p()
}

fn check_turan(n: usize, p: usize) -> Result<()> {
    if n == 0 || p < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "need N >= 1 and p >= 2, got N = {n}, p = {p}"
        )));
    }
    Ok(())
}

/// Acyclic orientations of the balanced `p`-partite Turán graph on `N` vertices:
/// `N! / ((p-1) (1-L)^{(p-1)/2} p^N L^{N+1})`.
pub fn asy_turan(n: usize, p: usize) -> Result<AsymptoticValue> {
    check_turan(n, p)?;
    let l = turan_l(p);
    let (nf, pf) = (n as f64, p as f64);
    let log = ln_factorial(n)
        - (pf - 1.0).ln()
        - 0.5 * (pf - 1.0) * (-l).ln_1p()
        - nf * pf.ln()
        - (nf + 1.0) * l.ln();
    Ok(AsymptoticValue::new(log).with("L", l))
}

/// `H_s` of the Turán graph:
/// `N! N^{s-1} / (Γ(s) (p-1)^s (1-L)^{(p-1)/2} p^N L^{N+s})`.
pub fn asy_turan_tutte(n: usize, p: usize, s: f64) -> Result<AsymptoticValue> {
    check_turan(n, p)?;
    check_s(s)?;
    let l = turan_l(p);
    let (nf, pf) = (n as f64, p as f64);
    let lg = ln_gamma(s);
    let log = ln_factorial(n) + (s - 1.0) * nf.ln()
        - lg
        - s * (pf - 1.0).ln()
        - 0.5 * (pf - 1.0) * (-l).ln_1p()
        - nf * pf.ln()
        - (nf + s) * l.ln();
    Ok(AsymptoticValue::new(log)
        .with("L", l)
        .with("log_gamma_s", lg))
}

/// `Δ_{k,s} = -(k-1)(5k-7)/24 + s(s-1)/2 + (s-1)(k-1)/2`.
pub fn fixed_part_delta(k: usize, s: f64) -> f64 {
    let k = k as f64;
    -(k - 1.0) * (5.0 * k - 7.0) / 24.0 + s * (s - 1.0) / 2.0 + (s - 1.0) * (k - 1.0) / 2.0
}

/// `r` parts of size `k`:
/// `(kr)! (kr)^{s-1} / Γ(s) · e^{-(k-1)/2} · (1 + Δ_{k,s} / (kr))`, the last
/// factor only when `corrected`.
pub fn asy_fixed_part(k: usize, r: usize, s: f64, corrected: bool) -> Result<AsymptoticValue> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidArgument("k and r must be positive".into()));
    }
    check_s(s)?;
    let n = k * r;
    let nf = n as f64;
    let delta = fixed_part_delta(k, s);
    let mut log = ln_factorial(n) + (s - 1.0) * nf.ln() - ln_gamma(s) - (k as f64 - 1.0) / 2.0;
    if corrected {
        log += (delta / nf).ln_1p();
    }
    Ok(AsymptoticValue::new(log).with("delta", delta))
}

/// Finite part-size profile; `profile[j - 1]` is the number of parts of size `j`.
///
/// `e^{μ1} N! N^{s-1} / Γ(s) · (1 + (μ2 + (1-s)μ1 + μ1²/2 + s(s-1)/2) / N)`.
pub fn asy_finite_profile(profile: &[usize], s: f64) -> Result<AsymptoticValue> {
    check_s(s)?;
    let n: usize = profile.iter().enumerate().map(|(i, r)| (i + 1) * r).sum();
    if n == 0 {
        return Err(Error::InvalidArgument("profile has no vertices".into()));
    }
    let nf = n as f64;
    let (mut sum_a, mut sum_e) = (0.0, 0.0);
    for (i, &r) in profile.iter().enumerate() {
        let j = (i + 1) as f64;
        let a = -j * (j - 1.0) / 2.0;
        let b = j * (j - 1.0) * (j - 2.0) * (3.0 * j - 5.0) / 24.0;
        sum_a += r as f64 * a;
        sum_e += r as f64 * (b - a * a / 2.0);
    }
    let mu1 = sum_a / nf;
    let mu2 = sum_e / nf;
    let correction = mu2 + (1.0 - s) * mu1 + mu1 * mu1 / 2.0 + s * (s - 1.0) / 2.0;
    let log = mu1 + ln_factorial(n) + (s - 1.0) * nf.ln() - ln_gamma(s) + (correction / nf).ln_1p();
    Ok(AsymptoticValue::new(log)
        .with("mu1", mu1)
        .with("mu2", mu2)
        .with("correction", correction))
}

/// `n` parts of size `m`:
/// `(mn)! (mn)^{s-1} / Γ(s) · exp(-m/2 + 1/2 + Σ_{j ≤ order} γ_j m / n^j)`.
pub fn asy_equal_window(m: usize, n: usize, order: usize, s: f64) -> Result<AsymptoticValue> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    if !(1..=WINDOW_GAMMAS.len()).contains(&order) {
        return Err(Error::InvalidArgument(alloc::format!(
            "order must be in 1..=5, got {order}"
        )));
    }
    check_s(s)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut exponent = -mf / 2.0 + 0.5;
    let mut power = 1.0;
    for gamma in &WINDOW_GAMMAS[..order] {
        power *= nf;
        exponent += gamma * mf / power;
    }
    let total = (m * n) as f64;
    let log = ln_factorial(m * n) + (s - 1.0) * total.ln() - ln_gamma(s) + exponent;
    Ok(AsymptoticValue::new(log).with("exponent", exponent))
}

/// Per-`√n` bound on `log(U_A(n)/n!)` for partitions whose largest part is
/// at least `A n^{3/4}`: `π√(2/3) - A²/2`, or `π/√3 - A²/2` for distinct parts.
pub fn far_tail_bound(a: f64, distinct: bool) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidArgument(alloc::format!(
            "A must be positive, got {a}"
        )));
    }
    let pi = core::f64::consts::PI;
    let base = if distinct {
        pi / 3f64.sqrt()
    } else {
        pi * (2.0f64 / 3.0).sqrt()
    };
    Ok(base - a * a / 2.0)
}
