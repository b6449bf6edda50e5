#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::{check_s, ln_factorial, ln_gamma, AsymptoticValue};
use crate::linalg::{determinant, fd_hessian, leading_minors, FD_REL_STEP};
use crate::{Error, Result};

/// Largest base accepted; independent sets are enumerated exhaustively.
pub const MAX_BASE_VERTICES: usize = 20;

/// A small base graph `H` whose vertices are blown up into independent sets.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowupBase {
    p: usize,
    edges: Vec<(usize, usize)>,
    independent_sets: Vec<u32>,
    independence: Vec<u64>,
    tau: f64,
    r: f64,
    a_h: f64,
}

impl BlowupBase {
    /// Builds the base from an edge list on vertices `0..p` and locates the
    /// smallest root `τ ∈ (0, 1)` of `I_H(-τ)`.
    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if p < 2 || p > MAX_BASE_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "base needs 2..={MAX_BASE_VERTICES} vertices, got {p}"
            )));
        }
        let mut adjacency = alloc::vec![0u32; p];
        for &(u, v) in edges {
            if u >= p || v >= p || u == v {
                return Err(Error::InvalidArgument(format!("bad edge ({u}, {v})")));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        let independent_sets: Vec<u32> = (0u32..1 << p)
            .filter(|&set| (0..p).all(|i| set & (1 << i) == 0 || adjacency[i] & set == 0))
            .collect();
        let mut independence = alloc::vec![0u64; p + 1];
        for set in &independent_sets {
            independence[set.count_ones() as usize] += 1;
        }
        while independence.last() == Some(&0) {
            independence.pop();
        }
        let tau = smallest_root(&independence).ok_or_else(|| {
            Error::Infeasible("independence polynomial has no root -τ with τ in (0, 1)".into())
        })?;
        let r = -(-tau).ln_1p();
        let derivative: f64 = independence
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c as f64 * (-tau).powi(k as i32 - 1))
            .sum();
        let a_h = r * (1.0 - tau) * derivative / p as f64;
        Ok(Self {
            p,
            edges: edges.to_vec(),
            independent_sets,
            independence,
            tau,
            r,
            a_h,
        })
    }

    /// The complete graph `K_p`.
    pub fn complete(p: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..p)
            .flat_map(|i| (i + 1..p).map(move |j| (i, j)))
            .collect();
        Self::new(p, &edges)
    }

    /// The cycle `C_p` with edges `(i, i+1 mod p)`.
    pub fn cycle(p: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
        Self::new(p, &edges)
    }

    pub fn vertices(&self) -> usize {
        self.p
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Coefficients of `I_H(z) = Σ_{I independent} z^{|I|}`.
    pub fn independence_polynomial(&self) -> &[u64] {
        &self.independence
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// `R = -log(1 - τ)`.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// `A_H = R (1 - τ) I_H'(-τ) / p`.
    pub fn a_h(&self) -> f64 {
        self.a_h
    }

    /// `F_H(y) = Σ_{I independent} Π_{i ∈ I} (e^{-y_i} - 1)`.
    pub fn f(&self, y: &[f64]) -> f64 {
        let z: Vec<f64> = y.iter().map(|v| (-v).exp_m1()).collect();
        self.independent_sets
            .iter()
            .map(|&set| product_over(set, &z))
            .sum()
    }

    /// `∂F_H / ∂y_last`.
    fn f_last(&self, y: &[f64]) -> f64 {
        let last = self.p - 1;
        let bit = 1u32 << last;
        let z: Vec<f64> = y.iter().map(|v| (-v).exp_m1()).collect();
        let inner: f64 = self
            .independent_sets
            .iter()
            .filter(|&&set| set & bit != 0)
            .map(|&set| product_over(set & !bit, &z))
            .sum();
        -(-y[last]).exp() * inner
    }

    /// Solves `F_H(y', h) = 0` for `h` near `R`.
    fn implicit_last(&self, head: &[f64]) -> Option<f64> {
        let mut y = head.to_vec();
        y.push(self.r);
        for _ in 0..60 {
            let d = self.f_last(&y);
            if d == 0.0 || !d.is_finite() {
                return None;
            }
            let step = self.f(&y) / d;
            y[self.p - 1] -= step;
            if step.abs() <= 4.0 * f64::EPSILON * y[self.p - 1].abs() {
                return Some(y[self.p - 1]);
            }
        }
        None
    }

    /// Reduced phase `-(1/p) (Σ_{i<p} log y_i + log h(y))` at the balanced direction.
    fn balanced_phase(&self, head: &[f64]) -> f64 {
        match self.implicit_last(head) {
            Some(h) if h > 0.0 => {
                -(head.iter().map(|v| v.ln()).sum::<f64>() + h.ln()) / self.p as f64
            }
            _ => f64::NAN,
        }
    }

    /// Finite-difference reduced Hessian at `y_1 = … = y_{p-1} = R`.
    pub fn reduced_hessian(&self) -> Result<DMatrix<f64>> {
        let centre = alloc::vec![self.r; self.p - 1];
        let h = fd_hessian(|y| self.balanced_phase(y), &centre, FD_REL_STEP);
        if h.iter().any(|v| !v.is_finite()) {
            return Err(Error::Infeasible(
                "implicit solve for the eliminated coordinate is singular".into(),
            ));
        }
        Ok(h)
    }
}

fn product_over(set: u32, z: &[f64]) -> f64 {
    let mut prod = 1.0;
    let mut bits = set;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        prod *= z[i];
        bits &= bits - 1;
    }
    prod
}

/// Smallest `τ ∈ (0, 1)` with `Σ c_k (-τ)^k = 0`, by a sign scan and bisection.
fn smallest_root(coeffs: &[u64]) -> Option<f64> {
    let eval = |t: f64| {
        coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * -t + c as f64)
    };
    const STEPS: usize = 4096;
    let mut lo = 0.0;
    let mut f_lo = eval(lo);
    for i in 1..STEPS {
        let hi = i as f64 / STEPS as f64;
        let f_hi = eval(hi);
        if f_hi == 0.0 {
            return Some(hi);
        }
        if f_hi.signum() != f_lo.signum() {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let f_mid = eval(mid);
                if f_mid == 0.0 {
                    return Some(mid);
                }
                if f_mid.signum() == f_lo.signum() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return Some(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    None
}

/// `H_s` of the balanced blow-up `H[λ]` of a vertex-transitive base, parts as
/// equal as possible:
///
/// `Π λ_i! (N/p)^{s-1}/Γ(s) · A_H^{-s} / R^{p-1} · R^{-N} / ((2πN)^{(p-1)/2} √det ℋ_H)`.
///
/// Vertex transitivity is the caller's responsibility.
pub fn blowup_vertex_transitive(base: &BlowupBase, n: usize, s: f64) -> Result<AsymptoticValue> {
    check_s(s)?;
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let p = base.p;
    let (pf, nf) = (p as f64, n as f64);
    let hessian = base.reduced_hessian()?;
    let det = determinant(&hessian);
    if !(det > 0.0) {
        return Err(Error::Infeasible(format!(
            "reduced Hessian is not positive definite (det = {det:e})"
        )));
    }
    let log_factorials: f64 = (0..p)
        .map(|i| ln_factorial(n / p + usize::from(i < n % p)))
        .sum();
    let r = base.r;
    let log = log_factorials + (s - 1.0) * (nf / pf).ln() - ln_gamma(s) - s * base.a_h.ln()
        - (pf - 1.0) * r.ln()
        - nf * r.ln()
        - 0.5 * (pf - 1.0) * (2.0 * core::f64::consts::PI * nf).ln()
        - 0.5 * det.ln();
    Ok(AsymptoticValue::new(log)
        .with("tau", base.tau)
        .with("R", r)
        .with("A_H", base.a_h)
        .with("hessian_det", det)
        .with("log_factorials", log_factorials))
}

/// Outcome of the `C_5` nondegeneracy check.
#[derive(Clone, Debug, PartialEq)]
pub struct C5Report {
    pub tau: f64,
    pub r: f64,
    /// Leading principal minors of `I_4 + J_4 - R K`.
    pub minors: [f64; 4],
    /// `max |5R² ℋ - (I_4 + J_4 - R K)|` with `ℋ` from finite differences.
    pub matrix_match_error: f64,
}

/// The matrix `K = (h_ij)` of second derivatives of the eliminated
/// coordinate at the symmetric `C_5` point.
pub fn c5_k_matrix() -> DMatrix<f64> {
    let s5 = 5f64.sqrt();
    let a = (1.0 - s5) / 2.0;
    let b = (3.0 + s5) / 2.0;
    DMatrix::from_row_slice(
        4,
        4,
        &[
            2.0, a, 1.0, b, //
            a, 1.0 - s5, -s5, 1.0, //
            1.0, -s5, 1.0 - s5, a, //
            b, 1.0, a, 2.0,
        ],
    )
}

/// Compares the finite-difference reduced Hessian of the balanced `C_5`
/// saddle with `(I_4 + J_4 - R K) / (5R²)` and reports Sylvester's minors.
pub fn c5_hessian_check() -> Result<C5Report> {
    let base = BlowupBase::cycle(5)?;
    let r = base.r;
    let closed = DMatrix::<f64>::identity(4, 4) + DMatrix::from_element(4, 4, 1.0) - c5_k_matrix() * r;
    let fd = base.reduced_hessian()? * (5.0 * r * r);
    let minors = leading_minors(&closed);
    Ok(C5Report {
        tau: base.tau,
        r,
        minors: [minors[0], minors[1], minors[2], minors[3]],
        matrix_match_error: (fd - closed).amax(),
    })
}
