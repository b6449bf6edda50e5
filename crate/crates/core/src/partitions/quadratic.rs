#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;

use super::Partitions;
use crate::{Error, Result};

/// Largest `n` accepted by [`quadratic_model_bruteforce`].
pub const MAX_BRUTEFORCE_N: usize = 30;

/// Weights below this are dropped from the DP.
const WEIGHT_FLOOR: f64 = 1e-320;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticModelResult {
    pub n: usize,
    pub log_z: f64,
    pub distinct: bool,
    pub eta: f64,
}

impl QuadraticModelResult {
    /// `log Z_n / √n`.
    pub fn scaled(&self) -> f64 {
        self.log_z / (self.n as f64).sqrt()
    }
}

/// `log [u^n] Π_k (1 - w_k u^k)^{-1}` (or `Π_k (1 + w_k u^k)` when
/// `distinct`), with `w_k = exp(-η k² / (2n))`.
pub fn quadratic_model(n: usize, distinct: bool, eta: f64) -> Result<QuadraticModelResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(Error::InvalidArgument("eta must be positive".into()));
    }
    let mut z = alloc::vec![0.0f64; n + 1];
    z[0] = 1.0;
    let scale = eta / (2.0 * n as f64);
    for k in 1..=n {
        let w = (-((k * k) as f64) * scale).exp();
        if w < WEIGHT_FLOOR {
            break;
        }
        if distinct {
            for m in (k..=n).rev() {
                z[m] += w * z[m - k];
            }
        } else {
            for m in k..=n {
                z[m] += w * z[m - k];
            }
        }
    }
    Ok(QuadraticModelResult {
        n,
        log_z: z[n].ln(),
        distinct,
        eta,
    })
}

/// `Σ_{λ ⊢ n} exp(-η Q(λ) / (2n))` with `Q(λ) = Σ λ_i²`, by enumerating
/// partitions.
pub fn quadratic_model_bruteforce(n: usize, distinct: bool, eta: f64) -> Result<f64> {
    if n > MAX_BRUTEFORCE_N {
        return Err(Error::TooLarge {
            what: "partition size",
            size: n,
            limit: MAX_BRUTEFORCE_N,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut total = 0.0;
    for p in Partitions::new(n) {
        if distinct && p.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let q: usize = p.iter().map(|x| x * x).sum();
        total += (-eta * q as f64 / (2.0 * n as f64)).exp();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruteforce_examples() {
        let e = |x: f64| x.exp();
        assert!((quadratic_model_bruteforce(2, false, 1.0).unwrap() - (e(-1.0) + e(-0.5))).abs() < 1e-15);
        assert!((quadratic_model_bruteforce(2, true, 1.0).unwrap() - e(-1.0)).abs() < 1e-15);
        assert!((quadratic_model_bruteforce(1, false, 1.0).unwrap() - e(-0.5)).abs() < 1e-15);
        assert!(quadratic_model_bruteforce(31, false, 1.0).is_err());
    }

    #[test]
    fn single_partition_of_one() {
        let r = quadratic_model(1, false, 1.0).unwrap();
        assert!((r.log_z + 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_eta() {
        assert!(quadratic_model(5, false, 0.0).is_err());
        assert!(quadratic_model(5, false, f64::NAN).is_err());
        assert!(quadratic_model(0, false, 1.0).is_err());
    }
}
