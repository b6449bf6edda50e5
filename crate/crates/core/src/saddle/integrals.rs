#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;

use super::quadrature::integrate;
use crate::{Error, Result};

/// Reference values of the untruncated saddles and constants, to 16 digits.
pub const BOSE_SADDLE: f64 = 0.764_996_442_279_544_3;
pub const BOSE_C: f64 = 2.158_752_005_657_785_5;
pub const FERMI_SADDLE: f64 = -0.323_697_314_095_031_9;
pub const FERMI_C: f64 = 0.905_729_821_720_199;

/// Quadrature target, absolute.
const QUAD_TOL: f64 = 1e-14;
/// Integration stops where `e^{-(aX + ηX²/2)} (X + |a|)` drops below this.
const TAIL_BOUND: f64 = 1e-18;
const MAX_NEWTON: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaddleKind {
    /// Unrestricted parts: `x / (e^{ax+ηx²/2} - 1)`.
    Bose,
    /// Distinct parts: `x / (e^{ax+ηx²/2} + 1)`.
    Fermi,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaddleProblem {
    pub kind: SaddleKind,
    /// Upper integration limit `R`; `None` integrates to infinity.
    pub cutoff: Option<f64>,
    /// Coefficient of `x²/2` in the exponent.
    pub eta: f64,
}

impl SaddleProblem {
    pub fn bose() -> Self {
        Self {
            kind: SaddleKind::Bose,
            cutoff: None,
            eta: 1.0,
        }
    }

    pub fn fermi() -> Self {
        Self {
            kind: SaddleKind::Fermi,
            ..Self::bose()
        }
    }

    pub fn truncated(self, r: f64) -> Self {
        Self {
            cutoff: Some(r),
            ..self
        }
    }

    pub fn with_eta(self, eta: f64) -> Self {
        Self { eta, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) || !self.eta.is_finite() {
            return Err(Error::InvalidArgument("eta must be positive".into()));
        }
        if let Some(r) = self.cutoff {
            if !(r > 0.0) {
                return Err(Error::InvalidArgument("cutoff must be positive".into()));
            }
            // as a -> -∞ the truncated Fermi occupancy tends to R²/2
            if self.kind == SaddleKind::Fermi && r <= core::f64::consts::SQRT_2 {
                return Err(Error::Infeasible(alloc::format!(
                    "distinct-part saddle needs R > sqrt(2), got {r}"
                )));
            }
        }
        Ok(())
    }

    fn check_point(&self, a: f64) -> Result<()> {
        self.validate()?;
        if !a.is_finite() {
            return Err(Error::InvalidArgument("a must be finite".into()));
        }
        if self.kind == SaddleKind::Bose && !(a > 0.0) {
            return Err(Error::InvalidArgument(
                "Bose integrals need a > 0".into(),
            ));
        }
        Ok(())
    }

    /// Upper limit actually integrated to.
    fn upper(&self, a: f64) -> f64 {
        let tail = |x: f64| (-(a * x + 0.5 * self.eta * x * x)).exp() * (x + a.abs());
        let mut x = (-2.0 * a / self.eta).max(1.0);
        while tail(x) >= TAIL_BOUND {
            x += 0.25;
        }
        match self.cutoff {
            Some(r) => r.min(x),
            None => x,
        }
    }

    fn exponent(&self, a: f64, x: f64) -> f64 {
        a * x + 0.5 * self.eta * x * x
    }
}

/// `I(a) = ∫_0^R x / (e^{ax+ηx²/2} ∓ 1) dx`.
pub fn occupancy_integral(a: f64, problem: &SaddleProblem) -> Result<f64> {
    problem.check_point(a)?;
    let f = |x: f64| {
        let g = problem.exponent(a, x);
        match problem.kind {
            SaddleKind::Bose if x < 1e-8 => (1.0 - 0.5 * g) / (a + 0.5 * problem.eta * x),
            SaddleKind::Bose => x / g.exp_m1(),
            SaddleKind::Fermi => fermi_fraction(g) * x,
        }
    };
    Ok(integrate(f, 0.0, problem.upper(a), QUAD_TOL)?.value)
}

/// `∫_0^R -log(1 - e^{-ax-ηx²/2}) dx` (Bose) or `∫_0^R log(1 + e^{-ax-ηx²/2}) dx` (Fermi).
pub fn entropy_integral(a: f64, problem: &SaddleProblem) -> Result<f64> {
    problem.check_point(a)?;
    let f = |x: f64| {
        let g = problem.exponent(a, x);
        match problem.kind {
            SaddleKind::Bose => -(-(-g).exp_m1()).ln(),
            SaddleKind::Fermi if g > -30.0 => (-g).exp().ln_1p(),
            SaddleKind::Fermi => -g + g.exp().ln_1p(),
        }
    };
    Ok(integrate(f, 0.0, problem.upper(a), QUAD_TOL)?.value)
}

/// `σ² = ∫_0^R x² e^{g} / (e^{g} ∓ 1)² dx`, `g = ax + ηx²/2`; equals `-I'(a)`.
pub fn variance_constant(a: f64, problem: &SaddleProblem) -> Result<f64> {
    problem.check_point(a)?;
    let f = |x: f64| {
        let g = problem.exponent(a, x);
        match problem.kind {
            SaddleKind::Bose if x < 1e-8 => {
                let d = a + 0.5 * problem.eta * x;
                (1.0 - g) / (d * d)
            }
            SaddleKind::Bose => {
                let e = (-g).exp_m1();
                x * x * (-g).exp() / (e * e)
            }
            SaddleKind::Fermi => {
                let c = (0.5 * g).cosh();
                x * x / (4.0 * c * c)
            }
        }
    };
    Ok(integrate(f, 0.0, problem.upper(a), QUAD_TOL)?.value)
}

/// `1 / (e^g + 1)` without overflow.
fn fermi_fraction(g: f64) -> f64 {
    if g > 0.0 {
        let e = (-g).exp();
        e / (1.0 + e)
    } else {
        1.0 / (g.exp() + 1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaddleResult {
    /// Root of `I(a) = 1`.
    pub a_star: f64,
    /// `a_star` plus the entropy integral at `a_star`.
    pub c_value: f64,
    /// `|I(a_star) - 1|`.
    pub residual: f64,
    pub iterations: usize,
}

/// Solves `I(a) = 1`.
///
/// Newton with `I'(a) = -σ²(a)` from quadrature, started at `0.7` (Bose) or
/// `-0.3` (Fermi); a step leaving the current bracket is replaced by
/// bisection. `I` is strictly decreasing, so the root is unique.
pub fn solve_saddle(problem: &SaddleProblem) -> Result<SaddleResult> {
    problem.validate()?;
    let excess = |a: f64| occupancy_integral(a, problem).map(|i| i - 1.0);

    let (mut lo, mut hi, start) = match problem.kind {
        SaddleKind::Bose => (0.0, 5.0, 0.7),
        SaddleKind::Fermi => (-5.0, 5.0, -0.3),
    };
    while excess(hi)? > 0.0 {
        hi *= 2.0;
        if hi > 1e3 {
            return Err(Error::Infeasible("no upper bracket for the saddle".into()));
        }
    }
    if problem.kind == SaddleKind::Fermi {
        while excess(lo)? < 0.0 {
            lo *= 2.0;
            if lo < -1e3 {
                return Err(Error::Infeasible("no lower bracket for the saddle".into()));
            }
        }
    }

    let mut a: f64 = start;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_NEWTON {
        iterations += 1;
        let f = excess(a)?;
        if f > 0.0 {
            lo = a;
        } else {
            hi = a;
        }
        if f.abs() <= 1e-15 {
            converged = true;
            break;
        }
        let slope = variance_constant(a, problem)?;
        let mut next = a + f / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - a).abs();
        a = next;
        if step <= 4.0 * f64::EPSILON * a.abs().max(1.0) {
            converged = true;
            break;
        }
    }
    let residual = excess(a)?.abs();
    if !converged || residual >= 1e-12 {
        return Err(Error::NoConvergence {
            solver: "saddle Newton iteration",
            iterations,
            residual,
        });
    }
    Ok(SaddleResult {
        a_star: a,
        c_value: a + entropy_integral(a, problem)?,
        residual,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occupancy_at_reference_saddles() {
        let i = occupancy_integral(BOSE_SADDLE, &SaddleProblem::bose()).unwrap();
        assert!((i - 1.0).abs() < 1e-12, "{i}");
        let i = occupancy_integral(FERMI_SADDLE, &SaddleProblem::fermi()).unwrap();
        assert!((i - 1.0).abs() < 1e-12, "{i}");
        assert!(occupancy_integral(50.0, &SaddleProblem::bose()).unwrap() < 1e-3);
    }

    #[test]
    fn entropy_at_reference_saddles() {
        let j = entropy_integral(BOSE_SADDLE, &SaddleProblem::bose()).unwrap();
        assert!((j - 1.393_755_563_378_241_2).abs() < 1e-10, "{j}");
        let j = entropy_integral(FERMI_SADDLE, &SaddleProblem::fermi()).unwrap();
        assert!((j - 1.229_427_135_815_230_9).abs() < 1e-10, "{j}");
        // bounded by ∫ -log(1 - e^{-10x}) dx = ζ(2)/10
        let j = entropy_integral(10.0, &SaddleProblem::bose()).unwrap();
        assert!(j > 0.0 && j < core::f64::consts::PI.powi(2) / 60.0, "{j}");
    }

    #[test]
    fn bose_needs_positive_a() {
        assert!(occupancy_integral(0.0, &SaddleProblem::bose()).is_err());
        assert!(entropy_integral(-0.1, &SaddleProblem::bose().truncated(2.0)).is_err());
    }

    #[test]
    fn infeasible_truncated_fermi() {
        let p = SaddleProblem::fermi().truncated(1.4);
        assert!(matches!(solve_saddle(&p), Err(Error::Infeasible(_))));
    }

    #[test]
    fn variance_values() {
        // frozen from independent 40- and 25-digit quadrature
        let p = SaddleProblem::bose();
        let v = variance_constant(BOSE_SADDLE, &p).unwrap();
        assert!((v - 1.363_524_982_578_257_8).abs() < 1e-10, "{v}");
        let v2 = variance_constant(BOSE_SADDLE, &p.truncated(2.0)).unwrap();
        assert!((v2 - 1.310_760_099_230_439_2).abs() < 1e-10);
        assert!(v2 <= v);
        let v3 = variance_constant(BOSE_SADDLE + 1.0, &p).unwrap();
        assert!((v3 - 0.291_401_423_750_154_6).abs() < 1e-10);
        assert!(v3 < v);
    }

    #[test]
    fn untruncated_saddles() {
        let b = solve_saddle(&SaddleProblem::bose()).unwrap();
        assert!((b.a_star - BOSE_SADDLE).abs() < 1e-10);
        assert!((b.c_value - BOSE_C).abs() < 1e-10);
        let f = solve_saddle(&SaddleProblem::fermi()).unwrap();
        assert!((f.a_star - FERMI_SADDLE).abs() < 1e-10);
        assert!((f.c_value - FERMI_C).abs() < 1e-10);
        assert!(b.residual < 1e-12 && f.residual < 1e-12);
    }

    #[test]
    fn truncated_saddles() {
        let b = solve_saddle(&SaddleProblem::bose().truncated(2.0)).unwrap();
        assert!((b.a_star - 0.748_267_431_442).abs() < 1e-9);
        assert!((b.c_value - 2.148_930_549_281).abs() < 1e-9);
        let f = solve_saddle(&SaddleProblem::fermi().truncated(5.0)).unwrap();
        assert!((f.a_star + 0.323_714_467_806).abs() < 1e-9);
        assert!((f.c_value - 0.905_725_963_815).abs() < 1e-9);
    }

    #[test]
    fn truncation_converges() {
        let b = solve_saddle(&SaddleProblem::bose().truncated(5.0)).unwrap();
        assert!((b.c_value - BOSE_C).abs() < 2e-8);
        let f = solve_saddle(&SaddleProblem::fermi().truncated(5.0)).unwrap();
        assert!((f.c_value - FERMI_C).abs() < 5e-6);
    }

    #[test]
    fn occupancy_is_decreasing() {
        for (p, centre) in [
            (SaddleProblem::bose(), BOSE_SADDLE),
            (SaddleProblem::fermi(), FERMI_SADDLE),
        ] {
            let grid: alloc::vec::Vec<f64> = (0..20)
                .map(|i| occupancy_integral(centre - 0.5 + 0.05 * i as f64, &p).unwrap())
                .collect();
            assert!(grid.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn eta_continuity() {
        for eta in [0.999, 1.001] {
            let r = solve_saddle(&SaddleProblem::bose().with_eta(eta)).unwrap();
            assert!((r.c_value - BOSE_C).abs() < 1e-2);
            assert!(r.residual < 1e-12);
        }
        let r = solve_saddle(&SaddleProblem::bose().with_eta(0.999)).unwrap();
        assert!((r.a_star - 0.765_347_44).abs() < 1e-7);
    }
}
