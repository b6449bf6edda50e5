//! Leading-order and first-correction asymptotics, all evaluated in log space.

mod blowup;
mod closed_form;
mod proportion;

#[allow(unused_imports)] // unused when std is linked
use num_traits::Float;
use alloc::string::String;
use alloc::vec::Vec;

pub use blowup::{blowup_vertex_transitive, c5_hessian_check, BlowupBase, C5Report};
pub use closed_form::{
    asy_equal_window, asy_finite_profile, asy_fixed_part, asy_turan, asy_turan_tutte,
    far_tail_bound, fixed_part_delta, WINDOW_GAMMAS,
};
pub use proportion::{asy_fixed_proportion, solve_fixed_proportion, Branch, CriticalPoint};

/// Natural log of a predicted count with the intermediate quantities that
/// went into it.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticValue {
    pub log_value: f64,
    pub ingredients: Vec<(String, f64)>,
}

impl AsymptoticValue {
    fn new(log_value: f64) -> Self {
        Self {
            log_value,
            ingredients: Vec::new(),
        }
    }

    fn with(mut self, name: &str, value: f64) -> Self {
        self.ingredients.push((name.into(), value));
        self
    }

    /// Looks up an ingredient by name.
    pub fn ingredient(&self, name: &str) -> Option<f64> {
        self.ingredients
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, v)| v)
    }

    /// `exp(log_exact - log_value)`.
    pub fn ratio_from_log(&self, log_exact: f64) -> f64 {
        (log_exact - self.log_value).exp()
    }
}

fn ln_gamma(s: f64) -> f64 {
    libm::lgamma(s)
}

fn ln_factorial(n: usize) -> f64 {
    crate::bignum::ln_factorial(n as u64)
}

fn check_s(s: f64) -> crate::Result<()> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::InvalidArgument(alloc::format!(
            "s must be positive, got {s}"
        )))
    }
}
