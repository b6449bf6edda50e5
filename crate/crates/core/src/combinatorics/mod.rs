//! Exact arithmetic substrate: Stirling numbers, the Stirling-transform
//! polynomials `P_m`, rising factorials and formal logarithms in `1/t`.

mod poly;
mod series;
mod stirling;

pub use poly::DensePolynomial;
pub use series::{
    collision_polynomial, falling_factorial, log_pm_series, rising_factorial, LaurentTruncation,
};
pub use stirling::{pm_polynomial, stirling2, StirlingTable};

pub(crate) use poly::add_product_into as poly_add_product_into;
