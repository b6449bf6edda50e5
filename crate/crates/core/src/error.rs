use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is too large for exhaustive enumeration ({size} > {limit})")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("log series of P_{m} is only exact up to order {m}, requested {order}")]
    SeriesOrder { m: usize, order: usize },

    #[error("interpolated polynomial disagrees with sample at m = {m}")]
    InterpolationMismatch { m: usize },

    #[error("quadrature did not converge on [{lower}, {upper}]: last estimate {estimate:e}, change {change:e}")]
    Quadrature {
        lower: f64,
        upper: f64,
        estimate: f64,
        change: f64,
    },

    #[error("{solver} did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        solver: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("infeasible problem: {0}")]
    Infeasible(String),
}
