//! Exact counts for complete multipartite graphs `K_λ`.

mod brute;
mod counts;
mod runs;
mod spec;

pub use brute::{ao_bruteforce, MAX_BRUTEFORCE_EDGES};
pub use counts::{
    ao_exact, ao_exact_with, ao_one_large_part, chromatic_eval, gamma_weighted_sum, h_s_exact,
    h_s_exact_with, product_polynomial, product_polynomial_with, CountKind, CountResult,
};
pub use runs::{random_runs_estimate, RunsEstimate};
pub use spec::PartitionSpec;
