//! Sums of `AO(K_λ)` over integer partitions and the quadratic-energy model.

mod dp;
mod enumerate;
mod quadratic;

pub use dp::{partition_sum, partition_sums_upto, PartitionDp};
pub use enumerate::Partitions;
pub use quadratic::{
    quadratic_model, quadratic_model_bruteforce, QuadraticModelResult, MAX_BRUTEFORCE_N,
};
