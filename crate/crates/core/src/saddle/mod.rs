//! Partition-saddle constants: the Bose/Fermi occupancy and entropy
//! integrals, full or truncated at `R`, and their saddle `I(a) = 1`.

mod integrals;
mod quadrature;

pub use integrals::{
    entropy_integral, occupancy_integral, solve_saddle, variance_constant, SaddleKind,
    SaddleProblem, SaddleResult, BOSE_C, BOSE_SADDLE, FERMI_C, FERMI_SADDLE,
};
pub use quadrature::{integrate, QuadEstimate};
