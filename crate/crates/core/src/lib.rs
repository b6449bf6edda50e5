//! Exact acyclic-orientation counts, negative-axis chromatic values and
//! saddle-point asymptotics for complete multipartite graphs.
//!
//! Everything here is pure computation over `alloc`; the companion `ao-cli`
//! crate carries the command line, the expectation tables and the reports.
//!
//! The exact side works through the Stirling-transform polynomials
//! `P_m(t) = Σ_j (-1)^{m+j} S(m,j) t^j`: the number of acyclic orientations
//! of `K_{λ1,…,λr}` is `∫ e^{-t} Π P_{λi}(t) dt`, which is evaluated term by
//! term with `∫ e^{-t} t^j dt = j!`.

#![no_std]

extern crate alloc;

pub mod asymptotics;
pub mod bignum;
pub mod combinatorics;
mod error;
pub mod exact;
pub mod linalg;
pub mod partitions;
pub mod saddle;

pub use error::{Error, Result};
