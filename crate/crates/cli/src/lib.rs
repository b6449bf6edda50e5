//! Command-line front end for `ao-core`: exact counts, asymptotic
//! evaluators, and reproduction of the reference tables compiled in from
//! `data/expectations.toml`.

pub mod cli;
pub mod expectations;
pub mod format;
pub mod report;
pub mod tables;

pub use cli::{run, Cli, Outcome};
