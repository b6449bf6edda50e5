//! Recomputes each reference table from exact counts and the asymptotic
//! evaluators.

use anyhow::{bail, Result};
use ao_core::asymptotics::{
    asy_equal_window, asy_fixed_part, asy_fixed_proportion, asy_turan_tutte,
};
use ao_core::bignum::{factorial, ln_bigint, ln_ratio, ln_rational};
use ao_core::exact::{ao_exact, h_s_exact, PartitionSpec};
use ao_core::partitions::{partition_sums_upto, quadratic_model};
use ao_core::saddle::{solve_saddle, SaddleProblem};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::expectations::{RowExpectation, TableExpectation};

/// Every table family, in report order.
pub const TABLE_IDS: [&str; 10] = [
    "fixed-part",
    "quadratic-model",
    "truncated-constants",
    "partition-sum-drift",
    "rectangular-window",
    "log-error",
    "critical-window",
    "tutte-fixed-p",
    "bipartite-proportion",
    "tutte-fixed-part",
];

/// Quantities produced for each row of table `id`, in column order.
pub fn quantities(id: &str) -> Option<&'static [&'static str]> {
    Some(match id {
        "fixed-part" | "tutte-fixed-part" => &["leading", "corrected"],
        "quadratic-model" | "partition-sum-drift" => &["bose", "C", "fermi", "C_d"],
        "truncated-constants" => &["c_R", "C_R", "c_Rd", "C_Rd"],
        "rectangular-window" => &["value", "target"],
        "log-error" => &["log_error"],
        "critical-window" => &["R", "nR"],
        "tutte-fixed-p" | "bipartite-proportion" => &["ratio"],
        _ => return None,
    })
}

/// Computed quantities for every row of `table`, aligned with `table.rows`
/// and with [`quantities`]. Rows are evaluated in parallel.
pub fn compute(table: &TableExpectation) -> Result<Vec<Vec<f64>>> {
    let id = table.id.as_str();
    if quantities(id).is_none() {
        bail!("unknown table {id:?}");
    }
    if id == "partition-sum-drift" {
        return drift(&table.rows);
    }
    if id == "quadratic-model" || id == "truncated-constants" {
        // the saddle constants are shared by every row
        let bose = solve_saddle(&SaddleProblem::bose())?.c_value;
        let fermi = solve_saddle(&SaddleProblem::fermi())?.c_value;
        return table
            .rows
            .par_iter()
            .map(|row| match id {
                "quadratic-model" => quadratic_row(row, bose, fermi),
                _ => truncated_row(row),
            })
            .collect();
    }
    table
        .rows
        .par_iter()
        .map(|row| match id {
            "fixed-part" => fixed_part_row(row),
            "rectangular-window" => rectangular_row(row),
            "log-error" => log_error_row(row),
            "critical-window" => critical_row(row),
            "tutte-fixed-p" => tutte_fixed_p_row(row),
            "bipartite-proportion" => bipartite_row(row),
            "tutte-fixed-part" => tutte_fixed_part_row(row),
            _ => unreachable!(),
        })
        .collect()
}

fn ln_ao(parts: &PartitionSpec) -> f64 {
    ln_bigint(&ao_exact(parts))
}

fn ln_h_s(parts: &PartitionSpec, s: usize) -> f64 {
    ln_rational(&h_s_exact(parts, &BigRational::from_integer(BigInt::from(s))))
}

fn fixed_part_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (k, r) = (row.input("k")?, row.input("r")?);
    let ln_d = ln_ao(&PartitionSpec::equal(k, r));
    let leading = asy_fixed_part(k, r, 1.0, false)?.ratio_from_log(ln_d);
    let corrected = asy_fixed_part(k, r, 1.0, true)?.ratio_from_log(ln_d);
    Ok(vec![leading, corrected])
}

fn quadratic_row(row: &RowExpectation, bose_c: f64, fermi_c: f64) -> Result<Vec<f64>> {
    let n = row.input("n")?;
    let bose = quadratic_model(n, false, 1.0)?.scaled();
    let fermi = quadratic_model(n, true, 1.0)?.scaled();
    Ok(vec![bose, bose_c, fermi, fermi_c])
}

fn truncated_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let r = row.input("R")? as f64;
    let bose = solve_saddle(&SaddleProblem::bose().truncated(r))?;
    let fermi = solve_saddle(&SaddleProblem::fermi().truncated(r))?;
    Ok(vec![bose.a_star, bose.c_value, fermi.a_star, fermi.c_value])
}

fn drift(rows: &[RowExpectation]) -> Result<Vec<Vec<f64>>> {
    let ns = rows
        .iter()
        .map(|row| row.input("n"))
        .collect::<Result<Vec<_>>>()?;
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let (bose_sums, fermi_sums) = rayon::join(
        || partition_sums_upto(n_max, false, |_| {}),
        || partition_sums_upto(n_max, true, |_| {}),
    );
    let bose_c = solve_saddle(&SaddleProblem::bose())?.c_value;
    let fermi_c = solve_saddle(&SaddleProblem::fermi())?.c_value;
    Ok(ns
        .iter()
        .map(|&n| {
            let n_fact = BigInt::from(factorial(n as u64));
            let root = (n as f64).sqrt();
            let bose = ln_ratio(&bose_sums[n], &n_fact) / root;
            let fermi = ln_ratio(&fermi_sums[n], &n_fact) / root;
            vec![bose, bose_c, fermi, fermi_c]
        })
        .collect())
}

/// `log(D_{m,n} / (mn)!)` for `n` parts of size `m`.
fn ln_equal_over_factorial(m: usize, n: usize) -> f64 {
    let d = ao_exact(&PartitionSpec::equal(m, n));
    ln_ratio(&d, &BigInt::from(factorial((m * n) as u64)))
}

fn rectangular_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (kappa, n) = (row.input("kappa")?, row.input("n")?);
    let m = kappa * n;
    let value = ln_equal_over_factorial(m, n) + m as f64 / 2.0;
    let target = 0.5 - 5.0 * kappa as f64 / 24.0;
    Ok(vec![value, target])
}

fn log_error_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (m, n) = (row.input("m")?, row.input("n")?);
    let v = asy_equal_window(m, n, 1, 1.0)?;
    let exponent = v.ingredient("exponent").unwrap_or(f64::NAN);
    Ok(vec![ln_equal_over_factorial(m, n) - exponent])
}

fn critical_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (m, n) = (row.input("m")?, row.input("n")?);
    let v = asy_equal_window(m, n, 3, 1.0)?;
    let r = ln_equal_over_factorial(m, n) - v.ingredient("exponent").unwrap_or(f64::NAN);
    Ok(vec![r, n as f64 * r])
}

fn tutte_fixed_p_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (p, s, n) = (row.input("p")?, row.input("s")?, row.input("N")?);
    let v = asy_turan_tutte(n, p, s as f64)?;
    Ok(vec![v.ratio_from_log(ln_h_s(&PartitionSpec::turan(n, p), s))])
}

fn bipartite_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (a, b) = (row.input("a")?, row.input("b")?);
    let n = (a + b) as f64;
    let v = asy_fixed_proportion(&[a, b], &[a as f64 / n, b as f64 / n], 1.0)?;
    Ok(vec![v.ratio_from_log(ln_ao(&PartitionSpec::new([a, b])))])
}

fn tutte_fixed_part_row(row: &RowExpectation) -> Result<Vec<f64>> {
    let (k, s, r) = (row.input("k")?, row.input("s")?, row.input("r")?);
    let ln_h = ln_h_s(&PartitionSpec::equal(k, r), s);
    let leading = asy_fixed_part(k, r, s as f64, false)?.ratio_from_log(ln_h);
    let corrected = asy_fixed_part(k, r, s as f64, true)?.ratio_from_log(ln_h);
    Ok(vec![leading, corrected])
}
