//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Result;
use ao_cli::cli::select_tables;
use ao_cli::report::{self, TableReport};
use ao_core::asymptotics::{c5_hessian_check, solve_fixed_proportion, BlowupBase};
use ao_core::bignum::factorial;
use ao_core::combinatorics::{collision_polynomial, log_pm_series, DensePolynomial};
use ao_core::exact::{
    ao_bruteforce, ao_exact, chromatic_eval, h_s_exact, random_runs_estimate, PartitionSpec,
};
use ao_core::partitions::Partitions;
use ao_core::saddle::{solve_saddle, SaddleProblem};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    check: fn() -> Result<Vec<String>>,
}

fn all_shapes(max_n: usize) -> impl Iterator<Item = PartitionSpec> {
    (1..=max_n).flat_map(|n| Partitions::new(n).map(PartitionSpec::new))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Verifies the listed tables and returns failure descriptions.
fn tables(ids: &[&str]) -> Result<Vec<String>> {
    let mut reports: Vec<TableReport> = Vec::new();
    for id in ids {
        for table in select_tables(id)? {
            reports.push(report::verify_table(&table)?);
        }
    }
    let mut failures = Vec::new();
    for r in &reports {
        for row in r.rows.iter().filter(|row| !row.pass) {
            failures.push(format!(
                "{} {:?} {}: got {} expected {}",
                r.table_id, row.inputs, row.quantity, row.got, row.expected
            ));
        }
    }
    let total = report::total(&reports);
    if failures.is_empty() && total.checked == 0 {
        failures.push("no rows checked".into());
    }
    Ok(failures)
}

fn brute_force_oracle() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut shapes = 0;
    for parts in all_shapes(7) {
        shapes += 1;
        let (fast, slow) = (ao_exact(&parts), ao_bruteforce(&parts)?);
        if fast != slow {
            failures.push(format!("{parts}: {fast} vs {slow}"));
        }
    }
    if shapes != 44 {
        failures.push(format!("expected 44 shapes, saw {shapes}"));
    }
    Ok(failures)
}

fn saddle_constants() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let bose = solve_saddle(&SaddleProblem::bose())?;
    let fermi = solve_saddle(&SaddleProblem::fermi())?;
    for (name, got, want) in [
        ("c", bose.a_star, 0.764_996_442_279_544_3),
        ("C", bose.c_value, 2.158_752_005_657_785_5),
        ("c_d", fermi.a_star, -0.323_697_314_095_031_9),
        ("C_d", fermi.c_value, 0.905_729_821_720_199_0),
    ] {
        if (got - want).abs() > 1e-10 {
            failures.push(format!("{name}: {got} vs {want}"));
        }
    }
    failures.extend(tables(&["truncated-constants"])?);
    Ok(failures)
}

fn property_suite() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut fail = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    for parts in all_shapes(10) {
        fail(
            h_s_exact(&parts, &int(1)) == int(1) * ao_exact(&parts),
            format!("h_1 != AO for {parts}"),
        );
    }

    for parts in all_shapes(7) {
        let base = ao_exact(&parts);
        for (i, &p) in parts.parts().iter().enumerate() {
            for a in 1..p {
                let mut split: Vec<usize> = parts.parts().to_vec();
                split[i] = a;
                split.push(p - a);
                let split = PartitionSpec::new(split);
                fail(ao_exact(&split) > base, format!("splitting {parts} into {split}"));
            }
        }
    }

    for parts in all_shapes(8) {
        for q in 0..parts.len() as i64 {
            fail(
                chromatic_eval(&parts, &int(q)).is_zero(),
                format!("χ({q}) of {parts} nonzero"),
            );
        }
    }

    let closed_forms: [DensePolynomial<BigRational>; 3] = [
        DensePolynomial::new(vec![int(0), frac(1, 2), frac(-1, 2)]),
        DensePolynomial::new(vec![int(0), frac(-5, 12), frac(9, 12), frac(-4, 12)]),
        DensePolynomial::new(vec![int(0), frac(18, 24), frac(-43, 24), frac(34, 24), frac(-9, 24)]),
    ];
    for (i, l) in closed_forms.iter().enumerate() {
        let ell = i + 1;
        fail(
            &collision_polynomial(ell, ell + 1)? == l,
            format!("L_{ell} interpolation"),
        );
        for m in ell.max(2)..=12 {
            let series = log_pm_series(m, ell)?;
            fail(
                series.coeff(ell) == Some(&l.eval(&int(m as i64))),
                format!("L_{ell}({m})"),
            );
        }
    }

    for p in 2..=5usize {
        let pf = p as f64;
        let cp = solve_fixed_proportion(&vec![1.0 / pf; p])?;
        let l = (pf / (pf - 1.0)).ln();
        let want = pf * ((1.0 - l) / (pf * l * l)).powi(p as i32 - 1);
        fail(
            (cp.hessian_det - want).abs() < 1e-8,
            format!("balanced Hessian p={p}: {} vs {want}", cp.hessian_det),
        );
    }

    let c5 = BlowupBase::cycle(5)?;
    let s5 = 5f64.sqrt();
    fail((c5.tau() - (5.0 - s5) / 10.0).abs() < 1e-12, format!("C5 τ = {}", c5.tau()));
    fail(c5.r() > 0.323 && c5.r() < 0.324, format!("C5 R = {}", c5.r()));
    fail(
        (c5.a_h() - c5.r() * (1.0 - c5.tau()) / s5).abs() < 1e-12,
        format!("C5 A_H = {}", c5.a_h()),
    );
    let report = c5_hessian_check()?;
    fail(
        report.minors.iter().all(|d| *d > 0.0),
        format!("C5 minors {:?}", report.minors),
    );
    fail(
        report.matrix_match_error < 1e-5,
        format!("C5 FD vs closed form {}", report.matrix_match_error),
    );

    for parts in [PartitionSpec::new([3, 2, 2]), PartitionSpec::new([4, 1, 1, 1])] {
        let n = parts.vertices();
        let exact = ao_exact(&parts).to_f64().unwrap_or(f64::NAN)
            / BigInt::from(factorial(n as u64)).to_f64().unwrap_or(f64::NAN);
        for seed in [1u64, 2024, 0x5eed_cafe] {
            let est = random_runs_estimate(&parts, 1_000_000, seed)?;
            fail(
                (est.mean - exact).abs() <= 5.0 * est.std_error,
                format!("Monte-Carlo {parts} seed {seed}: {} vs {exact}", est.mean),
            );
        }
    }
    Ok(failures)
}

const CRITERIA: [Criterion; 8] = [
    Criterion {
        id: 1,
        name: "exact counts equal brute-force enumeration for all 44 shapes with N <= 7",
        budget: Duration::from_secs(10),
        check: brute_force_oracle,
    },
    Criterion {
        id: 2,
        name: "equal-part ratio table to 1e-9",
        budget: Duration::from_secs(120),
        check: || tables(&["fixed-part"]),
    },
    Criterion {
        id: 3,
        name: "quadratic model table to 1e-9",
        budget: Duration::from_secs(60),
        check: || tables(&["quadratic-model"]),
    },
    Criterion {
        id: 4,
        name: "saddle constants to 1e-10 and truncated constants to 1e-9",
        budget: Duration::from_secs(10),
        check: saddle_constants,
    },
    Criterion {
        id: 5,
        name: "partition-sum drift table to 1e-9",
        budget: Duration::from_secs(900),
        check: || tables(&["partition-sum-drift"]),
    },
    Criterion {
        id: 6,
        name: "rectangular, logarithmic-error and critical window tables to 1e-8",
        budget: Duration::from_secs(600),
        check: || tables(&["rectangular-window", "log-error", "critical-window"]),
    },
    Criterion {
        id: 7,
        name: "Tutte fixed-p, Tutte fixed-part and bipartite proportion tables to 1e-6",
        budget: Duration::from_secs(300),
        check: || tables(&["tutte-fixed-p", "tutte-fixed-part", "bipartite-proportion"]),
    },
    Criterion {
        id: 8,
        name: "property suite (Stanley, splitting, vanishing, L1..L3, Hessians, C5, Monte-Carlo)",
        budget: Duration::from_secs(300),
        check: property_suite,
    },
];

fn main() -> ExitCode {
    let mut all = true;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(f) if f.is_empty() && elapsed <= c.budget => (true, String::new()),
            Ok(f) if f.is_empty() => (false, format!("over budget {:?}", c.budget)),
            Ok(f) => (false, f.join("; ")),
            Err(e) => (false, format!("error: {e:#}")),
        };
        all &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {} ({:.2?})", c.id, c.name, elapsed);
        if !detail.is_empty() {
            println!("    {detail}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
