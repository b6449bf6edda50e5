//! Argument parsing and command dispatch.

use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use ao_core::asymptotics::{
    asy_equal_window, asy_finite_profile, asy_fixed_part, asy_fixed_proportion, asy_turan,
    asy_turan_tutte, blowup_vertex_transitive, far_tail_bound, AsymptoticValue, BlowupBase,
};
use ao_core::bignum::{factorial, ln_bigint, ln_ratio, ln_rational};
use ao_core::exact::{
    ao_exact, ao_one_large_part, chromatic_eval, h_s_exact, random_runs_estimate, PartitionSpec,
};
use ao_core::partitions::{quadratic_model, PartitionDp};
use ao_core::saddle::{solve_saddle, variance_constant, SaddleKind, SaddleProblem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde_json::{json, Map, Value};

use crate::expectations::{self, normalize_id};
use crate::format;
use crate::report::{self, TableReport};
use crate::tables::TABLE_IDS;

#[derive(Debug, Parser)]
#[command(
    name = "ao",
    version,
    about = "Acyclic orientations, Tutte-axis values and their asymptotics for complete multipartite graphs"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact counts by polynomial expansion.
    #[command(subcommand)]
    Exact(ExactCommand),
    /// Closed-form exact counts.
    #[command(subcommand)]
    ClosedForm(ClosedFormCommand),
    /// Exact partition sum of acyclic-orientation counts, B(n) or B_d(n).
    PartitionSum(PartitionSumArgs),
    /// Floating-point quadratic-energy partition model.
    QuadraticModel(QuadraticArgs),
    /// Saddle point c and constant C of the partition sums.
    Constants(ConstantsArgs),
    /// Asymptotic evaluators.
    #[command(subcommand)]
    Asymptotic(AsymptoticCommand),
    /// Monte-Carlo estimators.
    #[command(subcommand)]
    Mc(McCommand),
    /// Recompute a reference table (or `all`) and compare with the expected values.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum ExactCommand {
    /// Acyclic orientations of K_λ.
    Ao {
        #[arg(long)]
        parts: PartitionSpec,
    },
    /// Chromatic polynomial of K_λ at q.
    Chromatic {
        #[arg(long)]
        parts: PartitionSpec,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: BigRational,
    },
    /// H_s = (-1)^N χ(-s) = s T(1+s, 0).
    Hs {
        #[arg(long)]
        parts: PartitionSpec,
        #[arg(long, value_parser = parse_rational)]
        s: BigRational,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosedFormCommand {
    /// AO(K_{L,1,…,1}) = (n-L)! (n-L+1)^L.
    OneLargePart {
        #[arg(long)]
        large: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct PartitionSumArgs {
    #[arg(long)]
    pub n: usize,
    /// Restrict to partitions into distinct parts.
    #[arg(long)]
    pub distinct: bool,
    /// Largest part allowed.
    #[arg(long, conflicts_with = "cutoff")]
    pub max_part: Option<usize>,
    /// Largest part floor(R √n).
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// Suppress progress on standard error.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct QuadraticArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub distinct: bool,
    #[arg(long, default_value_t = 1.0)]
    pub eta: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Bose,
    Fermi,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Integration cutoff R; omitted means infinity.
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub eta: f64,
}

#[derive(Debug, Subcommand)]
pub enum AsymptoticCommand {
    /// Acyclic orientations of the Turán graph T(N, p).
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Also compute the exact value and the ratio exact / asymptotic.
        #[arg(long)]
        compare: bool,
    },
    /// H_s of the Turán graph T(N, p).
    Tutte {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        compare: bool,
    },
    /// H_s of r parts of size k.
    FixedPart {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        /// Include the first correction term.
        #[arg(long)]
        corrected: bool,
        #[arg(long)]
        compare: bool,
    },
    /// H_s for a finite part-size profile r_1,r_2,… (r_j parts of size j).
    Profile {
        #[arg(long, value_delimiter = ',')]
        profile: Vec<usize>,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        compare: bool,
    },
    /// n parts of size m in the equal-size window.
    Window {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        compare: bool,
    },
    /// H_s of K_{λ_1,…,λ_p} with λ_i ≈ α_i N.
    Proportion {
        /// Part sizes, matched with --alphas by position.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        /// Proportions summing to 1; defaults to λ_i / N.
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        compare: bool,
    },
    /// Balanced blow-up of a vertex-transitive base graph.
    Blowup {
        /// `complete:P`, `cycle:P`, or `edges:P:u-v,u-v,…`.
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
    },
    /// Per-√n bound for partitions with largest part at least A n^{3/4}.
    FarTail {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        distinct: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum McCommand {
    /// Estimate AO(K_λ)/N! from same-part runs of random orderings.
    Runs {
        #[arg(long)]
        parts: PartitionSpec,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Table id (optionally prefixed `table-`) or `all`.
    pub table: String,
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// False when a verification row failed.
    pub success: bool,
}

/// A named result value.
enum Item {
    /// Exact integer or rational, printed in full.
    Exact(String),
    Float(f64),
}

impl Item {
    fn text(&self) -> String {
        match self {
            Item::Exact(s) => s.clone(),
            Item::Float(x) => format::float(*x),
        }
    }

    fn json(&self) -> Value {
        match self {
            Item::Exact(s) => Value::String(s.clone()),
            Item::Float(x) => json!(format::rounded(*x)),
        }
    }
}

fn values(command: &str, items: Vec<(String, Item)>) -> Outcome {
    let text = if items.len() == 1 {
        format!("{}\n", items[0].1.text())
    } else {
        items
            .iter()
            .map(|(k, v)| format!("{k} = {}\n", v.text()))
            .collect()
    };
    let mut results = Map::new();
    for (k, v) in &items {
        results.insert(k.clone(), v.json());
    }
    Outcome {
        text,
        json: json!({ "command": command, "results": results }),
        success: true,
    }
}

fn item(name: &str, value: Item) -> (String, Item) {
    (name.to_owned(), value)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let numer = BigInt::from_str(&digits).map_err(|e| format!("bad number {s:?}: {e}"))?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(numer, denom));
    }
    BigRational::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Parses argv (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv)?;
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    execute(&cli, &echo)
}

/// Runs an already parsed command; `echo` is recorded in the JSON report.
pub fn execute(cli: &Cli, echo: &str) -> Result<Outcome> {
    match &cli.command {
        Command::Exact(cmd) => exact(cmd, echo),
        Command::ClosedForm(ClosedFormCommand::OneLargePart { large, n }) => {
            let v = ao_one_large_part(*large, *n)?;
            Ok(values(echo, vec![item("ao", Item::Exact(v.to_string()))]))
        }
        Command::PartitionSum(args) => partition_sum(args, echo),
        Command::QuadraticModel(args) => {
            let r = quadratic_model(args.n, args.distinct, args.eta)?;
            Ok(values(
                echo,
                vec![
                    item("log_z", Item::Float(r.log_z)),
                    item("log_z_over_sqrt_n", Item::Float(r.scaled())),
                ],
            ))
        }
        Command::Constants(args) => constants(args, echo),
        Command::Asymptotic(cmd) => asymptotic(cmd, echo),
        Command::Mc(McCommand::Runs { parts, samples, seed }) => {
            let est = random_runs_estimate(parts, *samples, *seed)?;
            Ok(values(
                echo,
                vec![
                    item("mean", Item::Float(est.mean)),
                    item("std_error", Item::Float(est.std_error)),
                    item("samples", Item::Exact(est.samples.to_string())),
                ],
            ))
        }
        Command::Verify(args) => verify(&args.table, echo),
    }
}

fn exact(cmd: &ExactCommand, echo: &str) -> Result<Outcome> {
    let (name, value) = match cmd {
        ExactCommand::Ao { parts } => ("ao", ao_exact(parts).to_string()),
        ExactCommand::Chromatic { parts, q } => ("chromatic", chromatic_eval(parts, q).to_string()),
        ExactCommand::Hs { parts, s } => {
            if *s <= BigRational::from_integer(0.into()) {
                bail!("s must be positive");
            }
            ("h_s", h_s_exact(parts, s).to_string())
        }
    };
    Ok(values(echo, vec![item(name, Item::Exact(value))]))
}

fn partition_sum(args: &PartitionSumArgs, echo: &str) -> Result<Outcome> {
    let max_part = match (args.max_part, args.cutoff) {
        (Some(m), _) => Some(m),
        (None, Some(r)) => {
            if !(r > 0.0) {
                bail!("cutoff must be positive");
            }
            Some((r * (args.n as f64).sqrt()).floor() as usize)
        }
        (None, None) => None,
    };
    let quiet = args.quiet;
    let start = Instant::now();
    let dp = PartitionDp::new(args.n, args.distinct, max_part).run(|k| {
        if !quiet {
            eprintln!("part size {k} done ({:.1?})", start.elapsed());
        }
    });
    let sum = dp.sum(args.n);
    let n_fact = BigInt::from(factorial(args.n as u64));
    let mut items = vec![item("sum", Item::Exact(sum.to_string()))];
    if args.n > 0 {
        let scaled = ln_ratio(&sum, &n_fact) / (args.n as f64).sqrt();
        items.push(item("log_ratio_over_sqrt_n", Item::Float(scaled)));
    }
    Ok(values(echo, items))
}

fn constants(args: &ConstantsArgs, echo: &str) -> Result<Outcome> {
    let mut problem = match args.kind {
        Kind::Bose => SaddleProblem::bose(),
        Kind::Fermi => SaddleProblem::fermi(),
    }
    .with_eta(args.eta);
    if let Some(r) = args.cutoff {
        problem = problem.truncated(r);
    }
    let r = solve_saddle(&problem)?;
    let variance = variance_constant(r.a_star, &problem)?;
    let (a_name, c_name) = match problem.kind {
        SaddleKind::Bose => ("c", "C"),
        SaddleKind::Fermi => ("c_d", "C_d"),
    };
    Ok(values(
        echo,
        vec![
            item(a_name, Item::Float(r.a_star)),
            item(c_name, Item::Float(r.c_value)),
            item("variance", Item::Float(variance)),
            item("residual", Item::Float(r.residual)),
            item("iterations", Item::Exact(r.iterations.to_string())),
        ],
    ))
}

fn s_rational(s: f64) -> Result<BigRational> {
    BigRational::from_f64(s).ok_or_else(|| anyhow!("s = {s} is not finite"))
}

fn ln_h_s(parts: &PartitionSpec, s: f64) -> Result<f64> {
    if s == 1.0 {
        return Ok(ln_bigint(&ao_exact(parts)));
    }
    Ok(ln_rational(&h_s_exact(parts, &s_rational(s)?)))
}

fn asymptotic(cmd: &AsymptoticCommand, echo: &str) -> Result<Outcome> {
    let (value, exact_parts, s): (AsymptoticValue, Option<PartitionSpec>, f64) = match cmd {
        AsymptoticCommand::Turan { n, p, compare } => (
            asy_turan(*n, *p)?,
            compare.then(|| PartitionSpec::turan(*n, *p)),
            1.0,
        ),
        AsymptoticCommand::Tutte { n, p, s, compare } => (
            asy_turan_tutte(*n, *p, *s)?,
            compare.then(|| PartitionSpec::turan(*n, *p)),
            *s,
        ),
        AsymptoticCommand::FixedPart { k, r, s, corrected, compare } => (
            asy_fixed_part(*k, *r, *s, *corrected)?,
            compare.then(|| PartitionSpec::equal(*k, *r)),
            *s,
        ),
        AsymptoticCommand::Profile { profile, s, compare } => (
            asy_finite_profile(profile, *s)?,
            compare.then(|| {
                PartitionSpec::new(
                    profile
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &r)| std::iter::repeat(i + 1).take(r)),
                )
            }),
            *s,
        ),
        AsymptoticCommand::Window { m, n, order, s, compare } => (
            asy_equal_window(*m, *n, *order, *s)?,
            compare.then(|| PartitionSpec::equal(*m, *n)),
            *s,
        ),
        AsymptoticCommand::Proportion { parts, alphas, s, compare } => {
            let total: usize = parts.iter().sum();
            let alphas = match alphas {
                Some(a) => a.clone(),
                None => parts.iter().map(|&l| l as f64 / total as f64).collect(),
            };
            (
                asy_fixed_proportion(parts, &alphas, *s)?,
                compare.then(|| PartitionSpec::new(parts.iter().copied())),
                *s,
            )
        }
        AsymptoticCommand::Blowup { base, n, s } => {
            (blowup_vertex_transitive(&parse_base(base)?, *n, *s)?, None, *s)
        }
        AsymptoticCommand::FarTail { a, distinct } => {
            let bound = far_tail_bound(*a, *distinct)?;
            return Ok(values(echo, vec![item("bound", Item::Float(bound))]));
        }
    };
    let mut items = vec![item("log_value", Item::Float(value.log_value))];
    for (name, v) in &value.ingredients {
        items.push((name.clone(), Item::Float(*v)));
    }
    if let Some(parts) = exact_parts {
        let ln_exact = ln_h_s(&parts, s)?;
        items.push(item("log_exact", Item::Float(ln_exact)));
        items.push(item("ratio", Item::Float(value.ratio_from_log(ln_exact))));
    }
    Ok(values(echo, items))
}

fn parse_base(spec: &str) -> Result<BlowupBase> {
    let mut fields = spec.splitn(3, ':');
    let kind = fields.next().unwrap_or_default();
    let p: usize = fields
        .next()
        .context("base needs a vertex count, e.g. cycle:5")?
        .parse()
        .context("bad vertex count")?;
    Ok(match kind {
        "complete" => BlowupBase::complete(p)?,
        "cycle" => BlowupBase::cycle(p)?,
        "edges" => {
            let list = fields.next().context("edges:P needs an edge list u-v,…")?;
            let edges = list
                .split(',')
                .map(|e| {
                    let (u, v) = e.split_once('-').context("edge must be u-v")?;
                    Ok((u.trim().parse()?, v.trim().parse()?))
                })
                .collect::<Result<Vec<(usize, usize)>>>()?;
            BlowupBase::new(p, &edges)?
        }
        other => bail!("unknown base kind {other:?}"),
    })
}

/// Tables selected by `selector` (`all`, or one id).
pub fn select_tables(selector: &str) -> Result<Vec<expectations::TableExpectation>> {
    let tables = expectations::load()?;
    if selector == "all" {
        let mut ordered = Vec::new();
        for id in TABLE_IDS {
            ordered.extend(tables.iter().filter(|t| t.id == id).cloned());
        }
        return Ok(ordered);
    }
    let id = normalize_id(selector);
    let found: Vec<_> = tables.into_iter().filter(|t| t.id == id).collect();
    if found.is_empty() {
        bail!("unknown table {selector:?}; known: {}", TABLE_IDS.join(", "));
    }
    Ok(found)
}

fn verify(selector: &str, echo: &str) -> Result<Outcome> {
    let mut reports: Vec<TableReport> = Vec::new();
    for table in select_tables(selector)? {
        let start = Instant::now();
        let report = report::verify_table(&table)?;
        // timing goes to stderr so the report itself stays reproducible
        eprintln!("{}: {:.2?}", table.id, start.elapsed());
        reports.push(report);
    }
    let summary = report::total(&reports);
    let json = if reports.len() == 1 && selector != "all" {
        serde_json::to_value(&reports[0])?
    } else {
        json!({ "command": echo, "tables": reports, "summary": summary })
    };
    Ok(Outcome {
        text: report::render_text(&reports),
        json,
        success: summary.all_pass(),
    })
}

impl Outcome {
    /// The rendering selected by `--json`.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).unwrap_or_default();
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}
