//! Command-line front end. Every subcommand writes one CSV table to stdout.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or validation error,
//! 3 numeric failure (for example a crossover bracket without a sign change).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{self, DEFAULT_TOLERANCE};
use crate::bounds::{self, BoundKind};
use crate::code_model::{
    builtin_registry, load_registry, CodeParams, CodeRegistry, CodeStatus, RegistryQuery,
};
use crate::efficiency::{self, ErrorProbability};
use crate::error::Error;
use crate::grid::Grid;
use crate::verification;

/// Environment variable overriding the default figure grid density.
pub const FIGURE_POINTS_ENV: &str = "QEC_FIGURE_POINTS";

const DEFAULT_FIGURE_POINTS: usize = 1001;

/// A header plus rows of already formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl OutputTable {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row; panics if its arity differs from the header's.
    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(
            row.len(),
            self.header.len(),
            "row arity must match the header"
        );
        self.rows.push(row);
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .quote_style(csv::QuoteStyle::Never)
            .from_writer(out);
        writer.write_record(&self.header)?;
        for row in &self.rows {
            writer.write_record(row)?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// Formats a real number rounded to 12 significant digits, in the shortest
/// decimal form that reads back to the rounded value.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float text");
    if rounded == 0.0 {
        return "0".to_string();
    }
    rounded.to_string()
}

/// Rounds to `digits` significant digits for summary columns.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format_real(x);
    }
    let rounded: f64 = format!("{x:.*e}", digits.saturating_sub(1))
        .parse()
        .expect("valid float text");
    rounded.to_string()
}

#[derive(Debug, Parser)]
#[command(
    name = "qec-efficiency",
    version,
    about = "Efficiency of nondegenerate quantum codes on the depolarizing channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check parameter bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Asymptotic rate 1 - 2 H2(x).
    Rate {
        #[arg(long)]
        x: f64,
    },
    /// Query the code registry.
    #[command(subcommand)]
    Registry(RegistryCommand),
    /// Success probability and efficiency of one code over a grid.
    Curve {
        #[arg(long)]
        code: CodeParams,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        boosted: bool,
    },
    /// Pointwise best code of a registry family.
    Envelope {
        #[arg(long)]
        t: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        status: Vec<CodeStatus>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Error probability where two codes are equally efficient.
    Crossover(CrossoverArgs),
    /// Syndrome budget of a code.
    Syndromes {
        #[arg(long)]
        code: CodeParams,
    },
    /// Figure dataset in long format.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Independent oracles for the success probability.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
enum BoundsCommand {
    /// Evaluate every bound for one triple.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Largest k allowed by the quantum Hamming bound.
    MaxK {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Subcommand)]
enum RegistryCommand {
    List {
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        status: Vec<CodeStatus>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    p_min: f64,
    #[arg(long)]
    p_max: f64,
    #[arg(long)]
    points: usize,
    /// Logarithmic spacing; requires p-min > 0.
    #[arg(long)]
    log: bool,
}

impl GridArgs {
    fn grid(&self) -> Result<Grid, Error> {
        if self.log {
            Grid::log(self.p_min, self.p_max, self.points)
        } else {
            Grid::linear(self.p_min, self.p_max, self.points)
        }
    }
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
struct CrossoverArgs {
    #[command(subcommand)]
    approx: Option<CrossoverCommand>,
    #[arg(long, required = true)]
    code_a: Option<CodeParams>,
    #[arg(long, required = true)]
    code_b: Option<CodeParams>,
    #[arg(long, default_value_t = 1e-4)]
    p_lo: f64,
    #[arg(long, default_value_t = 0.1)]
    p_hi: f64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum CrossoverCommand {
    /// Second-order estimate for two codes of the same length.
    Approx {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Exhaustive enumeration of all 4^n Pauli patterns.
    Brute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: f64,
    },
    /// Seeded Monte Carlo sampling of the channel.
    Mc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
}

fn registry_with(file: Option<&Path>) -> Result<CodeRegistry, Error> {
    let builtin = builtin_registry();
    match file {
        None => Ok(builtin),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            builtin.merge(&load_registry(&text)?)
        }
    }
}

fn flag(b: bool) -> String {
    b.to_string()
}

fn figure_points() -> Result<usize, Error> {
    match std::env::var(FIGURE_POINTS_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("{FIGURE_POINTS_ENV}={text:?} is not a count"))),
        Err(_) => Ok(DEFAULT_FIGURE_POINTS),
    }
}

fn execute(command: Command) -> Result<OutputTable, Error> {
    let table = match command {
        Command::Bounds(BoundsCommand::Check { n, k, d }) => {
            let code = CodeParams::new(n, k, d)?;
            let t = code.t();
            let mut table = OutputTable::new(&["bound", "satisfied", "equality"]);
            for kind in BoundKind::ALL {
                let (satisfied, equality) = match kind {
                    BoundKind::Hamming => (
                        flag(bounds::hamming_satisfied(n, k, t)?),
                        flag(bounds::hamming_is_perfect(n, k, t)?),
                    ),
                    BoundKind::GilbertVarshamov => {
                        match bounds::gilbert_varshamov_satisfied(n, k, t) {
                            Ok(ok) => {
                                let needed = crate::combinatorics::syndromes_needed(n, 2 * t);
                                (flag(ok), flag(crate::combinatorics::pow2(n - k) == needed))
                            }
                            Err(Error::Domain(_)) => ("na".into(), "na".into()),
                            Err(e) => return Err(e),
                        }
                    }
                    BoundKind::Singleton => (
                        flag(bounds::singleton_satisfied(n, k, t)?),
                        flag(k as i128 == n as i128 - 4 * t as i128),
                    ),
                    BoundKind::Pure => (
                        flag(bounds::pure_bound_satisfied(n, k, d)?),
                        flag(k as i128 == n as i128 - 2 * d as i128 + 2),
                    ),
                };
                table.push(vec![kind.to_string(), satisfied, equality]);
            }
            table
        }
        Command::Bounds(BoundsCommand::MaxK { n, t }) => {
            let mut table = OutputTable::new(&["n", "t", "max_k"]);
            let k = bounds::max_k_hamming(n, t)?;
            table.push(vec![
                n.to_string(),
                t.to_string(),
                k.map(|k| k.to_string()).unwrap_or_default(),
            ]);
            table
        }
        Command::Rate { x } => {
            let mut table = OutputTable::new(&["x", "rate"]);
            table.push(vec![
                format_real(x),
                format_real(bounds::asymptotic_rate(x)?),
            ]);
            table
        }
        Command::Registry(RegistryCommand::List {
            t,
            status,
            max_n,
            file,
        }) => {
            let registry = registry_with(file.as_deref())?;
            let query = RegistryQuery {
                t,
                statuses: status,
                max_n,
            };
            let mut table = OutputTable::new(&["n", "k", "d", "t", "status", "source"]);
            for r in registry.query(&query) {
                let p = r.params;
                table.push(vec![
                    p.n().to_string(),
                    p.k().to_string(),
                    p.d().to_string(),
                    p.t().to_string(),
                    r.status.to_string(),
                    r.source.clone(),
                ]);
            }
            table
        }
        Command::Curve {
            code,
            grid,
            boosted,
        } => {
            let series = efficiency::efficiency_series(&code, &grid.grid()?, boosted)?;
            let mut table = OutputTable::new(&["p", "P", "E"]);
            for s in series.samples {
                table.push(vec![
                    format_real(s.p),
                    format_real(s.success),
                    format_real(s.efficiency),
                ]);
            }
            table
        }
        Command::Envelope {
            t,
            status,
            file,
            grid,
        } => {
            let registry = registry_with(file.as_deref())?;
            let codes = registry.codes(&RegistryQuery::depth(t).with_statuses(&status));
            let mut table = OutputTable::new(&["p", "best_n", "best_k", "best_d", "E"]);
            for point in analysis::envelope(&codes, &grid.grid()?)? {
                let c = point.best_code;
                table.push(vec![
                    format_real(point.p),
                    c.n().to_string(),
                    c.k().to_string(),
                    c.d().to_string(),
                    format_real(point.efficiency),
                ]);
            }
            table
        }
        Command::Crossover(args) => match args.approx {
            Some(CrossoverCommand::Approx { n, k1, k2 }) => {
                let result = analysis::approx_crossover(n, k1, k2)?;
                let mut table = OutputTable::new(&["method", "p_c", "summary"]);
                table.push(vec![
                    result.method.to_string(),
                    format_real(result.p_c),
                    format_significant(result.p_c, 2),
                ]);
                table
            }
            None => {
                let (Some(a), Some(b)) = (args.code_a, args.code_b) else {
                    unreachable!("clap enforces both codes");
                };
                let result = analysis::exact_crossover(&a, &b, args.p_lo, args.p_hi, args.tol)?;
                let (lo, hi) = result.bracket.expect("exact crossovers carry a bracket");
                let mut table = OutputTable::new(&["method", "p_c", "summary", "p_lo", "p_hi"]);
                table.push(vec![
                    result.method.to_string(),
                    format_real(result.p_c),
                    format_significant(result.p_c, 2),
                    format_real(lo),
                    format_real(hi),
                ]);
                table
            }
        },
        Command::Syndromes { code } => {
            let budget = efficiency::syndrome_budget(&code)?;
            let mut table = OutputTable::new(&[
                "n",
                "k",
                "d",
                "total",
                "used",
                "leftover_r",
                "next_order_q",
                "correctable_ratio",
                "boost_coefficient",
            ]);
            table.push(vec![
                code.n().to_string(),
                code.k().to_string(),
                code.d().to_string(),
                budget.total.to_string(),
                budget.used.to_string(),
                budget.leftover_r.to_string(),
                budget.next_order_q.to_string(),
                format_real(budget.correctable_ratio),
                format_real(budget.efficiency_boost_coefficient()),
            ]);
            table
        }
        Command::Figure { id, points } => {
            let points = match points {
                Some(points) => points,
                None => figure_points()?,
            };
            let grid = Grid::linear(0.0, 0.1, points)?;
            let dataset = analysis::figure_dataset(id, &grid, &builtin_registry())?;
            let mut table = OutputTable::new(&["series", "p", "value"]);
            for series in &dataset.series {
                for &(p, value) in &series.points {
                    table.push(vec![
                        series.name.clone(),
                        format_real(p),
                        format_real(value),
                    ]);
                }
            }
            table
        }
        Command::Verify(VerifyCommand::Brute { n, t, p }) => {
            let value = verification::brute_force_success(n, t, ErrorProbability::new(p)?)?;
            let mut table = OutputTable::new(&["n", "t", "p", "success"]);
            table.push(vec![
                n.to_string(),
                t.to_string(),
                format_real(p),
                format_real(value),
            ]);
            table
        }
        Command::Verify(VerifyCommand::Mc {
            n,
            t,
            p,
            samples,
            seed,
        }) => {
            let report = verification::mc_success(n, t, ErrorProbability::new(p)?, samples, seed)?;
            let mut table = OutputTable::new(&[
                "n",
                "t",
                "p",
                "samples",
                "successes",
                "estimate",
                "std_error",
                "seed",
                "generator",
            ]);
            table.push(vec![
                n.to_string(),
                t.to_string(),
                format_real(p),
                report.samples.to_string(),
                report.successes.to_string(),
                format_real(report.estimate),
                format_real(report.std_error),
                report.seed.to_string(),
                report.generator.to_string(),
            ]);
            table
        }
    };
    Ok(table)
}

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::NoSignChange { .. } => 3,
        _ => 2,
    }
}

/// Runs the CLI on `argv` (program name first), writing CSV to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(table) => match table.write_csv(out) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(0.2), "0.2");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(6003.2291666666), "6003.22916667");
        assert_eq!(format_significant(0.0012724157833, 2), "0.0013");
        assert_eq!(format_significant(0.00105871392705, 2), "0.0011");
    }

    #[test]
    fn table_arity_is_enforced() {
        let mut table = OutputTable::new(&["a", "b"]);
        table.push(vec!["1".into(), "2".into()]);
        let result = std::panic::catch_unwind(move || {
            let mut t = table.clone();
            t.push(vec!["1".into()]);
        });
        assert!(result.is_err());
    }

    #[test]
    fn csv_layout() {
        let mut table = OutputTable::new(&["p", "P", "E"]);
        table.push(vec!["0".into(), "1".into(), "0.2".into()]);
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "p,P,E\n0,1,0.2\n");
    }
}
