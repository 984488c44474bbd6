//! Command-line front end: `eval`, `verify` and `table`.
//!
//! Exit codes: 0 ok, 1 identity check failed, 2 domain error, 3 accuracy
//! failure, 64 usage error, 74 I/O error.

pub mod grid;
pub mod harness;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mzeta_core::golden;
use mzeta_core::identities::{
    zeta2_integral_estimate, zeta2_smooth_approx, zeta3_decomposition, Check, Suite,
};
use mzeta_core::series::{tornheim_series_estimate, zeta2_series_estimate, zeta3_series_estimate};
use mzeta_core::{
    hurwitz_zeta_bounded, EvaluationConfig, VerificationReport, ZetaArgument, ZetaError,
};
use rayon::prelude::*;
use thiserror::Error;

use grid::GridError;
use output::TableRow;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_ACCURACY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("bad grid: {0}")]
    Grid(#[from] GridError),
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Zeta(ZetaError::Domain(_)) => EXIT_DOMAIN,
            CliError::Zeta(ZetaError::Accuracy { .. } | ZetaError::RouteMismatch { .. }) => {
                EXIT_ACCURACY
            }
            CliError::Zeta(ZetaError::Config(_)) => EXIT_USAGE,
            CliError::Zeta(ZetaError::Golden(_)) => EXIT_IO,
            CliError::Grid(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }

    fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "mzeta",
    version,
    about = "Hurwitz, multiple and Tornheim zeta values and their integral identities"
)]
pub struct Cli {
    /// Target relative tolerance.
    #[arg(long, global = true, env = "MZETA_TOL")]
    pub tol: Option<f64>,
    /// Gauss-Legendre order per unit segment.
    #[arg(long, global = true, env = "MZETA_QUAD_ORDER")]
    pub quad_order: Option<usize>,
    /// Cap on unit segments (quadrature) and outer truncation (series).
    #[arg(long, global = true, env = "MZETA_MAX_SEGMENTS")]
    pub max_segments: Option<usize>,
    /// Worker threads for grid commands; 0 picks the number of CPUs.
    #[arg(long, global = true, env = "MZETA_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Check identities over a grid, one report per point.
    Verify(VerifyArgs),
    /// Tabulate a function over a grid.
    Table(TableArgs),
    /// Mint the golden-value table.
    #[command(hide = true)]
    Golden {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Zeta,
    Hurwitz,
    Zeta2,
    Zeta3,
    Tornheim,
}

impl Function {
    pub fn arity(self) -> usize {
        match self {
            Function::Zeta => 1,
            Function::Hurwitz | Function::Zeta2 => 2,
            Function::Zeta3 | Function::Tornheim => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::Zeta => "zeta",
            Function::Hurwitz => "hurwitz",
            Function::Zeta2 => "zeta2",
            Function::Zeta3 => "zeta3",
            Function::Tornheim => "tornheim",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    Integral,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub function: Function,
    /// Comma-separated arguments, e.g. 2,2.
    #[arg(long, allow_hyphen_values = true)]
    pub args: String,
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Theorem1,
    Theorem2,
    Reflection,
    ClosedForms,
    TornheimReduction,
    All,
}

impl From<SuiteName> for Suite {
    fn from(s: SuiteName) -> Self {
        match s {
            SuiteName::Theorem1 => Suite::Theorem1,
            SuiteName::Theorem2 => Suite::Theorem2,
            SuiteName::Reflection => Suite::Reflection,
            SuiteName::ClosedForms => Suite::ClosedForms,
            SuiteName::TornheimReduction => Suite::TornheimReduction,
            SuiteName::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: SuiteName,
    /// `default` or `;`-separated tuples such as "2,3;3,2".
    #[arg(long, default_value = "default", allow_hyphen_values = true)]
    pub grid: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub function: Function,
    /// Range for the first argument: start:stop:step or a comma list.
    #[arg(long, allow_hyphen_values = true)]
    pub s1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s3: Option<String>,
    /// Explicit `;`-separated tuples instead of ranges.
    #[arg(long, conflicts_with_all = ["s1", "s2", "s3"], allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "mzeta: {e}");
            e.exit_code()
        }
    }
}

pub fn config(cli: &Cli) -> CliResult<EvaluationConfig> {
    let mut cfg = EvaluationConfig::default();
    if let Some(t) = cli.tol {
        cfg = cfg.with_rel_tol(t);
    }
    if let Some(q) = cli.quad_order {
        cfg = cfg.with_quad_order(q);
    }
    if let Some(m) = cli.max_segments {
        cfg = cfg.with_max_segments(m);
    }
    cfg.validate()?;
    Ok(cfg)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let cfg = config(cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    match &cli.command {
        Command::Eval(a) => cmd_eval(a, &cfg, out),
        Command::Verify(a) => cmd_verify(a, &cfg, &pool, out),
        Command::Table(a) => cmd_table(a, &cfg, &pool, out),
        Command::Golden { out: path } => {
            let table = golden::mint(&cfg)?;
            let text = golden::write_table(&table)?;
            emit(path.as_ref(), text.as_bytes(), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// A value with its reported error and a description of how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub error: f64,
    pub provenance: &'static str,
}

pub fn evaluate(
    function: Function,
    args: &[f64],
    method: Method,
    cfg: &EvaluationConfig,
) -> CliResult<Evaluation> {
    if args.len() != function.arity() {
        return Err(CliError::Usage(format!(
            "{} takes {} argument(s), got {}",
            function.name(),
            function.arity(),
            args.len()
        )));
    }
    let unsupported = || {
        CliError::Usage(format!(
            "method {} is not available for {}",
            method_name(method),
            function.name()
        ))
    };
    let e = match (function, method) {
        (Function::Zeta, Method::Series) => {
            let v = hurwitz_zeta_bounded(ZetaArgument::new(args[0], 1.0)?, cfg)?;
            Evaluation {
                value: v.value,
                error: v.error_bound,
                provenance: "Euler-Maclaurin summation",
            }
        }
        (Function::Hurwitz, Method::Series) => {
            let v = hurwitz_zeta_bounded(ZetaArgument::new(args[0], args[1])?, cfg)?;
            Evaluation {
                value: v.value,
                error: v.error_bound,
                provenance: "Euler-Maclaurin summation",
            }
        }
        (Function::Zeta2, Method::Series) => {
            let v = zeta2_series_estimate(args[0], args[1], cfg)?;
            Evaluation {
                value: v.value,
                error: v.tail_bound,
                provenance: "double series with expanded tail",
            }
        }
        (Function::Zeta2, Method::Integral) => {
            let v = zeta2_integral_estimate(args[0], args[1], cfg)?;
            Evaluation {
                value: v.value,
                error: v.error,
                provenance: "s1 * integral of zeta(s1+1,u) zeta(s2,[u]+1)",
            }
        }
        (Function::Zeta2, Method::Approx) => {
            let v = zeta2_smooth_approx(args[0], args[1], cfg)?;
            Evaluation {
                value: v.approx,
                error: v.a_bound,
                provenance:
                    "s1 * integral of zeta(s1+1,u) zeta(s2,u); exceeds zeta2 by at most the error",
            }
        }
        (Function::Zeta3, Method::Series) => {
            let v = zeta3_series_estimate(args[0], args[1], args[2], cfg)?;
            Evaluation {
                value: v.value,
                error: v.tail_bound,
                provenance: "nested series with expanded tail",
            }
        }
        (Function::Zeta3, Method::Integral) => {
            let v = zeta3_decomposition(args[0], args[1], args[2], cfg)?;
            Evaluation {
                value: v.value,
                error: v.error,
                provenance: "eight-term integral decomposition",
            }
        }
        (Function::Tornheim, Method::Series) => {
            let v = tornheim_series_estimate(args[0], args[1], args[2], cfg)?;
            Evaluation {
                value: v.value,
                error: v.tail_bound,
                provenance: "double series with extrapolated corner",
            }
        }
        _ => return Err(unsupported()),
    };
    Ok(e)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Series => "series",
        Method::Integral => "integral",
        Method::Approx => "approx",
    }
}

fn cmd_eval(a: &EvalArgs, cfg: &EvaluationConfig, out: &mut dyn Write) -> CliResult<i32> {
    let args = grid::parse_list(&a.args)?;
    let e = evaluate(a.function, &args, a.method, cfg)?;
    let row = TableRow {
        function: a.function.name().to_string(),
        method: method_name(a.method).to_string(),
        args: args.clone(),
        value: e.value,
        error: e.error,
    };
    let text = match a.format {
        Format::Text => format!(
            "{} ± {:.3e}  [{} {}: {}]\n",
            output::real(e.value),
            e.error,
            a.function.name(),
            method_name(a.method),
            e.provenance
        ),
        Format::Json => output::json_line(&row)?,
        Format::Csv => output::table_csv(&[row], args.len())?,
    };
    emit(None, text.as_bytes(), out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    a: &VerifyArgs,
    cfg: &EvaluationConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let suite: Suite = a.suite.into();
    let checks: Vec<Check> = if a.grid == "default" {
        suite.default_checks()
    } else {
        let mut checks = Vec::new();
        for tuple in grid::parse_tuples(&a.grid)? {
            checks.extend(
                suite
                    .checks_for(&tuple)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            );
        }
        checks
    };
    let results: Vec<mzeta_core::Result<VerificationReport>> =
        pool.install(|| checks.par_iter().map(|c| c.run(cfg)).collect());
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    let text = match a.format {
        Format::Csv => output::reports_csv(&reports)?,
        Format::Json | Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&output::json_line(r)?);
            }
            s
        }
    };
    emit(None, text.as_bytes(), out)?;
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn cmd_table(
    a: &TableArgs,
    cfg: &EvaluationConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let arity = a.function.arity();
    let points = match &a.grid {
        Some(spec) => grid::parse_tuples(spec)?,
        None => {
            let specs = [&a.s1, &a.s2, &a.s3];
            let mut axes = Vec::with_capacity(arity);
            for (i, spec) in specs.iter().enumerate() {
                match (spec, i < arity) {
                    (Some(s), true) => axes.push(grid::parse_range(s)?),
                    (None, true) => {
                        return Err(CliError::Usage(format!(
                            "{} needs --s{} (or --grid)",
                            a.function.name(),
                            i + 1
                        )))
                    }
                    (Some(_), false) => {
                        return Err(CliError::Usage(format!(
                            "{} takes no --s{}",
                            a.function.name(),
                            i + 1
                        )))
                    }
                    (None, false) => {}
                }
            }
            grid::cartesian(&axes)
        }
    };
    if let Some(bad) = points.iter().find(|p| p.len() != arity) {
        return Err(CliError::Usage(format!(
            "{} takes {arity} argument(s), grid point {bad:?} has {}",
            a.function.name(),
            bad.len()
        )));
    }
    let values: Vec<CliResult<Evaluation>> = pool.install(|| {
        points
            .par_iter()
            .map(|p| evaluate(a.function, p, a.method, cfg))
            .collect()
    });
    let mut rows = Vec::with_capacity(points.len());
    for (p, v) in points.iter().zip(values) {
        let v = v?;
        rows.push(TableRow {
            function: a.function.name().to_string(),
            method: method_name(a.method).to_string(),
            args: p.clone(),
            value: v.value,
            error: v.error,
        });
    }
    let text = match a.format {
        Format::Json => {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&output::json_line(r)?);
            }
            s
        }
        Format::Csv | Format::Text => output::table_csv(&rows, arity)?,
    };
    emit(a.out.as_ref(), text.as_bytes(), out)?;
    Ok(EXIT_OK)
}

fn emit(path: Option<&PathBuf>, bytes: &[u8], out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::io(p.display().to_string(), e)),
        None => out
            .write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| CliError::io("stdout", e)),
    }
}
