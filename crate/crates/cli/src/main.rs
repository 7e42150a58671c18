//! `daehee`: tables, single evaluations, generating functions and identity
//! verification over exact rationals.
//!
//! Exit status is 0 on success, 1 when a verified claim fails (or output
//! cannot be written) and 2 on usage errors.

mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use daehee_core::claims::{self, Grid};
use daehee_core::daehee::Kind;
use daehee_core::exec::Execution;
use daehee_core::{rat, Error};

use table::{Bindings, Family, Generating, Table};

#[derive(Parser, Debug)]
#[command(name = "daehee", version, about = "Exact generalized Daehee, Comtet and poly-Cauchy numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate a family over parameter ranges.
    Table(QueryArgs),
    /// Evaluate one member of a family; every range must be a single value.
    Eval(QueryArgs),
    /// Check registered identities against the oracle.
    Verify(VerifyArgs),
    /// n!-scaled coefficients of a generating function.
    Gf(GfArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    First,
    Second,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::First => Kind::First,
            KindArg::Second => Kind::Second,
        }
    }
}

#[derive(Args, Debug)]
struct TableOutput {
    #[arg(long, value_enum, env = "DAEHEE_FORMAT", default_value = "csv")]
    format: TableFormat,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct QueryArgs {
    family: Family,
    /// Bindings written as key=value, e.g. `n=0..2 k=1..2 alpha=0,1/2`.
    bindings: Vec<String>,
    /// Range `a..b` (inclusive) or a single value.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    k: Option<String>,
    /// Column range for triangles.
    #[arg(long)]
    m: Option<String>,
    /// Comma-separated evaluation points.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Comma-separated shifts α_i.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Comma-separated multiplicities r_i (default all 1).
    #[arg(long)]
    r: Option<String>,
    /// Comma-separated upper limits of the box integral.
    #[arg(long, allow_hyphen_values = true)]
    limits: Option<String>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[command(flatten)]
    out: TableOutput,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Claim ids such as C3, or `all`.
    #[arg(default_value = "all")]
    ids: Vec<String>,
    #[arg(long, value_enum, env = "DAEHEE_REPORT_FORMAT", default_value = "text")]
    format: ReportFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Evaluate grid points on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args, Debug)]
struct GfArgs {
    which: Generating,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 5)]
    order: usize,
    /// Polynomial argument (the `(1+t)^x` or `e^{xt}` factor); ignored for cauchy.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    x: String,
    #[command(flatten)]
    out: TableOutput,
}

enum Failure {
    Usage(String),
    Verification,
    Io(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table(args) => {
            let (family, bindings) = resolve(&args)?;
            let t = table::build(family, &bindings).map_err(Failure::Usage)?;
            emit_table(&t, &args.out)
        }
        Command::Eval(args) => {
            let (family, bindings) = resolve(&args)?;
            let t = table::build(family, &bindings).map_err(Failure::Usage)?;
            if t.rows.len() != 1 {
                return Err(Failure::Usage(format!(
                    "eval needs exactly one point, the bindings select {}",
                    t.rows.len()
                )));
            }
            emit_table(&t, &args.out)
        }
        Command::Gf(args) => {
            let x = rat::parse(&args.x).map_err(|e| Failure::Usage(e.to_string()))?;
            let t = table::generating(args.which, args.k, args.order, &x);
            emit_table(&t, &args.out)
        }
        Command::Verify(args) => verify(args),
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let selected = claims::select(&args.ids).map_err(|e| match e {
        Error::UnknownClaim(_) => Failure::Usage(e.to_string()),
        other => Failure::Io(other.to_string()),
    })?;
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let results = claims::run_claims(&selected, &Grid::default(), exec);
    let report = claims::report(&results);
    let rendered = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Text => report.to_text(),
    };
    write_out(&rendered, args.output.as_ref())?;
    if claims::required_passed(&selected, &report) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn emit_table(t: &Table, out: &TableOutput) -> Result<(), Failure> {
    let rendered = match out.format {
        TableFormat::Csv => t.to_csv(),
        TableFormat::Json => t.to_json(),
    };
    write_out(&rendered, out.output.as_ref())
}

fn write_out(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Merges `key=value` bindings with flags (flags win) and parses them.
fn resolve(args: &QueryArgs) -> Result<(Family, Bindings), Failure> {
    let mut raw = RawBindings::default();
    for b in &args.bindings {
        let (key, value) = b
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("binding {b:?} is not key=value")))?;
        let slot = match key.trim() {
            "n" => &mut raw.n,
            "k" => &mut raw.k,
            "m" => &mut raw.m,
            "x" => &mut raw.x,
            "alpha" => &mut raw.alpha,
            "r" => &mut raw.r,
            "limits" => &mut raw.limits,
            "kind" => &mut raw.kind,
            other => return Err(Failure::Usage(format!("unknown binding {other:?}"))),
        };
        *slot = Some(value.to_string());
    }
    let pick = |flag: &Option<String>, positional: Option<String>| flag.clone().or(positional);
    let usage = Failure::Usage;

    let kind = match (args.kind, raw.kind.as_deref()) {
        (Some(k), _) => k.into(),
        (None, None) | (None, Some("first")) => Kind::First,
        (None, Some("second")) => Kind::Second,
        (None, Some(other)) => return Err(usage(format!("unknown kind {other:?}"))),
    };
    let n = pick(&args.n, raw.n).unwrap_or_else(|| "0..4".into());
    let k = pick(&args.k, raw.k).unwrap_or_else(|| "1".into());
    let m = pick(&args.m, raw.m);
    let x = pick(&args.x, raw.x).unwrap_or_else(|| "0".into());
    let alpha = pick(&args.alpha, raw.alpha).unwrap_or_default();
    let r = pick(&args.r, raw.r);
    let limits = pick(&args.limits, raw.limits).unwrap_or_else(|| "1".into());

    let bindings = Bindings {
        n: table::parse_range(&n).map_err(usage)?,
        k: table::parse_range(&k).map_err(usage)?,
        m: m.as_deref().map(table::parse_range).transpose().map_err(usage)?,
        xs: table::parse_rats(&x).map_err(usage)?,
        alphas: table::parse_rats(&alpha).map_err(usage)?,
        rs: r.as_deref().map(table::parse_u32s).transpose().map_err(usage)?,
        limits: table::parse_rats(&limits).map_err(usage)?,
        kind,
    };
    Ok((args.family, bindings))
}

#[derive(Default)]
struct RawBindings {
    n: Option<String>,
    k: Option<String>,
    m: Option<String>,
    x: Option<String>,
    alpha: Option<String>,
    r: Option<String>,
    limits: Option<String>,
    kind: Option<String>,
}
