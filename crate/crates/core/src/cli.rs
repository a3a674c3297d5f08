//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards arguments and the exit code.
//!
//! Exit codes: 0 success or match, 1 usage or unreadable input, 2
//! construction failure, 3 verification mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{ConstructionReport, D5Strategy, Generator};
use crate::error::Error;
use crate::formulas::{diam_formula, unit_formula_d4, unit_formula_even, FormulaResult};
use crate::geom::{build_distance_graph, DistanceKind, TolerancePolicy};
use crate::io::{read_config, read_report, sidecar_path, write_config, write_report};
use crate::verify::{config_digest, detect_lenz_with, verify_config, CountReport, DetectOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONSTRUCTION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lenzkit",
    version,
    about = "Unit distance and diameter configurations in R^d"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a configuration and its report sidecar.
    Gen(GenArgs),
    /// Tabulate a closed-form maximum.
    Table(TableArgs),
    /// Count unit distances or diameters in a point file.
    Count(CountArgs),
    /// Recount a point file against its sidecar's generator.
    Verify(VerifyArgs),
    /// Recover Lenz structure from a point file.
    Detect(DetectArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    EvenUnit,
    EvenDiam,
    D4Diam,
    OddDiam,
    D5Diam,
    SphereDiam,
    SphereNDiam,
    Squares,
    Star,
    Arc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    SphereHeavy,
    StarPolygon,
}

impl From<StrategyArg> for D5Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => D5Strategy::Auto,
            StrategyArg::SphereHeavy => D5Strategy::SphereHeavy,
            StrategyArg::StarPolygon => D5Strategy::StarPolygon,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    /// Ambient dimension, for the kinds that take one.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub strategy: StrategyArg,
    /// Apply a random rotation drawn from this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Circle or sphere radius for `arc` and `sphere-n-diam`.
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaArg {
    /// Unit distances: even d >= 6, and d = 4.
    Unit,
    /// Diameters: d >= 4.
    Diam,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub formula: FormulaArg,
    /// Inclusive range `a..b`, or a single value.
    #[arg(long, value_parser = parse_range)]
    pub d: (usize, usize),
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(alias = "unit-distance")]
    Unit,
    #[value(alias = "diam")]
    Diameter,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Absolute length tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Report sidecar; defaults to `<file>.report.json`.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConstructionFailed(_) | Error::Unachievable(_) => EXIT_CONSTRUCTION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<crate::io::FileError> for Failure {
    fn from(e: crate::io::FileError) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
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
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Detect(a) => cmd_detect(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("outputs always serialise");
    writeln!(out, "{text}").map_err(|e| Failure::usage(e.to_string()))
}

fn generator_for(a: &GenArgs) -> Result<Generator, Failure> {
    let d = || {
        a.d.ok_or_else(|| Failure::usage(format!("--kind {:?} needs --d", a.kind)))
    };
    let fixed = |want: usize| match a.d {
        Some(d) if d != want => Err(Failure::usage(format!(
            "this kind lives in R^{want}, got --d {d}"
        ))),
        _ => Ok(()),
    };
    let radius = |default: Option<f64>| {
        a.radius
            .or(default)
            .ok_or_else(|| Failure::usage("this kind needs --radius"))
    };
    Ok(match a.kind {
        GenKind::EvenUnit => Generator::EvenUnit { d: d()? },
        GenKind::EvenDiam => Generator::EvenDiam { d: d()? },
        GenKind::OddDiam => Generator::OddDiam { d: d()? },
        GenKind::D4Diam => {
            fixed(4)?;
            Generator::D4Diam
        }
        GenKind::D5Diam => {
            fixed(5)?;
            Generator::D5Diam {
                strategy: a.strategy.into(),
            }
        }
        GenKind::SphereDiam => {
            fixed(3)?;
            Generator::SphereDiam
        }
        GenKind::SphereNDiam => {
            fixed(3)?;
            Generator::SphereNDiam {
                radius: radius(None)?,
            }
        }
        GenKind::Squares | GenKind::Star => {
            fixed(2)?;
            if a.kind == GenKind::Squares {
                Generator::Squares
            } else {
                Generator::Star
            }
        }
        GenKind::Arc => {
            fixed(2)?;
            Generator::Arc {
                radius: radius(Some(std::f64::consts::FRAC_1_SQRT_2))?,
            }
        }
    })
}

#[derive(Serialize)]
struct GenSummary<'a> {
    generator: &'a str,
    n: usize,
    dim: usize,
    expected: u64,
    achieved: u64,
    out: String,
    report: String,
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let generator = generator_for(a)?;
    let mut report: ConstructionReport = generator.build(a.n)?;
    if let Some(seed) = a.seed {
        report = report.rotated(seed);
    }
    let sidecar = sidecar_path(&a.out);
    write_config(&a.out, &report.config)?;
    write_report(&sidecar, &report)?;
    emit_json(
        out,
        &GenSummary {
            generator: generator.name(),
            n: a.n,
            dim: report.config.dim,
            expected: report.expected_count,
            achieved: report.achieved_count,
            out: a.out.display().to_string(),
            report: sidecar.display().to_string(),
        },
    )?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub d: usize,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymptotic_only: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn table_rows(formula: FormulaArg, d: (usize, usize), n: (usize, usize)) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for d in d.0..=d.1 {
        for n in n.0..=n.1 {
            let res: crate::Result<FormulaResult> = match formula {
                FormulaArg::Diam => diam_formula(d, n),
                FormulaArg::Unit if d == 4 => unit_formula_d4(n),
                FormulaArg::Unit => unit_formula_even(d, n),
            };
            rows.push(match res {
                Ok(f) => TableRow {
                    d,
                    n,
                    value: Some(f.value),
                    case_label: Some(f.case_label),
                    asymptotic_only: Some(f.asymptotic_only),
                    error: None,
                },
                Err(e) => TableRow {
                    d,
                    n,
                    value: None,
                    case_label: None,
                    asymptotic_only: None,
                    error: Some(e.to_string()),
                },
            });
        }
    }
    rows
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let rows = table_rows(a.formula, a.d, a.n);
    match a.format {
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::usage(e.to_string());
            w.write_record(["d", "n", "value", "case", "asymptotic_only"])
                .map_err(io)?;
            for r in &rows {
                let value = r.value.map(|v| v.to_string()).unwrap_or_default();
                let case = match &r.error {
                    Some(e) => format!("error: {e}"),
                    None => r.case_label.clone().unwrap_or_default(),
                };
                let asym = r.asymptotic_only.map(|b| b.to_string()).unwrap_or_default();
                w.write_record([r.d.to_string(), r.n.to_string(), value, case, asym])
                    .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
            out.write_all(&bytes)
                .map_err(|e| Failure::usage(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let config = read_config(&a.file)?;
    let kind = match a.kind {
        KindArg::Unit => DistanceKind::UnitDistance,
        KindArg::Diameter => DistanceKind::Diameter,
    };
    let tol = match a.tol {
        Some(t) => TolerancePolicy::new(t, TolerancePolicy::default().eps_rel)?,
        None => TolerancePolicy::default(),
    };
    let g = build_distance_graph(&config, kind, &tol)?;
    writeln!(out, "{}", g.edge_count()).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyOutput {
    #[serde(flatten)]
    report: CountReport,
    generator: String,
    /// The sidecar's digest and counts agree with the point file.
    sidecar_consistent: bool,
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let config = read_config(&a.file)?;
    let report_path = a.report.clone().unwrap_or_else(|| sidecar_path(&a.file));
    let sidecar = read_report(&report_path)?;
    let count = match verify_config(&sidecar.generator, &config) {
        Ok(c) => c,
        Err(Error::InvalidInput(m)) => {
            return Err(Failure {
                code: EXIT_MISMATCH,
                message: format!("sidecar generator does not apply to this file: {m}"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let sidecar_consistent = config_digest(&sidecar.config) == count.config_digest
        && sidecar.achieved_count == count.achieved
        && sidecar.expected_count == count.formula;
    let ok = count.matched && sidecar_consistent;
    emit_json(
        out,
        &VerifyOutput {
            generator: sidecar.generator.name().into(),
            report: count,
            sidecar_consistent,
        },
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_detect(a: &DetectArgs, out: &mut dyn Write) -> CmdResult {
    let config = read_config(&a.file)?;
    let options = DetectOptions {
        seed: a.seed,
        ..DetectOptions::default()
    };
    let s = detect_lenz_with(&config, a.epsilon, &options)?;
    emit_json(out, &s)?;
    Ok(EXIT_OK)
}
