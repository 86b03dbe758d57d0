//! The `bohr` command line: `radius`, `tables`, `audit` and `verify`.
//!
//! Exit codes: `0` success, `1` a golden cell or verification check failed,
//! `2` usage or validation error, `3` numerical failure.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{all_tables, table_by_id, TableSpec, GOLDEN_TOLERANCE};
use crate::radius::{LiteralTag, Mode, RadiusError, RadiusProblem, RootResult, SolverOptions, Theorem};
use crate::verify::{self, AuditRecord, Suite, SuiteReport, Verdict};
use crate::weights::{WeightFamily, WeightKind};
use crate::Order;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Generalized Bohr and Bohr-Rogosinski radii")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one radius problem.
    Radius(RadiusArgs),
    /// Recompute the printed tables and compare with the golden values.
    Tables(TablesArgs),
    /// Compare every printed equation with its canonical instantiation.
    Audit(AuditArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Md,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct RadiusArgs {
    /// Flat TOML file with any of the keys below; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// T1, T2, T3 or T4 (inferred from a literal mode when omitted).
    #[arg(long)]
    pub theorem: Option<String>,
    /// power | even | odd | linear | affine | quadratic | stride:n | poly:c0,c1,c2 | zero
    #[arg(long)]
    pub family: Option<String>,
    /// First index N of the weight family.
    #[arg(long = "N", visible_alias = "n")]
    pub n: Option<u32>,
    /// Positive integer or `inf`.
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub p: Option<f64>,
    /// `canonical` or `literal:<tag>`, e.g. `literal:R14eq`.
    #[arg(long)]
    pub mode: Option<String>,
    /// Head weight ν₀ (ψ₀).
    #[arg(long)]
    pub head: Option<f64>,
    /// Final bracket width of the root.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    /// Table identifiers (`R1` … `R16`) or `all`.
    #[arg(default_value = "all")]
    pub ids: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Final bracket width of each root.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct AuditArgs {
    /// Restrict to these tags (`R5`, `R5eq`, …).
    pub tags: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// lemmas | inequalities | sharpness | radii | all
    #[arg(default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parse `std::env::args`, run, and return the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Radius(args) => cmd_radius(args),
        Command::Tables(args) => cmd_tables(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn solver_options(tol: Option<f64>) -> Result<SolverOptions, CliError> {
    let mut options = SolverOptions::default();
    if let Some(tol) = tol {
        if !(tol > 0.0 && tol < options.scan_step) {
            return Err(CliError::Usage(format!(
                "--tol must lie in (0, {}), got {tol}",
                options.scan_step
            )));
        }
        options.bracket_width = tol;
    }
    Ok(options)
}

/// `x` with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io_err = |e: csv::Error| CliError::Io(io::Error::other(e));
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn md_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n", header.join(" | "));
    s.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in rows {
        s.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    s
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

// ---------------------------------------------------------------- radius

/// Flat key/value configuration for `radius`; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub theorem: Option<String>,
    pub family: Option<String>,
    #[serde(rename = "N", alias = "n")]
    pub n: Option<u32>,
    pub m: Option<toml::Value>,
    pub p: Option<f64>,
    pub mode: Option<String>,
    pub head: Option<f64>,
    pub tol: Option<f64>,
    pub format: Option<String>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("bad config: {e}")))
    }

    /// Flags win over file values.
    fn merged_into(self, args: &RadiusArgs) -> Result<RadiusArgs, CliError> {
        let m = match self.m {
            None => None,
            Some(toml::Value::Integer(i)) => Some(i.to_string()),
            Some(toml::Value::String(s)) => Some(s),
            Some(v) => return Err(CliError::Usage(format!("config key m: expected integer or \"inf\", got {v}"))),
        };
        let format = match self.format {
            None => None,
            Some(f) => Some(
                Format::from_str(&f, true).map_err(|_| CliError::Usage(format!("config key format: unknown format `{f}`")))?,
            ),
        };
        Ok(RadiusArgs {
            config: None,
            theorem: args.theorem.clone().or(self.theorem),
            family: args.family.clone().or(self.family),
            n: args.n.or(self.n),
            m: args.m.clone().or(m),
            p: args.p.or(self.p),
            mode: args.mode.clone().or(self.mode),
            head: args.head.or(self.head),
            tol: args.tol.or(self.tol),
            format: args.format.or(format),
            out: args.out.clone(),
        })
    }
}

/// `power`, `stride:3`, `poly:1,0.5,0`, …
pub fn parse_family(spec: &str, start: u32, head: f64) -> Result<WeightFamily, CliError> {
    let s = spec.trim().to_ascii_lowercase();
    let (name, arg) = match s.split_once(':') {
        Some((a, b)) => (a.to_string(), Some(b.to_string())),
        None => (s.clone(), None),
    };
    let kind = match (name.as_str(), arg) {
        ("power", None) => WeightKind::Power,
        ("even", None) => WeightKind::EvenPower,
        ("odd", None) => WeightKind::OddPower,
        ("linear", None) => WeightKind::Linear,
        ("affine", None) => WeightKind::Affine,
        ("quadratic", None) => WeightKind::Quadratic,
        ("zero", None) => WeightKind::Zero,
        ("stride", Some(n)) => WeightKind::StridePower {
            stride: n
                .parse()
                .map_err(|_| CliError::Usage(format!("stride must be a positive integer, got `{n}`")))?,
        },
        ("poly", Some(cs)) => {
            let c: Vec<f64> = cs
                .split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("poly expects three numbers c0,c1,c2, got `{cs}`")))?;
            match c[..] {
                [c0, c1, c2] => WeightKind::Polynomial { c0, c1, c2 },
                _ => return Err(CliError::Usage(format!("poly expects three numbers c0,c1,c2, got `{cs}`"))),
            }
        }
        _ => return Err(CliError::Usage(format!("unknown family `{spec}`"))),
    };
    WeightFamily::with_head(kind, start, head).map_err(|e| CliError::Usage(e.to_string()))
}

/// Build the problem described by `args` (config file already merged).
pub fn build_problem(args: &RadiusArgs) -> Result<RadiusProblem, CliError> {
    let usage = |e: RadiusError| CliError::Usage(e.to_string());
    let mode: Mode = match &args.mode {
        Some(m) => m.parse().map_err(usage)?,
        None => Mode::Canonical,
    };
    let theorem: Theorem = match (&args.theorem, mode) {
        (Some(t), _) => t.parse().map_err(usage)?,
        (None, Mode::Literal(tag)) => tag.theorem(),
        (None, Mode::Canonical) => return Err(CliError::Usage("--theorem is required in canonical mode".into())),
    };
    let start = args.n.unwrap_or(1);
    let head = args.head.unwrap_or(1.0);
    let family = match (&args.family, mode) {
        (Some(f), _) => parse_family(f, start, head)?,
        (None, Mode::Literal(tag)) => {
            let mut f = tag.canonical_family(start);
            f.head_weight = head;
            f
        }
        (None, Mode::Canonical) => return Err(CliError::Usage("--family is required in canonical mode".into())),
    };
    let m: Order = match &args.m {
        Some(m) => m.parse().map_err(|e: crate::order::ParseOrderError| CliError::Usage(e.to_string()))?,
        None => Order::Finite(1),
    };
    let problem = RadiusProblem {
        theorem,
        p: args.p,
        m,
        family,
        mode,
    };
    problem.validate().map_err(usage)?;
    Ok(problem)
}

#[derive(Debug, Serialize)]
struct RadiusReport<'a> {
    problem: &'a RadiusProblem,
    result: &'a RootResult,
}

fn cmd_radius(args: &RadiusArgs) -> Result<i32, CliError> {
    let args = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            RunConfig::from_toml(&text)?.merged_into(args)?
        }
        None => args.clone(),
    };
    let problem = build_problem(&args)?;
    let options = solver_options(args.tol)?;
    let result = problem.solve(&options).map_err(|e| match e {
        RadiusError::Invalid(_) | RadiusError::UnknownTag(_) => CliError::Usage(e.to_string()),
        e => CliError::Numerical(e.to_string()),
    })?;
    let text = match args.format {
        None => {
            let mut s = String::new();
            let _ = writeln!(s, "root       {}", sig12(result.root));
            let _ = writeln!(s, "bracket    [{}, {}]", sig12(result.bracket[0]), sig12(result.bracket[1]));
            let _ = writeln!(s, "residual   {:e}", result.residual);
            let _ = writeln!(s, "iterations {}", result.iterations);
            let _ = writeln!(s, "mode       {}", problem.mode);
            s
        }
        Some(Format::Json) => json_text(&RadiusReport {
            problem: &problem,
            result: &result,
        }),
        Some(f) => {
            let header = ["theorem", "family", "m", "p", "mode", "root", "bracket_lo", "bracket_hi", "residual", "iterations"];
            let row = vec![
                problem.theorem.to_string(),
                problem.family.to_string(),
                problem.m.to_string(),
                opt(problem.p),
                problem.mode.to_string(),
                sig12(result.root),
                sig12(result.bracket[0]),
                sig12(result.bracket[1]),
                format!("{:e}", result.residual),
                result.iterations.to_string(),
            ];
            if f == Format::Csv {
                csv_text(&header, &[row])?
            } else {
                md_text(&header, &[row])
            }
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- tables

/// One recomputed table cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellResult {
    pub table_id: String,
    pub m: Option<u32>,
    #[serde(rename = "N")]
    pub n: Option<u32>,
    pub p: Option<f64>,
    pub computed: Option<f64>,
    pub golden: f64,
    pub golden_raw: &'static str,
    pub delta: Option<f64>,
    pub pass: bool,
    pub anomaly: Option<&'static str>,
    pub error: Option<String>,
}

/// Recompute every cell of `tables` in literal mode, in table order.
pub fn compute_tables(tables: &[TableSpec], options: &SolverOptions) -> Vec<CellResult> {
    let jobs: Vec<(LiteralTag, &crate::catalog::GoldenCell)> =
        tables.iter().flat_map(|t| t.cells.iter().map(move |c| (t.tag, c))).collect();
    jobs.par_iter()
        .map(|&(tag, cell)| {
            let solved = tag.literal_problem(cell.params).solve(options);
            let (computed, error) = match solved {
                Ok(r) => (Some(r.root), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let delta = computed.map(|c| c - cell.golden);
            CellResult {
                table_id: tag.table_id(),
                m: tag.uses_m().then_some(cell.params.m),
                n: tag.uses_n().then_some(cell.params.n),
                p: tag.uses_p().then_some(cell.params.p),
                computed,
                golden: cell.golden,
                golden_raw: cell.golden_raw,
                delta,
                pass: delta.is_some_and(|d| d.abs() <= GOLDEN_TOLERANCE),
                anomaly: cell.anomaly,
                error,
            }
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct TablesSummary {
    cells: usize,
    passed: usize,
    failed: usize,
    failed_flagged: usize,
    solver_failures: usize,
    tolerance: f64,
}

#[derive(Debug, Serialize)]
struct TablesReport<'a> {
    tables: Vec<TableJson<'a>>,
    summary: TablesSummary,
}

#[derive(Debug, Serialize)]
struct TableJson<'a> {
    table_id: &'a str,
    caption: &'a str,
    cells: Vec<&'a CellResult>,
}

fn summarize(cells: &[CellResult]) -> TablesSummary {
    let failed: Vec<&CellResult> = cells.iter().filter(|c| !c.pass).collect();
    TablesSummary {
        cells: cells.len(),
        passed: cells.len() - failed.len(),
        failed: failed.len(),
        failed_flagged: failed.iter().filter(|c| c.anomaly.is_some()).count(),
        solver_failures: cells.iter().filter(|c| c.error.is_some()).count(),
        tolerance: GOLDEN_TOLERANCE,
    }
}

const TABLE_HEADER: [&str; 8] = ["table_id", "m", "N", "p", "computed", "golden", "delta", "pass"];

fn table_row(c: &CellResult) -> Vec<String> {
    vec![
        c.table_id.clone(),
        opt(c.m),
        opt(c.n),
        opt(c.p),
        c.computed.map(sig12).unwrap_or_default(),
        c.golden_raw.replace(',', "."),
        c.delta.map(|d| format!("{d:.3e}")).unwrap_or_default(),
        c.pass.to_string(),
    ]
}

/// Render recomputed cells in the requested format.
pub fn render_tables(tables: &[TableSpec], cells: &[CellResult], format: Format) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> = cells.iter().map(table_row).collect();
    Ok(match format {
        Format::Csv => csv_text(&TABLE_HEADER, &rows)?,
        Format::Md => {
            let mut s = String::new();
            for t in tables {
                let id = t.tag.table_id();
                let own: Vec<Vec<String>> = cells.iter().filter(|c| c.table_id == id).map(table_row).collect();
                let _ = writeln!(s, "### {id}: {}\n", t.caption);
                s.push_str(&md_text(&TABLE_HEADER, &own));
                s.push('\n');
            }
            let sum = summarize(cells);
            let _ = writeln!(
                s,
                "{} of {} cells within {:e}.",
                sum.passed, sum.cells, GOLDEN_TOLERANCE
            );
            let flagged: Vec<&CellResult> = cells.iter().filter(|c| c.anomaly.is_some()).collect();
            if !flagged.is_empty() {
                s.push_str("\nAnomalies in the printed tables:\n\n");
                for c in flagged {
                    let _ = writeln!(
                        s,
                        "- {} m={} N={} p={}: printed `{}`, {} ({})",
                        c.table_id,
                        opt(c.m),
                        opt(c.n),
                        opt(c.p),
                        c.golden_raw,
                        c.anomaly.unwrap_or_default(),
                        if c.pass { "within tolerance" } else { "outside tolerance" }
                    );
                }
            }
            s
        }
        Format::Json => {
            let report = TablesReport {
                tables: tables
                    .iter()
                    .map(|t| TableJson {
                        table_id: t.table_id.as_str(),
                        caption: t.caption,
                        cells: cells.iter().filter(|c| c.table_id == t.table_id).collect(),
                    })
                    .collect(),
                summary: summarize(cells),
            };
            json_text(&report)
        }
    })
}

/// Tables named by `ids` (`all` selects every table).
pub fn select_tables(ids: &[String]) -> Result<Vec<TableSpec>, CliError> {
    if ids.is_empty() || ids.iter().any(|i| i.eq_ignore_ascii_case("all")) {
        return Ok(all_tables());
    }
    ids.iter()
        .map(|id| table_by_id(id).ok_or_else(|| CliError::Usage(format!("unknown table id `{id}`"))))
        .collect()
}

fn cmd_tables(args: &TablesArgs) -> Result<i32, CliError> {
    let tables = select_tables(&args.ids)?;
    let options = solver_options(args.tol)?;
    let cells = compute_tables(&tables, &options);
    let text = render_tables(&tables, &cells, args.output.format.unwrap_or(Format::Csv))?;
    emit(args.output.out.as_deref(), &text)?;
    let sum = summarize(&cells);
    Ok(if sum.solver_failures > 0 {
        EXIT_NUMERICAL
    } else if sum.failed > sum.failed_flagged {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

// ----------------------------------------------------------------- audit

#[derive(Debug, Serialize)]
struct TagSummary {
    tag: LiteralTag,
    rows: usize,
    consistent: usize,
    discrepant: usize,
    solver_failures: usize,
}

#[derive(Debug, Serialize)]
struct AuditReport<'a> {
    records: &'a [AuditRecord],
    summary: Vec<TagSummary>,
}

fn tag_summaries(records: &[AuditRecord]) -> Vec<TagSummary> {
    let mut out: Vec<TagSummary> = Vec::new();
    for r in records {
        if out.last().is_none_or(|s| s.tag != r.tag) {
            out.push(TagSummary {
                tag: r.tag,
                rows: 0,
                consistent: 0,
                discrepant: 0,
                solver_failures: 0,
            });
        }
        let s = out.last_mut().expect("pushed above");
        s.rows += 1;
        match r.verdict {
            Verdict::Consistent => s.consistent += 1,
            Verdict::Discrepant => s.discrepant += 1,
            Verdict::SolverFailure => s.solver_failures += 1,
        }
    }
    out
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Consistent => "consistent",
        Verdict::Discrepant => "discrepant",
        Verdict::SolverFailure => "solver_failure",
    }
}

/// Render audit records in the requested format.
pub fn render_audit(records: &[AuditRecord], format: Format) -> Result<String, CliError> {
    let header = [
        "tag", "theorem", "m", "N", "p", "root_literal", "root_canonical", "abs_diff", "cross_residual",
        "verdict", "p_in_theorem_range", "alternate_root_canonical", "alternate_verdict", "status",
    ];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let diff = match (r.root_literal, r.root_canonical) {
                (Some(a), Some(b)) => format!("{:.3e}", (a - b).abs()),
                _ => String::new(),
            };
            vec![
                r.tag.to_string(),
                r.theorem.to_string(),
                if r.tag.uses_m() { r.params.m.to_string() } else { String::new() },
                if r.tag.uses_n() { r.params.n.to_string() } else { String::new() },
                if r.tag.uses_p() { r.params.p.to_string() } else { String::new() },
                r.root_literal.map(sig12).unwrap_or_default(),
                r.root_canonical.map(sig12).unwrap_or_default(),
                diff,
                r.cross_residual.map(|x| format!("{x:.3e}")).unwrap_or_default(),
                verdict_name(r.verdict).to_string(),
                r.p_in_theorem_range.to_string(),
                r.alternate_root_canonical.map(sig12).unwrap_or_default(),
                r.alternate_verdict.map(verdict_name).unwrap_or_default().to_string(),
                r.status.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let summary = tag_summaries(records);
    Ok(match format {
        Format::Csv => csv_text(&header, &rows)?,
        Format::Json => json_text(&AuditReport { records, summary }),
        Format::Md => {
            let mut s = md_text(&header, &rows);
            s.push_str("\nSummary by tag:\n\n");
            for t in &summary {
                let verdict = if t.discrepant == 0 && t.solver_failures == 0 {
                    "consistent".to_string()
                } else {
                    format!(
                        "{} discrepant, {} solver failures, {} consistent",
                        t.discrepant, t.solver_failures, t.consistent
                    )
                };
                let _ = writeln!(s, "- {}: {} rows, {verdict}", t.tag, t.rows);
            }
            s
        }
    })
}

fn cmd_audit(args: &AuditArgs) -> Result<i32, CliError> {
    let options = solver_options(args.tol)?;
    let filter: Vec<LiteralTag> = args
        .tags
        .iter()
        .map(|t| t.parse().map_err(|e: RadiusError| CliError::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    let mut records = verify::audit_all(&options).map_err(|e| CliError::Numerical(e.to_string()))?;
    if !filter.is_empty() {
        records.retain(|r| filter.contains(&r.tag));
    }
    let text = render_audit(&records, args.output.format.unwrap_or(Format::Csv))?;
    emit(args.output.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- verify

/// Render a suite report in the requested format.
pub fn render_verify(report: &SuiteReport, format: Format) -> Result<String, CliError> {
    let header = ["suite", "check", "passed", "evaluations", "violations", "worst", "threshold", "detail"];
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.suite.to_string(),
                c.name.clone(),
                c.passed.to_string(),
                c.evaluations.to_string(),
                c.violations.to_string(),
                format!("{:e}", c.worst),
                format!("{:e}", c.threshold),
                c.detail.clone(),
            ]
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_text(&header, &rows)?,
        Format::Json => json_text(report),
        Format::Md => {
            let mut s = md_text(&header, &rows);
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(
                s,
                "\nsuite {}, seed {}: {} checks, {failed} failed",
                report.suite,
                report.seed,
                report.checks.len()
            );
            s
        }
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let suite: Suite = args.suite.parse().map_err(CliError::Usage)?;
    let report = verify::run_suite(suite, args.seed).map_err(|e| CliError::Numerical(e.to_string()))?;
    let text = render_verify(&report, args.output.format.unwrap_or(Format::Json))?;
    emit(args.output.out.as_deref(), &text)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.330697123456789), "0.330697123457");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(0.0123), "0.0123000000000");
        assert_eq!(sig12(2.5), "2.50000000000");
    }

    #[test]
    fn family_specs() {
        assert_eq!(parse_family("power", 5, 1.0).unwrap(), WeightFamily::power(5));
        assert_eq!(
            parse_family("stride:3", 1, 1.0).unwrap().kind,
            WeightKind::StridePower { stride: 3 }
        );
        assert_eq!(
            parse_family("poly:1,0.5,0", 2, 1.0).unwrap().kind,
            WeightKind::Polynomial { c0: 1.0, c1: 0.5, c2: 0.0 }
        );
        assert!(parse_family("poly:1,2", 1, 1.0).is_err());
        assert!(parse_family("cubic", 1, 1.0).is_err());
        assert!(parse_family("power", 0, 1.0).is_err());
    }

    #[test]
    fn config_merges_under_flags() {
        let cfg = RunConfig::from_toml("theorem = \"T4\"\nfamily = \"power\"\nN = 5\nm = \"inf\"\n").unwrap();
        let flags = RadiusArgs {
            m: Some("1".into()),
            ..Default::default()
        };
        let merged = cfg.merged_into(&flags).unwrap();
        assert_eq!(merged.theorem.as_deref(), Some("T4"));
        assert_eq!(merged.n, Some(5));
        assert_eq!(merged.m.as_deref(), Some("1"));
        assert!(RunConfig::from_toml("colour = 1").is_err());
        let int_m = RunConfig::from_toml("m = 3").unwrap().merged_into(&RadiusArgs::default()).unwrap();
        assert_eq!(int_m.m.as_deref(), Some("3"));
    }

    #[test]
    fn literal_mode_infers_theorem_and_family() {
        let args = RadiusArgs {
            mode: Some("literal:R12eq".into()),
            m: Some("2".into()),
            ..Default::default()
        };
        let problem = build_problem(&args).unwrap();
        assert_eq!(problem.theorem, Theorem::T3);
        assert_eq!(problem.family, WeightFamily::even(1));
    }

    #[test]
    fn validation_errors_are_usage_errors() {
        let args = RadiusArgs {
            theorem: Some("T1".into()),
            family: Some("power".into()),
            p: Some(1.5),
            ..Default::default()
        };
        assert_eq!(build_problem(&args).unwrap_err().exit_code(), EXIT_USAGE);
        let args = RadiusArgs {
            theorem: Some("T9".into()),
            family: Some("power".into()),
            ..Default::default()
        };
        assert!(build_problem(&args).is_err());
    }

    #[test]
    fn csv_uses_lf_and_dot_decimals() {
        let tables = select_tables(&["R2".into()]).unwrap();
        let cells = compute_tables(&tables, &SolverOptions::default());
        let text = render_tables(&tables, &cells, Format::Csv).unwrap();
        assert!(!text.contains('\r'));
        assert!(text.starts_with("table_id,m,N,p,computed,golden,delta,pass\n"));
        assert_eq!(text.lines().count(), 9);
        let r10 = select_tables(&["R10".into()]).unwrap();
        let cells = compute_tables(&r10, &SolverOptions::default());
        let csv = render_tables(&r10, &cells, Format::Csv).unwrap();
        assert!(csv.contains(",0.480015,"));
        let md = render_tables(&r10, &cells, Format::Md).unwrap();
        assert!(md.contains("printed `0,480015`"));
    }
}
