//! Command implementations behind the `randic` binary.
//!
//! Exit codes are part of the interface: `0` success, `1` runtime or
//! parameter-domain failure, `2` usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use randic::closed_forms::closed_energy_form;
use randic::verify::{verify_with, Report, VerifyConfig, DEFAULT_WITNESS_MAX};
use randic::{
    charpoly_exact, closed_charpoly, generate, graph_energy, integer_energy_witnesses,
    parse_edge_list, randic_energy, write_edge_list, Family, FamilySpec, Graph,
    TermOrder,
};
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Runtime(_) => EXIT_FAILURE,
        }
    }
}

impl From<randic::Error> for CliError {
    fn from(e: randic::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Randić matrices, characteristic polynomials and energies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family member as an edge list.
    Gen(GenArgs),
    /// Randić characteristic polynomial, exact and/or closed-form.
    Charpoly(CharpolyArgs),
    /// Randić energy (and optionally the adjacency energy).
    Energy(EnergyArgs),
    /// Cross-check every closed form and identity; exit 0 iff all pass.
    Verify(VerifyArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// path, cycle, star, complete, complete-bipartite, friendship or dutch4
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// Primary parameter (vertex or blade count; second part for complete-bipartite).
    #[arg(long)]
    pub n: Option<usize>,
    /// First part size (complete-bipartite only).
    #[arg(long)]
    pub m: Option<usize>,
    /// Delete the canonical edge.
    #[arg(long)]
    pub minus_edge: bool,
}

impl FamilyArgs {
    fn spec_with_n(&self, n: usize) -> CliResult<FamilySpec> {
        let family = self
            .family
            .ok_or_else(|| CliError::Usage("--family is required".into()))?;
        Ok(FamilySpec {
            family,
            n,
            m: self.m,
            minus_edge: self.minus_edge,
        })
    }

    fn spec(&self) -> CliResult<Option<FamilySpec>> {
        match (self.family, self.n) {
            (None, _) => Ok(None),
            (Some(_), None) => Err(CliError::Usage("--family requires --n".into())),
            (Some(_), Some(n)) => self.spec_with_n(n).map(Some),
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file (standard output when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Descending,
    Ascending,
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    /// Edge-list file to read instead of a family.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
    pub format: PolyFormat,
    /// Term order of the text rendering.
    #[arg(long, value_enum, default_value_t = Order::Descending)]
    pub order: Order,
}

#[derive(Debug, Args)]
pub struct EnergyArgs {
    /// Edge-list file to read instead of a family.
    #[arg(long, conflicts_with_all = ["family", "sweep"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Off-diagonal tolerance of the Jacobi eigensolver.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    /// Inclusive range of n, e.g. `2..4`, replacing --n.
    #[arg(long, value_parser = parse_sweep_range, conflicts_with = "n")]
    pub sweep: Option<RangeInclusive<usize>>,
    /// Also report the adjacency energy E(G).
    #[arg(long)]
    pub adjacency: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(5..))]
    pub max_n: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Where to write the JSON report (`-` for standard output).
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_WITNESS_MAX as u64, value_parser = clap::value_parser!(u64).range(2..))]
    pub witness_max: u64,
    /// Format of the per-record listing on standard output.
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
}

/// Parses `N1..N2` (inclusive, `N1 <= N2`).
pub fn parse_sweep_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected N1..N2, got {s:?}"))?;
    let num = |t: &str| -> Result<usize, String> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("{t:?} is not a non-negative integer"));
        }
        t.parse().map_err(|_| format!("{t:?} is out of range"))
    };
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Charpoly(a) => cmd_charpoly(a, out),
        Command::Energy(a) => cmd_energy(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
}

/// The graph named on the command line, and its family when there is one.
fn load_graph(input: Option<&Path>, family: &FamilyArgs) -> CliResult<(Graph, Option<FamilySpec>)> {
    match (input, family.spec()?) {
        (Some(path), _) => Ok((read_graph(path)?, None)),
        (None, Some(spec)) => Ok((generate(&spec)?, Some(spec))),
        (None, None) => Err(CliError::Usage(
            "one of --input or --family/--n is required".into(),
        )),
    }
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult<i32> {
    let spec = args
        .family
        .spec()?
        .ok_or_else(|| CliError::Usage("--family and --n are required".into()))?;
    let text = write_edge_list(&generate(&spec)?);
    match &args.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn term_order(order: Order) -> TermOrder {
    match order {
        Order::Descending => TermOrder::Descending,
        Order::Ascending => TermOrder::Ascending,
    }
}

pub fn cmd_charpoly(args: &CharpolyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let (graph, spec) = load_graph(args.input.as_deref(), &args.family)?;
    let closed = if args.mode == Mode::Exact {
        None
    } else {
        let spec = spec.ok_or_else(|| {
            CliError::Usage("--mode closed/both needs --family; edge-list input has no closed form".into())
        })?;
        Some(closed_charpoly(&spec)?)
    };
    let exact = (args.mode != Mode::Closed).then(|| charpoly_exact(&graph));
    let order = term_order(args.order);

    let text = match (args.format, exact, closed) {
        (PolyFormat::Text, Some(p), None) | (PolyFormat::Text, None, Some(p)) => {
            format!("{}\n", p.to_text(order))
        }
        (PolyFormat::Text, Some(e), Some(c)) => format!(
            "exact:  {}\nclosed: {}\nequal: {}\n",
            e.to_text(order),
            c.to_text(order),
            e == c
        ),
        (PolyFormat::Json, Some(p), None) | (PolyFormat::Json, None, Some(p)) => {
            json_line(&p.to_json())
        }
        (PolyFormat::Json, Some(e), Some(c)) => json_line(&json!({
            "exact": e.to_json(),
            "closed": c.to_json(),
            "equal": e == c,
        })),
        (_, None, None) => unreachable!("mode selects at least one polynomial"),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

struct EnergyRow {
    spec: Option<FamilySpec>,
    re: f64,
    adjacency: Option<f64>,
    closed: Option<(f64, String)>,
}

fn energy_row(graph: &Graph, spec: Option<FamilySpec>, args: &EnergyArgs) -> CliResult<EnergyRow> {
    let re = randic_energy(graph, args.tol)?;
    let adjacency = if args.adjacency {
        Some(graph_energy(graph, args.tol)?)
    } else {
        None
    };
    let closed = spec
        .and_then(|s| closed_energy_form(&s).ok())
        .map(|e| (e.value, e.form));
    Ok(EnergyRow {
        spec,
        re,
        adjacency,
        closed,
    })
}

fn opt_field(x: Option<impl ToString>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_energy(rows: &[EnergyRow], format: TableFormat, adjacency: bool) -> String {
    let mut s = String::new();
    match format {
        TableFormat::Text => {
            let single = rows.len() == 1;
            for row in rows {
                if single {
                    let _ = writeln!(s, "{:?}", row.re);
                } else {
                    let label = row.spec.map(|sp| sp.label()).unwrap_or_default();
                    let _ = writeln!(s, "{label}\tRE = {:?}", row.re);
                }
                if let Some(e) = row.adjacency {
                    let _ = writeln!(s, "  E = {e:?}");
                }
                if let Some((value, form)) = &row.closed {
                    let _ = writeln!(
                        s,
                        "  closed = {value:?} [{form}], abs_err = {:e}",
                        (row.re - value).abs()
                    );
                }
            }
        }
        TableFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "family": row.spec.map(|sp| sp.family.name()),
                        "n": row.spec.map(|sp| sp.n),
                        "m": row.spec.and_then(|sp| sp.m),
                        "minus_edge": row.spec.map(|sp| sp.minus_edge),
                        "re_numeric": row.re,
                        "e_numeric": row.adjacency,
                        "re_closed": row.closed.as_ref().map(|c| c.0),
                        "re_closed_form": row.closed.as_ref().map(|c| c.1.clone()),
                        "abs_err": row.closed.as_ref().map(|c| (row.re - c.0).abs()),
                    })
                })
                .collect();
            let v = if rows.len() == 1 {
                items.into_iter().next().unwrap()
            } else {
                Value::Array(items)
            };
            s = json_line(&v);
        }
        TableFormat::Csv => {
            s.push_str("family,n,m,re_numeric,re_closed,abs_err");
            if adjacency {
                s.push_str(",e_numeric");
            }
            s.push('\n');
            for row in rows {
                let _ = write!(
                    s,
                    "{},{},{},{:?},{},{}",
                    row.spec.map(|sp| sp.family.name()).unwrap_or("input"),
                    opt_field(row.spec.map(|sp| sp.n)),
                    opt_field(row.spec.and_then(|sp| sp.m)),
                    row.re,
                    opt_field(row.closed.as_ref().map(|c| format!("{:?}", c.0))),
                    opt_field(row.closed.as_ref().map(|c| format!("{:?}", (row.re - c.0).abs()))),
                );
                if adjacency {
                    let _ = write!(s, ",{}", opt_field(row.adjacency.map(|e| format!("{e:?}"))));
                }
                s.push('\n');
            }
        }
    }
    s
}

pub fn cmd_energy(args: &EnergyArgs, out: &mut dyn Write) -> CliResult<i32> {
    if !(args.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let rows = match &args.sweep {
        Some(range) => range
            .clone()
            .map(|n| {
                let spec = args.family.spec_with_n(n)?;
                energy_row(&generate(&spec)?, Some(spec), args)
            })
            .collect::<CliResult<Vec<_>>>()?,
        None => {
            let (graph, spec) = load_graph(args.input.as_deref(), &args.family)?;
            vec![energy_row(&graph, spec, args)?]
        }
    };
    out.write_all(render_energy(&rows, args.format, args.adjacency).as_bytes())?;
    Ok(EXIT_OK)
}

fn verify_csv(report: &Report) -> String {
    let mut s = String::from(
        "check,family,n,m,minus_edge,split,charpoly_match,energy_abs_err,max_root_residual,pass\n",
    );
    for r in &report.records {
        let check = serde_json::to_value(r.check).expect("check kind serializes");
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{:?},{}",
            check.as_str().unwrap_or_default(),
            r.spec.family.name(),
            r.spec.n,
            opt_field(r.spec.m),
            r.spec.minus_edge,
            opt_field(r.split),
            r.charpoly_match,
            opt_field(r.energy_abs_err.map(|e| format!("{e:?}"))),
            r.max_root_residual,
            r.passes(report.tolerance),
        );
    }
    s
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    if !(args.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let mut config = VerifyConfig::new(args.max_n as usize, args.tol);
    config.witness_max = args.witness_max as usize;
    let report = verify_with(&config)?;
    let json = report.to_json_string();
    let summary = report.summary();

    match &args.report {
        Some(path) if path.as_os_str() == "-" => out.write_all(json.as_bytes())?,
        Some(path) => fs::write(path, &json)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?,
        None => {}
    }

    match args.format {
        TableFormat::Text => {
            let mut s = String::new();
            for r in report.failures() {
                let _ = writeln!(s, "FAIL {}: {}", r.label, r.notes);
            }
            for (m, spec, re) in integer_energy_witnesses(config.witness_max)? {
                let _ = writeln!(s, "witness m={m} {} RE={re:?}", spec.label());
            }
            let _ = writeln!(
                s,
                "summary: pass={} fail={} tolerance={:e}",
                summary.pass, summary.fail, report.tolerance
            );
            out.write_all(s.as_bytes())?;
        }
        TableFormat::Json if args.report.as_deref() != Some(Path::new("-")) => {
            out.write_all(json.as_bytes())?
        }
        TableFormat::Json => {}
        TableFormat::Csv => out.write_all(verify_csv(&report).as_bytes())?,
    }
    Ok(if summary.fail == 0 { EXIT_OK } else { EXIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_ranges() {
        assert_eq!(parse_sweep_range("2..4").unwrap(), 2..=4);
        assert_eq!(parse_sweep_range("7..7").unwrap(), 7..=7);
        for bad in ["", "2", "4..2", "a..3", "2..", "..3", "-1..3", "2...4", "2..+4"] {
            assert!(parse_sweep_range(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["randic", "gen", "--bogus"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["randic", "verify", "--max-n", "4"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run(["randic", "gen", "--family", "path"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(
            run(["randic", "charpoly", "--family", "wheel", "--n", "3"], &mut out, &mut err),
            EXIT_USAGE
        );
    }

    #[test]
    fn help_exits_0() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["randic", "--help"], &mut out, &mut err), EXIT_OK);
        assert!(String::from_utf8(out).unwrap().contains("charpoly"));
    }
}
