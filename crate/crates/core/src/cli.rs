//! Batch driver behind the `pathshare` binary: argument parsing, input
//! ingestion, the ordered worker pool, and report writers.
//!
//! Exit codes: 0 when every verdict passes or is vacuous, 2 when any verdict
//! fails, 1 on input or usage errors.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_chen, bound_gutierrez, bound_hippchen, bound_main};
use crate::error::{Error, Result};
use crate::generators::{parse_range, tightness_witness, GeneratorSpec};
use crate::graph::{parse_edge_list, Graph};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::longest::DEFAULT_BUDGET;
use crate::report::{check_graph, ReportRow, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pathshare", version, about = "Check shared-vertex bounds for longest paths of k-connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one graph given as a graph6 line or an edge list.
    Check(CheckArgs),
    /// Check every graph of a graph6 file or a generator, in input order.
    Sweep(SweepArgs),
    /// Print the tightness witness K_{k,2k+2} and its report.
    Witness(WitnessArgs),
    /// Tabulate the closed-form bounds as CSV.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
    Summary,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, short, env = "PATHSHARE_INPUT", default_value = "-")]
    pub input: String,
    /// Output format; `summary` prints one field per line.
    #[arg(long, env = "PATHSHARE_FORMAT", value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Maximum number of longest paths to enumerate.
    #[arg(long, env = "PATHSHARE_BUDGET", default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(usize))]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// graph6 file (one graph per line), or `-` for stdin.
    #[arg(long, short, env = "PATHSHARE_INPUT", conflicts_with = "generate")]
    pub input: Option<String>,
    /// Generator spec, e.g. `gnp-kconn:n=10,p=0.6,k=3,count=20`.
    #[arg(long, env = "PATHSHARE_GENERATE")]
    pub generate: Option<String>,
    /// Output format; `summary` prints only the totals line.
    #[arg(long, env = "PATHSHARE_FORMAT", value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Maximum number of longest paths to enumerate per graph.
    #[arg(long, env = "PATHSHARE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "PATHSHARE_WORKERS")]
    pub workers: Option<usize>,
    /// Seed for generator input, overriding any seed in the spec.
    #[arg(long, env = "PATHSHARE_SEED")]
    pub seed: Option<u64>,
    /// Emit only rows with a failing verdict.
    #[arg(long, env = "PATHSHARE_ONLY_FAILS")]
    pub only_fails: bool,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    pub k: usize,
    /// Output format; `summary` prints one field per line.
    #[arg(long, env = "PATHSHARE_FORMAT", value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Maximum number of longest paths to enumerate per graph.
    #[arg(long, env = "PATHSHARE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Connectivity values: `K` or inclusive `LO..HI`.
    #[arg(long, short, default_value = "1..10")]
    pub k: String,
    /// Vertex counts: `N` or inclusive `LO..HI`.
    #[arg(long, short, default_value = "1..60")]
    pub n: String,
}

/// Where a sweep reads its graphs.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    Stdin,
    File(PathBuf),
    Generator(GeneratorSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub input: InputSource,
    pub budget: usize,
    pub workers: usize,
    pub format: OutputFormat,
    pub only_fails: bool,
}

impl SweepConfig {
    pub fn new(input: InputSource) -> Self {
        SweepConfig {
            input,
            budget: DEFAULT_BUDGET,
            workers: default_workers(),
            format: OutputFormat::Jsonl,
            only_fails: false,
        }
    }

    fn validate(&self) -> Result<()> {
        check_budget(self.budget)?;
        if self.workers == 0 {
            return Err(Error::precondition("worker count must be at least 1"));
        }
        Ok(())
    }
}

fn check_budget(budget: usize) -> Result<()> {
    if budget == 0 {
        return Err(Error::precondition("budget must be at least 1"));
    }
    Ok(())
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Verdict tallies and the tightest observed slack `L(G) − bound`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Generator spec with its seed, for generated input.
    pub generator: Option<String>,
    pub rows: usize,
    pub failures: usize,
    pub errors: usize,
    pub incomplete: usize,
    pub counts: BTreeMap<&'static str, BTreeMap<&'static str, usize>>,
    pub min_slack: BTreeMap<&'static str, i64>,
}

impl Summary {
    pub fn record(&mut self, row: &ReportRow) {
        self.rows += 1;
        self.failures += usize::from(row.is_failure());
        self.errors += usize::from(row.is_error());
        self.incomplete += usize::from(row.verdict_main == Verdict::Incomplete);
        for (name, verdict) in row.verdicts() {
            *self.counts.entry(name).or_default().entry(verdict.as_str()).or_default() += 1;
        }
        let bounds = [
            ("hippchen", row.bound_hippchen, row.verdict_hippchen),
            ("main", row.bound_main, row.verdict_main),
            ("gutierrez", row.bound_gutierrez, row.verdict_gutierrez),
            ("submain", row.bound_submain, row.verdict_submain),
        ];
        for (name, bound, verdict) in bounds {
            let checked = matches!(
                verdict,
                Verdict::Pass | Verdict::Fail | Verdict::Conjectural | Verdict::ConjecturalFail
            );
            if let (true, Some(l), Some(b)) = (checked, row.min_shared, bound) {
                let slack = l as i64 - b;
                self.min_slack
                    .entry(name)
                    .and_modify(|s| *s = (*s).min(slack))
                    .or_insert(slack);
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 {
            EXIT_FAIL
        } else if self.errors > 0 {
            EXIT_ERROR
        } else {
            EXIT_OK
        }
    }
}

/// One line: totals then the minimum slack per bound.
impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "summary rows={} fail={} error={} incomplete={}",
            self.rows, self.failures, self.errors, self.incomplete
        )?;
        for (name, verdicts) in &self.counts {
            let parts: Vec<String> = verdicts.iter().map(|(v, c)| format!("{v}:{c}")).collect();
            write!(f, " {name}[{}]", parts.join(","))?;
        }
        for (name, slack) in &self.min_slack {
            write!(f, " min_slack_{name}={slack}")?;
        }
        if let Some(spec) = &self.generator {
            write!(f, " generator={spec}")?;
        }
        Ok(())
    }
}

enum RowSink<'a> {
    Jsonl(&'a mut dyn Write),
    Csv(Box<csv::Writer<&'a mut dyn Write>>),
    Silent,
}

impl<'a> RowSink<'a> {
    fn new(format: OutputFormat, out: &'a mut dyn Write) -> Self {
        match format {
            OutputFormat::Jsonl => RowSink::Jsonl(out),
            OutputFormat::Csv => RowSink::Csv(Box::new(csv::Writer::from_writer(out))),
            OutputFormat::Summary => RowSink::Silent,
        }
    }

    fn write(&mut self, row: &ReportRow) -> io::Result<()> {
        match self {
            RowSink::Jsonl(out) => {
                serde_json::to_writer(&mut *out, row)?;
                out.write_all(b"\n")
            }
            RowSink::Csv(w) => w.serialize(row).map_err(io::Error::other),
            RowSink::Silent => Ok(()),
        }
    }

    fn finish(self) -> io::Result<()> {
        match self {
            RowSink::Jsonl(out) => out.flush(),
            RowSink::Csv(mut w) => w.flush(),
            RowSink::Silent => Ok(()),
        }
    }
}

/// Parses one graph6 line into a report row; failures become error rows.
pub fn check_line(line: &str, budget: usize) -> ReportRow {
    match parse_graph6(line) {
        Ok(g) => ReportRow::from(&check_graph(&g, budget)),
        Err(e) => ReportRow::error(line.trim(), e.to_string()),
    }
}

fn is_graph_line(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with(">>graph6<<")
}

/// Runs a sweep, writing rows to `out` in input order regardless of worker
/// scheduling. Returns the summary; the caller decides where to print it.
pub fn run_sweep(config: &SweepConfig, out: &mut dyn Write) -> Result<Summary> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::precondition(e.to_string()))?;
    let mut summary = Summary::default();
    let mut sink = RowSink::new(config.format, out);
    let chunk = 64 * config.workers;
    let mut emit = |rows: Vec<ReportRow>, summary: &mut Summary| -> io::Result<()> {
        for row in rows {
            summary.record(&row);
            if !config.only_fails || row.is_failure() {
                sink.write(&row)?;
            }
        }
        Ok(())
    };
    let io_err = |e: io::Error| Error::precondition(format!("write failed: {e}"));

    match &config.input {
        InputSource::Generator(spec) => {
            summary.generator = Some(spec.to_string());
            let graphs = spec.generate()?;
            for batch in graphs.chunks(chunk) {
                let rows: Vec<ReportRow> = pool.install(|| {
                    batch.par_iter().map(|g| ReportRow::from(&check_graph(g, config.budget))).collect()
                });
                emit(rows, &mut summary).map_err(io_err)?;
            }
        }
        source => {
            let reader: Box<dyn BufRead> = match source {
                InputSource::File(path) => Box::new(BufReader::new(std::fs::File::open(path).map_err(|e| {
                    Error::precondition(format!("cannot open {}: {e}", path.display()))
                })?)),
                _ => Box::new(BufReader::new(io::stdin())),
            };
            let mut lines = reader.lines();
            loop {
                let mut batch = Vec::with_capacity(chunk);
                for line in lines.by_ref() {
                    let line = line.map_err(|e| Error::precondition(format!("read failed: {e}")))?;
                    if is_graph_line(&line) {
                        batch.push(line);
                        if batch.len() == chunk {
                            break;
                        }
                    }
                }
                if batch.is_empty() {
                    break;
                }
                let rows: Vec<ReportRow> =
                    pool.install(|| batch.par_iter().map(|l| check_line(l, config.budget)).collect());
                emit(rows, &mut summary).map_err(io_err)?;
            }
        }
    }
    sink.finish().map_err(io_err)?;
    Ok(summary)
}

/// Reads one graph, auto-detecting the format: a leading digit means an
/// edge list, anything else graph6.
pub fn parse_graph_input(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    match text.trim_start().bytes().next() {
        None => Err(Error::parse(0, "empty input")),
        Some(b) if b.is_ascii_digit() || b == b'#' => parse_edge_list(text),
        Some(_) => {
            let body = text.trim();
            if body.lines().count() > 1 {
                return Err(Error::parse(lead + body.find('\n').unwrap_or(0), "expected a single graph6 line"));
            }
            parse_graph6(text)
        }
    }
}

fn write_report(row: &ReportRow, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Summary => {
            let value = serde_json::to_value(row)?;
            for column in ReportRow::COLUMNS {
                let text = match &value[column] {
                    serde_json::Value::Null => "-".to_string(),
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(out, "{column:>18}  {text}")?;
            }
            Ok(())
        }
        format => {
            let mut sink = RowSink::new(format, out);
            sink.write(row)?;
            sink.finish()
        }
    }
}

fn row_exit_code(row: &ReportRow) -> i32 {
    if row.is_failure() {
        EXIT_FAIL
    } else if row.is_error() {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn read_input(input: &str) -> io::Result<String> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(input)?;
    }
    Ok(text)
}

/// Parses `args` and runs the chosen command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io_err = |e: io::Error| Error::precondition(format!("i/o: {e}"));
    match command {
        Command::Check(args) => {
            check_budget(args.budget)?;
            let text = read_input(&args.input).map_err(io_err)?;
            let g = parse_graph_input(&text)?;
            let row = ReportRow::from(&check_graph(&g, args.budget));
            write_report(&row, args.format, out).map_err(io_err)?;
            Ok(row_exit_code(&row))
        }
        Command::Sweep(args) => {
            let input = match (args.input, args.generate) {
                (_, Some(spec)) => {
                    let mut spec: GeneratorSpec = spec.parse()?;
                    if let Some(seed) = args.seed {
                        spec.seed = seed;
                    }
                    InputSource::Generator(spec)
                }
                (Some(path), None) if path != "-" => InputSource::File(path.into()),
                _ => InputSource::Stdin,
            };
            let config = SweepConfig {
                input,
                budget: args.budget,
                workers: args.workers.unwrap_or_else(default_workers),
                format: args.format,
                only_fails: args.only_fails,
            };
            let summary = run_sweep(&config, out)?;
            let target: &mut dyn Write = if config.format == OutputFormat::Summary { out } else { err };
            writeln!(target, "{summary}").map_err(io_err)?;
            Ok(summary.exit_code())
        }
        Command::Witness(args) => {
            check_budget(args.budget)?;
            let g = tightness_witness(args.k)?;
            writeln!(out, "{}", encode_graph6(&g)).map_err(io_err)?;
            let row = ReportRow::from(&check_graph(&g, args.budget));
            write_report(&row, args.format, out).map_err(io_err)?;
            Ok(row_exit_code(&row))
        }
        Command::Bounds(args) => {
            let (k_lo, k_hi) = parse_range(&args.k).ok_or_else(|| Error::parse(0, format!("bad k range {:?}", args.k)))?;
            let (n_lo, n_hi) = parse_range(&args.n).ok_or_else(|| Error::parse(0, format!("bad n range {:?}", args.n)))?;
            write_bounds_table(k_lo..=k_hi, n_lo..=n_hi, out).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

/// CSV table `k,n,hippchen,main,gutierrez,chen`.
pub fn write_bounds_table(
    ks: std::ops::RangeInclusive<usize>,
    ns: std::ops::RangeInclusive<usize>,
    out: &mut dyn Write,
) -> io::Result<()> {
    writeln!(out, "k,n,hippchen,main,gutierrez,chen")?;
    for k in ks {
        for n in ns.clone() {
            writeln!(
                out,
                "{k},{n},{},{},{},{:.6}",
                bound_hippchen(k),
                bound_main(k, n),
                bound_gutierrez(k, n),
                bound_chen(k)
            )?;
        }
    }
    Ok(())
}
