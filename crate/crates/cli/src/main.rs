//! Command-line surface: compute parameter records, run the constructive
//! augmentation, generate families and corpora, and run the verification
//! suite. Exit codes: 0 success or all checks pass, 1 check failure,
//! 2 usage or input error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rdpart::constructions::rd_augment;
use rdpart::enumeration::{enumerate_connected, ingest_corpus};
use rdpart::families::{generate, lambda_family, FamilySpec};
use rdpart::graph6::{emit_graph6, parse_graph6};
use rdpart::solvers::compute_all;
use rdpart::verification::{
    all_pass, reports_to_json, run_suite, summary_table, Corpus, CHECK_IDS,
};
use rdpart::{Graph, ParamRecord, Partition};

#[derive(Parser)]
#[command(
    name = "rdpart",
    version,
    about = "Exact partition-based location and domination parameters of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all six parameters for one or more connected graphs.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Output format.
        #[arg(long, default_value = "table", value_parser = ["table", "csv", "json"])]
        format: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Extend a resolving partition into a resolving-dominating one.
    Augment {
        #[command(flatten)]
        input: InputArgs,
        /// Partition in bar notation, e.g. `0,1|2|3`.
        #[arg(long)]
        partition: String,
    },
    /// Run named checks over an exhaustive order range or a corpus file.
    Verify {
        /// Inclusive order range, e.g. `3-7` or `6`.
        #[arg(long, conflicts_with = "corpus")]
        orders: Option<String>,
        /// File of graph6 lines to check instead of built-in enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Write the JSON report array to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        workers: WorkerArgs,
    },
    /// Emit graphs as graph6 lines.
    Generate {
        /// Family spec such as `path:9`, `h11:8`, `caterpillar:2,3`, `lambda:7`.
        #[arg(long, conflicts_with = "enumerate")]
        family: Option<String>,
        /// Emit every connected graph of this order, one per class.
        #[arg(long)]
        enumerate: Option<usize>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputSource {
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File of graph6 lines, one graph per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec such as `path:9`, `h6:7`, `caterpillar:2,3`, `lambda:7`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    source: InputSource,
}

#[derive(Args)]
struct CommonArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct WorkerArgs {
    /// Worker threads (default: RDPART_WORKERS or available parallelism).
    #[arg(long)]
    workers: Option<usize>,
    /// Force a single worker for byte-identical, timing-free runs.
    #[arg(long)]
    deterministic: bool,
}

impl WorkerArgs {
    fn count(&self) -> usize {
        if self.deterministic {
            return 1;
        }
        self.workers
            .or_else(|| {
                std::env::var("RDPART_WORKERS")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|p| p.get())
                    .unwrap_or(1)
            })
            .max(1)
    }
}

/// Input or usage problem: message plus exit code 2.
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Compute {
            input,
            format,
            common,
        } => cmd_compute(input, &format, common),
        Command::Augment { input, partition } => cmd_augment(input, &partition),
        Command::Verify {
            orders,
            corpus,
            checks,
            output,
            workers,
        } => cmd_verify(orders, corpus, &checks, output, workers),
        Command::Generate {
            family,
            enumerate,
            output,
        } => cmd_generate(family, enumerate, output),
    }
}

/// Resolve an input source to a list of connected graphs.
fn load_graphs(input: &InputArgs) -> CliResult<Vec<Graph>> {
    let graphs = if let Some(g6) = &input.source.g6 {
        vec![parse_graph6(g6.trim())?]
    } else if let Some(path) = &input.source.file {
        let report = ingest_corpus(path, false)?;
        if let Some((line, msg)) = report.diagnostics.first() {
            return Err(CliError(format!("{}:{line}: {msg}", path.display())));
        }
        report.graphs.into_iter().map(|ig| ig.graph).collect()
    } else if let Some(spec) = &input.source.family {
        family_graphs(spec)?
    } else {
        unreachable!("clap enforces one source")
    };
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_connected() {
            return Err(CliError(format!("graph {} is disconnected", i + 1)));
        }
    }
    Ok(graphs)
}

fn family_graphs(spec: &str) -> CliResult<Vec<Graph>> {
    if let Some(rest) = spec.trim().to_ascii_lowercase().strip_prefix("lambda:") {
        let n: usize = rest
            .trim()
            .parse()
            .map_err(|_| CliError(format!("cannot parse `{spec}`")))?;
        return Ok(lambda_family(n)?);
    }
    let parsed: FamilySpec = spec.parse()?;
    Ok(vec![generate(parsed)?])
}

fn write_out(output: Option<&Path>, content: &str) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

/// Compute records on a worker pool, preserving input order.
fn compute_records(graphs: &[Graph], workers: usize) -> CliResult<Vec<ParamRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError(e.to_string()))?;
    let results: Vec<_> = pool.install(|| {
        use rayon::prelude::*;
        graphs.par_iter().map(compute_all).collect()
    });
    let mut records = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        records.push(r.map_err(|e| CliError(format!("graph {}: {e}", i + 1)))?);
    }
    Ok(records)
}

fn cmd_compute(input: InputArgs, format: &str, common: CommonArgs) -> CliResult<ExitCode> {
    let graphs = load_graphs(&input)?;
    let records = compute_records(&graphs, common.workers.count())?;
    let mut buf = String::new();
    match format {
        "csv" => {
            buf.push_str(ParamRecord::CSV_HEADER);
            buf.push('\n');
            for r in &records {
                buf.push_str(&r.csv_row());
                buf.push('\n');
            }
        }
        "json" => {
            buf.push_str(&serde_json::to_string_pretty(&records).expect("records serialize"));
            buf.push('\n');
        }
        _ => {
            let header = ParamRecord::CSV_HEADER.replace(',', " ");
            let mut widths: Vec<usize> = header.split(' ').map(str::len).collect();
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| r.csv_row().split(',').map(String::from).collect())
                .collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            for (i, name) in header.split(' ').enumerate() {
                buf.push_str(&format!("{:<w$}  ", name, w = widths[i]));
            }
            buf.push('\n');
            for row in &rows {
                for (i, cell) in row.iter().enumerate() {
                    buf.push_str(&format!("{:<w$}  ", cell, w = widths[i]));
                }
                buf.push('\n');
            }
        }
    }
    write_out(common.output.as_deref(), &buf)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_augment(input: InputArgs, partition: &str) -> CliResult<ExitCode> {
    let graphs = load_graphs(&input)?;
    if graphs.len() != 1 {
        return Err(CliError(format!(
            "augment expects exactly one graph, got {}",
            graphs.len()
        )));
    }
    let g = &graphs[0];
    let p = Partition::parse(partition, g.order())?;
    let out = rd_augment(g, &p)?;
    println!("{out}");
    println!("size {}", out.k());
    Ok(ExitCode::SUCCESS)
}

fn parse_orders(spec: &str) -> CliResult<(usize, usize)> {
    let parts: Vec<&str> = spec.split('-').collect();
    let bad = || CliError(format!("cannot parse order range `{spec}`; use e.g. 3-7"));
    match parts.as_slice() {
        [one] => {
            let n = one.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
        [lo, hi] => {
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        _ => Err(bad()),
    }
}

fn parse_checks(spec: &str) -> CliResult<Vec<&'static str>> {
    if spec.trim() == "all" {
        return Ok(CHECK_IDS.to_vec());
    }
    let mut ids = Vec::new();
    for tok in spec.split(',') {
        let tok = tok.trim();
        match CHECK_IDS.iter().find(|&&id| id == tok) {
            Some(&id) => ids.push(id),
            None => {
                return Err(CliError(format!(
                    "unknown check `{tok}`; valid ids: {}",
                    CHECK_IDS.join(", ")
                )))
            }
        }
    }
    Ok(ids)
}

fn cmd_verify(
    orders: Option<String>,
    corpus_path: Option<PathBuf>,
    checks: &str,
    output: Option<PathBuf>,
    workers: WorkerArgs,
) -> CliResult<ExitCode> {
    let ids = parse_checks(checks)?;
    let (label, graphs) = if let Some(path) = &corpus_path {
        let report = ingest_corpus(path, true)?;
        for (line, msg) in &report.diagnostics {
            eprintln!("{}:{line}: {msg}", path.display());
        }
        if report.skipped_disconnected > 0 {
            eprintln!(
                "note: skipped {} disconnected graph(s)",
                report.skipped_disconnected
            );
        }
        let graphs: Vec<Graph> = report.graphs.into_iter().map(|ig| ig.graph).collect();
        (format!("corpus {}", path.display()), graphs)
    } else if let Some(spec) = &orders {
        let (lo, hi) = parse_orders(spec)?;
        let mut graphs = Vec::new();
        for n in lo..=hi {
            graphs.extend(enumerate_connected(n)?);
        }
        (format!("connected {lo}..={hi} (exhaustive)"), graphs)
    } else {
        return Err(CliError(
            "supply --orders for built-in enumeration or --corpus with a graph6 file".into(),
        ));
    };

    let records = compute_records(&graphs, workers.count())?;
    let corpus = Corpus::from_parts(label, graphs, records)?;
    let composition: Vec<String> = corpus
        .order_counts()
        .into_iter()
        .map(|(n, c)| format!("n={n}: {c}"))
        .collect();
    println!("corpus {} ({})", corpus.label, composition.join(", "));
    let reports = run_suite(&corpus, &ids)?;
    print!("{}", summary_table(&reports));
    for r in &reports {
        if r.counterexamples.is_empty() {
            continue;
        }
        println!("== {} counterexamples:", r.id);
        for cex in r.counterexamples.iter().take(10) {
            println!("   {}  {}", cex.graph6, cex.details);
        }
        if r.counterexamples.len() > 10 {
            println!("   ... and {} more", r.counterexamples.len() - 10);
        }
    }
    if let Some(path) = output {
        std::fs::write(&path, reports_to_json(&reports))?;
        eprintln!("report written to {}", path.display());
    }
    Ok(if all_pass(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_generate(
    family: Option<String>,
    enumerate: Option<usize>,
    output: Option<PathBuf>,
) -> CliResult<ExitCode> {
    let graphs = match (family, enumerate) {
        (Some(spec), None) => family_graphs(&spec)?,
        (None, Some(n)) => enumerate_connected(n)?,
        _ => {
            return Err(CliError(
                "supply exactly one of --family or --enumerate".into(),
            ))
        }
    };
    let mut buf = String::new();
    for g in &graphs {
        buf.push_str(&emit_graph6(g));
        buf.push('\n');
    }
    write_out(output.as_deref(), &buf)?;
    Ok(ExitCode::SUCCESS)
}
