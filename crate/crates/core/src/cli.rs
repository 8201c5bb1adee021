//! `clusterfit` command line.
//!
//! Exit codes: decision queries return 0 for yes and 1 for no; `verify` returns 1
//! when any row disagrees; every error (including usage) returns 2.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::enumerate::{enumerate_cubic, generate_random_cubic};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, write_graph, Graph, VertexSubset};
use crate::harness::{report_lines, summarize, verify_reduction, VerifyOptions};
use crate::measures::{evaluate, MeasureKind};
use crate::rational::Rational;
use crate::reductions::{
    build_conductance_instance, build_density_instance, build_editing_instance, ReductionKind,
    ReductionMetadata,
};
use crate::solvers::{decide_with, local_search_min_conductance, optimize, DecisionInstance, Problem, SolveConfig};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "clusterfit", version, about = "Exact graph cluster measures, solvers and reduction checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate random cubic graphs, or enumerate all labelled ones.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs (seeds seed, seed+1, ...).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Write every labelled cubic graph on n vertices instead of random ones.
        #[arg(long)]
        enumerate: bool,
        /// Output file for a single graph, or directory for several.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one measure on one subset.
    Measure {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        subset: String,
        /// conductance | local-density | relative-density | editing
        #[arg(long)]
        kind: String,
    },
    /// Exact optimum by exhaustive search.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// conductance | local-density | relative-density | editing | max-cut | min-bisection
        #[arg(long)]
        kind: String,
        #[arg(long)]
        k: Option<usize>,
        /// Hill-climbing upper bound instead of exhaustive search (conductance only).
        #[arg(long)]
        local_search: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Answer a decision instance: exit 0 for yes, 1 for no.
    Decide {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        k: Option<usize>,
        /// `p/q` or an integer.
        #[arg(long)]
        threshold: Option<String>,
        /// Integer threshold, shorthand for max-cut and min-bisection.
        #[arg(long)]
        a: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Build a reduction target instance from a cubic source graph.
    Reduce {
        /// conductance | density | editing
        #[arg(long)]
        kind: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: u64,
        /// Target graph file; metadata goes to `<out>.meta.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a reduction on every labelled cubic graph up to n-max vertices.
    Verify {
        /// conductance | density | editing
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Write the line-delimited records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return EXIT_ERROR;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { n, seed, count, enumerate, out: dest } => gen(n, seed, count, enumerate, dest, out),
        Command::Measure { graph, subset, kind } => {
            let g = read_graph(&graph)?;
            let s = VertexSubset::parse(g.vertex_count(), &subset)?;
            let kind: MeasureKind = kind.parse()?;
            writeln!(out, "{}", evaluate(&g, &s, kind)?.value).map_err(io_err)?;
            Ok(0)
        }
        Command::Solve { graph, kind, k, local_search, seed, restarts, workers } => {
            let g = read_graph(&graph)?;
            let problem: Problem = kind.parse()?;
            let opt = if local_search {
                if problem != Problem::Conductance {
                    return Err(Error::InvalidArgument("--local-search applies to conductance only".into()));
                }
                local_search_min_conductance(&g, seed, restarts)?
            } else {
                optimize(&g, problem, k, SolveConfig::parallel(workers))?
            };
            write!(out, "value={} witness={} explored={}", opt.value, opt.witness, opt.explored)
                .map_err(io_err)?;
            if opt.degenerate {
                write!(out, " degenerate").map_err(io_err)?;
            }
            writeln!(out).map_err(io_err)?;
            Ok(0)
        }
        Command::Decide { graph, kind, k, threshold, a, workers } => {
            let g = read_graph(&graph)?;
            let problem: Problem = kind.parse()?;
            let threshold = match (threshold, a) {
                (Some(t), None) => t.parse::<Rational>()?,
                (None, Some(a)) => Rational::from(a as i64),
                _ => {
                    return Err(Error::InvalidArgument(
                        "give exactly one of --threshold and --a".into(),
                    ))
                }
            };
            let inst = DecisionInstance { graph: &g, problem, k, threshold };
            let d = decide_with(&inst, SolveConfig::parallel(workers))?;
            match &d.witness {
                Some(w) => writeln!(out, "yes witness={w} optimum={}", d.optimum.value),
                None => writeln!(out, "no optimum={}", d.optimum.value),
            }
            .map_err(io_err)?;
            Ok(if d.answer { EXIT_YES } else { EXIT_NO })
        }
        Command::Reduce { kind, graph, a, out: dest } => {
            let g = read_graph(&graph)?;
            let kind: ReductionKind = kind.parse()?;
            let (target, meta, line): (Graph, ReductionMetadata, String) = match kind {
                ReductionKind::Conductance => {
                    let red = build_conductance_instance(&g, a)?;
                    let line = format!("phi={}", red.phi);
                    (red.target.clone(), red.metadata(), line)
                }
                ReductionKind::Density => {
                    let red = build_density_instance(&g, a)?;
                    let line = format!("k={} r={}", red.k, red.r);
                    (g.clone(), red.metadata(), line)
                }
                ReductionKind::Editing => {
                    let red = build_editing_instance(&g, a)?;
                    let line = format!("k={} m={}", red.k, red.m);
                    (g.clone(), red.metadata(), line)
                }
            };
            let meta_json = serde_json::to_string(&meta).expect("serializable");
            writeln!(out, "{line}").map_err(io_err)?;
            match dest {
                Some(path) => {
                    write_file(&path, &write_graph(&target))?;
                    let mut meta_path = path.into_os_string();
                    meta_path.push(".meta.json");
                    write_file(Path::new(&meta_path), &(meta_json + "\n"))?;
                }
                None => {
                    writeln!(out, "{meta_json}").map_err(io_err)?;
                    write!(out, "{}", write_graph(&target)).map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Verify { kind, n_max, out: dest, parallel } => {
            let kind: ReductionKind = kind.parse()?;
            let start = Instant::now();
            let opts = VerifyOptions { thresholds: None, parallel };
            let reports = verify_reduction(kind, n_max, &opts)?;
            let summary = summarize(kind, n_max, &reports, start.elapsed());
            let mut body = report_lines(&reports, &summary).join("\n");
            body.push('\n');
            match dest {
                Some(path) => write_file(&path, &body)?,
                None => write!(out, "{body}").map_err(io_err)?,
            }
            writeln!(
                out,
                "kind={} n_max={} graphs={} rows={} mismatches={} witness_failures={} wall_ms={}",
                summary.kind,
                summary.n_max,
                summary.graphs,
                summary.rows,
                summary.mismatches,
                summary.witness_failures,
                summary.wall_ms
            )
            .map_err(io_err)?;
            Ok(if summary.passed() { 0 } else { 1 })
        }
    }
}

fn gen(
    n: usize,
    seed: u64,
    count: usize,
    enumerate: bool,
    dest: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let graphs: Vec<(String, Graph)> = if enumerate {
        enumerate_cubic(n)?
            .enumerate()
            .map(|(i, g)| (format!("cubic-n{n}-{i:05}.g"), g))
            .collect()
    } else {
        (0..count as u64)
            .map(|i| {
                let s = seed.wrapping_add(i);
                generate_random_cubic(n, s).map(|g| (format!("cubic-n{n}-s{s}.g"), g))
            })
            .collect::<Result<_>>()?
    };
    match (dest, graphs.len()) {
        (None, 1) => write!(out, "{}", write_graph(&graphs[0].1)).map_err(io_err)?,
        (None, _) => {
            return Err(Error::InvalidArgument("--out DIR is required for more than one graph".into()))
        }
        (Some(path), 1) if !enumerate => write_file(&path, &write_graph(&graphs[0].1))?,
        (Some(dir), _) => {
            fs::create_dir_all(&dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
            for (name, g) in &graphs {
                write_file(&dir.join(name), &write_graph(g))?;
            }
            writeln!(out, "wrote {} graphs to {}", graphs.len(), dir.display()).map_err(io_err)?;
        }
    }
    Ok(0)
}
