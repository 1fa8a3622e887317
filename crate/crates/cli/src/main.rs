//! `ttile`: build, check, search and draw T-tetromino tilings of squares.
//!
//! Results go to stdout (JSON unless another format is asked for);
//! diagnostics and timings go to stderr. Exit codes: 0 success, 1 invalid
//! tiling or infeasible search, 2 usage error, 3 search limit reached.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ttiling::exact_cover::{
    count_solutions, min_monominoes_search, solve, solve_parallel, CountOutcome, CoverProblem, Limits, MinOutcome,
    SearchStatus,
};
use ttiling::formulas::sequence;
use ttiling::render::{emit_document, emit_json, parse_document, render_ascii, render_svg};
use ttiling::{construct, verify, Region, Tiling};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ABORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "ttile", version, about = "T-tetromino tilings of squares with minimal monominoes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionArg {
    Square,
    An,
}

#[derive(Args)]
struct Output {
    /// Output path, or `-` for stdout.
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u32,
    /// Region to cover.
    #[arg(long, value_enum, default_value = "square")]
    region: RegionArg,
    #[arg(long, default_value_t = 1_000_000_000)]
    max_nodes: u64,
    #[arg(long, default_value_t = 300.0)]
    max_seconds: f64,
}

impl SearchArgs {
    fn limits(&self) -> Result<Limits, String> {
        if !(self.max_seconds.is_finite() && self.max_seconds >= 0.0) {
            return Err(format!("--max-seconds must be a non-negative number, got {}", self.max_seconds));
        }
        Ok(Limits {
            max_nodes: self.max_nodes,
            max_time: Duration::from_secs_f64(self.max_seconds),
        })
    }

    fn region(&self) -> Result<Region, String> {
        match self.region {
            RegionArg::Square => Region::square(self.n),
            RegionArg::An => Region::an(self.n),
        }
        .map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a minimal tiling of the n×n square.
    Tile {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include the construction steps in JSON output.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check a JSON tiling document.
    Verify {
        /// Input path, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a tiling within a monomino budget.
    Solve {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        budget: u32,
        /// Search the root's branches in parallel.
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Find the least monomino count for the n×n square by search.
    Min {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1_000_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 300.0)]
        max_seconds: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Count all tilings within a monomino budget.
    Count {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        budget: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Table of (n, max_t, min_mono) for n = 1..=N.
    Sequence {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Draw a JSON tiling document as ASCII or SVG.
    Render {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
}

/// Failure carrying its exit code.
struct Exit {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Exit {
        Exit {
            code: EXIT_USAGE,
            message: format!("{e:#}"),
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(out: &Output, text: &str) -> Result<()> {
    if out.output == "-" {
        let mut stdout = io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        stdout.flush()?;
    } else {
        fs::write(&out.output, text).with_context(|| format!("writing {}", out.output))?;
    }
    Ok(())
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json value serializes");
    s.push('\n');
    s
}

fn tiling_value(t: &Tiling) -> Value {
    serde_json::from_str(&emit_json(t)).expect("emitted document is JSON")
}

fn region_value(search: &SearchArgs) -> Value {
    let kind = match search.region {
        RegionArg::Square => "square",
        RegionArg::An => "an",
    };
    json!({"kind": kind, "n": search.n})
}

fn parse_input(path: &str) -> Result<Tiling, Exit> {
    let text = read_input(path)?;
    parse_document(&text).map(|d| d.tiling).map_err(|e| Exit {
        code: EXIT_INVALID,
        message: format!("{path}: {e}"),
    })
}

fn run(cli: Cli) -> Result<u8, Exit> {
    match cli.command {
        Command::Tile { n, format, trace, out } => {
            if format == Format::Csv {
                return Err(usage("tile supports --format json, ascii or svg"));
            }
            let (tiling, steps) = construct(n).map_err(|e| usage(e.to_string()))?;
            let report = verify(&tiling);
            if !report.valid {
                eprintln!("constructed tiling failed verification: {}", json_line(&json!(report)).trim_end());
                return Ok(EXIT_INVALID);
            }
            let text = match format {
                Format::Json => emit_document(&tiling, trace.then_some(&steps)),
                Format::Ascii => render_ascii(&tiling).map_err(|e| usage(e.to_string()))?,
                Format::Svg => render_svg(&tiling),
                Format::Csv => unreachable!(),
            };
            write_output(&out, &text)?;
            Ok(0)
        }
        Command::Verify { input, out } => {
            let tiling = parse_input(&input)?;
            let report = verify(&tiling);
            write_output(&out, &json_line(&json!(report)))?;
            Ok(if report.valid { 0 } else { EXIT_INVALID })
        }
        Command::Solve { search, budget, parallel, out } => {
            let limits = search.limits().map_err(usage)?;
            let problem = CoverProblem::new(search.region().map_err(usage)?, budget);
            let result = if parallel { solve_parallel(&problem, &limits) } else { solve(&problem, &limits) }
                .map_err(|e| usage(e.to_string()))?;
            eprintln!("solve: {} after {:.3}s", result.status.name(), result.elapsed.as_secs_f64());
            let mut v = json!({
                "region": region_value(&search),
                "budget": budget,
                "status": result.status.name(),
                "nodes_expanded": result.nodes_expanded,
            });
            let code = match &result.status {
                SearchStatus::Found(t) => {
                    v["tiling"] = tiling_value(t);
                    0
                }
                SearchStatus::Infeasible => EXIT_INVALID,
                SearchStatus::Aborted(limit) => {
                    v["limit"] = json!(limit);
                    EXIT_ABORTED
                }
            };
            write_output(&out, &json_line(&v))?;
            Ok(code)
        }
        Command::Min { n, max_nodes, max_seconds, out } => {
            let search = SearchArgs {
                n,
                region: RegionArg::Square,
                max_nodes,
                max_seconds,
            };
            let limits = search.limits().map_err(usage)?;
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            let r = min_monominoes_search(n, &limits).map_err(|e| usage(e.to_string()))?;
            let attempts: Vec<Value> = r
                .attempts
                .iter()
                .map(|&(budget, status, nodes)| json!({"budget": budget, "status": status, "nodes_expanded": nodes}))
                .collect();
            let (v, code) = match r.outcome {
                MinOutcome::Found { min_monominoes } => (
                    json!({"n": n, "min_monominoes": min_monominoes, "status": "found",
                           "nodes_expanded": r.nodes_expanded, "attempts": attempts}),
                    0,
                ),
                MinOutcome::Aborted { budget, limit } => (
                    json!({"n": n, "status": "aborted", "budget": budget, "limit": limit,
                           "nodes_expanded": r.nodes_expanded, "attempts": attempts}),
                    EXIT_ABORTED,
                ),
            };
            write_output(&out, &json_line(&v))?;
            Ok(code)
        }
        Command::Count { search, budget, out } => {
            let limits = search.limits().map_err(usage)?;
            let problem = CoverProblem::new(search.region().map_err(usage)?, budget);
            let r = count_solutions(&problem, &limits).map_err(|e| usage(e.to_string()))?;
            let mut v = json!({
                "region": region_value(&search),
                "budget": budget,
                "nodes_expanded": r.nodes_expanded,
            });
            let code = match r.outcome {
                CountOutcome::Complete { solutions, orbits } => {
                    v["status"] = json!("complete");
                    v["solutions"] = json!(solutions);
                    v["orbits"] = json!(orbits);
                    0
                }
                CountOutcome::Aborted { limit } => {
                    v["status"] = json!("aborted");
                    v["limit"] = json!(limit);
                    EXIT_ABORTED
                }
            };
            write_output(&out, &json_line(&v))?;
            Ok(code)
        }
        Command::Sequence { n, format, out } => {
            let rows = sequence(n);
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("n,max_t,min_mono\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{}\n", r.n, r.max_t, r.min_mono));
                    }
                    s
                }
                Format::Json => json_line(&json!(rows)),
                _ => return Err(usage("sequence supports --format csv or json")),
            };
            write_output(&out, &text)?;
            Ok(0)
        }
        Command::Render { input, format, out } => {
            let tiling = parse_input(&input)?;
            let text = match format {
                Format::Ascii => render_ascii(&tiling).map_err(|e| usage(e.to_string()))?,
                Format::Svg => render_svg(&tiling),
                _ => return Err(usage("render supports --format ascii or svg")),
            };
            write_output(&out, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ttile: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
