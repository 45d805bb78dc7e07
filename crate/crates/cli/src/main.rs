use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use stairlr_cli::commands::{self, expansion_table, Target};
use stairlr_cli::sweep::{report_table, run_sweep, SweepOptions};
use stairlr_core::{SkewShape, StaircaseSpec};

#[derive(Parser)]
#[command(
    name = "stairlr",
    version,
    about = "Skew Schur functions of staircase-derived shapes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// Print JSON (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print a plain-text table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of a skew shape.
    Expand {
        /// Staircase spec, e.g. "lambda=3,1;k=0;n=4".
        #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
        spec: Option<String>,
        /// Skew shape "outer/inner", e.g. "2,2/1".
        #[arg(long)]
        shape: Option<String>,
        /// Number of variables; terms with more parts are dropped.
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Difference between the transposed-foundation shape and the original.
    Diff {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Equality sweep in n + 1 variables over all foundations in range.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k_min: usize,
        #[arg(long)]
        k_max: Option<usize>,
        /// Worker threads (default: available cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// NDJSON file of finished shapes; resumed from when present.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, default_value_t = 40)]
        max_boxes: usize,
        /// Stop after this many newly decided shapes (report is incomplete).
        #[arg(long)]
        stop_after: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Step-by-step log of the two-row bijection.
    Trace {
        #[arg(long)]
        spec: String,
        /// Foundation filling, rows separated by '/'.
        #[arg(long)]
        tableau: String,
        /// Map from the transposed side back (the tableau is then the
        /// filling of the transposed foundation).
        #[arg(long)]
        reverse: bool,
    },
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Expand {
            spec,
            shape,
            vars,
            format,
        } => {
            let target = match (spec, shape) {
                (Some(s), _) => {
                    Target::Spec(s.parse::<StaircaseSpec>().map_err(|e| e.to_string())?)
                }
                (None, Some(s)) => {
                    Target::Shape(s.parse::<SkewShape>().map_err(|e| e.to_string())?)
                }
                (None, None) => return Err("one of --spec or --shape is required".into()),
            };
            let e = commands::expand(&target, vars).map_err(|e| e.to_string())?;
            if format.table {
                print!("{}", expansion_table(&e));
            } else {
                print_json(&e);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Diff { spec, vars, format } => {
            let spec: StaircaseSpec = spec
                .parse()
                .map_err(|e: stairlr_core::Error| e.to_string())?;
            let report = commands::diff(&spec, vars).map_err(|e| e.to_string())?;
            if format.table {
                print!("{}", expansion_table(&report.terms));
                println!(
                    "positive {}  multiplicity-free {}",
                    report.positive, report.multiplicity_free
                );
                if let Some(a) = report.formula_agrees {
                    println!("formula agrees {a}");
                }
            } else {
                print_json(&report);
            }
            if report.disagrees() {
                eprintln!(
                    "closed formula and enumeration disagree for {}",
                    report.spec
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            n,
            k_min,
            k_max,
            jobs,
            checkpoint,
            max_boxes,
            stop_after,
            format,
        } => {
            let mut opts = SweepOptions::new(n, k_min, k_max.unwrap_or(k_min));
            opts.jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |c| c.get()));
            opts.checkpoint = checkpoint;
            opts.max_boxes = max_boxes;
            opts.stop_after = stop_after;
            let interrupt = Arc::new(AtomicBool::new(false));
            let flag = Arc::clone(&interrupt);
            ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst))
                .map_err(|e| e.to_string())?;
            let reports = run_sweep(&opts, &interrupt).map_err(|e| e.to_string())?;
            for r in &reports {
                eprintln!("n={} k={}: {:.2?}", r.n, r.k, r.wall_time);
            }
            if format.table {
                print!("{}", report_table(&reports));
            } else {
                print_json(&reports);
            }
            if reports.iter().any(|r| !r.complete) {
                eprintln!("sweep interrupted; rerun with the same --checkpoint to resume");
            }
            if reports.iter().any(|r| !r.holds()) {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace {
            spec,
            tableau,
            reverse,
        } => {
            let spec: StaircaseSpec = spec
                .parse()
                .map_err(|e: stairlr_core::Error| e.to_string())?;
            let steps = commands::trace(&spec, &tableau, reverse).map_err(|e| e.to_string())?;
            print_json(&steps);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
