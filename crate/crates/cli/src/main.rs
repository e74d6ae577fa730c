use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use log::error;
use rayfan_cli::commands::{run, Command, Job, Options};

/// Ray ideals, chamber fans and multi-section rings of graded monomial rings.
#[derive(Debug, Parser)]
#[command(name = "rayfan", version)]
struct Args {
    command: Command,
    /// JSON ring spec (or toric spec for msr-dim, classgroup, factorial).
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Report destination; for plot2d, the SVG path (the CSV goes next to it).
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    grid_bound: i64,
    /// Random points for the chamber consistency check.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// A degree "p/q,p/q,..."; compare takes two.
    #[arg(long = "point")]
    points: Vec<String>,
    /// A single multidegree "r1,r2,..." for msr-dim.
    #[arg(long)]
    degree: Option<String>,
    /// Chamber generators "a,b;c,d" for roundtrip.
    #[arg(long)]
    chamber: Option<String>,
    /// Record wall-clock time in the report (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let level = match args.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let report_path = if args.command == Command::Plot2d { None } else { args.output.clone() };
    let job = Job {
        command: args.command,
        input: args.input,
        options: Options {
            grid_bound: args.grid_bound,
            samples: args.samples,
            seed: args.seed,
            points: args.points,
            degree: args.degree,
            chamber: args.chamber,
            output: args.output,
        },
    };
    let start = Instant::now();
    let mut report = match run(&job) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if args.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match serde_json::to_string_pretty(&report) {
        Ok(t) => t + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match report_path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write the report: {e}");
                    return ExitCode::from(1);
                }
            }
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for c in report.verification.iter().filter(|c| !c.verdict) {
            error!("verification failed: {}", c.property);
        }
        ExitCode::from(1)
    }
}
