use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orthoinv::{run, HarnessError, RunConfig};
use orthoinv_core::invariants::DEFAULT_TERM_BUDGET;

#[derive(Parser)]
#[command(name = "orthoinv", version, about = "Construct and verify invariants of O(2m+1, q), q = 2^s")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report every check.
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: u32,
        /// Suite to run; repeatable. Defaults to all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 12)]
        degree_cap: u32,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        term_budget: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Where to write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Verify { m, q, suites, degree_cap, term_budget, jobs, cache_dir, report } = cli.command;
    let config = RunConfig {
        m,
        q,
        suites: if suites.is_empty() { vec!["all".into()] } else { suites },
        degree_cap,
        term_budget,
        jobs,
        cache_dir,
        report_path: report,
    };
    match run(&config) {
        Ok(report) => {
            for c in &report.checks {
                println!("{:<7} {:>8}ms  {}  {}", c.status, c.millis, c.name, c.detail);
            }
            let s = &report.summary;
            println!(
                "{} checks: {} passed, {} failed, {} skipped in {} ms (cache hits {}, misses {})",
                s.total, s.passed, s.failed, s.skipped, s.wall_millis, s.cache_hits, s.cache_misses
            );
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e @ HarnessError::Config(_)) => {
            eprintln!("orthoinv: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("orthoinv: {e}");
            ExitCode::from(1)
        }
    }
}
