use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use triality::expr;
use triality::report::RunReport;
use triality::suites::{run_suite, suite_names};
use triality::tables::{build_table, TableFormat, TableKind};
use triality::Error;

#[derive(Parser)]
#[command(name = "triality", version, about = "Exact checks and tables for split D4 triality")]
struct Cli {
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Rank of V for the rank-generic checks and for `eval`.
    #[arg(long, global = true, default_value_t = 4)]
    rank: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Render a table (psi, theta_plus, generators, octonion_mult, structure_constants).
    Tables {
        which: String,
        /// json, md or latex
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Evaluate an element expression such as `psi(X[e1-e2](t))`.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => match io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Error::Domain(format!("cannot write to stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Verify { suite, format } => {
            let results = run_suite(suite, cli.seed, cli.rank)?;
            let report = RunReport::new(cli.seed, cli.rank, suite_names(suite), results);
            let text = match format {
                ReportFormat::Json => report.to_json() + "\n",
                ReportFormat::Text => report.to_text(),
            };
            emit(&cli.out, &text)?;
            if report.summary.anomaly > 0 {
                eprintln!("warning: {} check(s) reported an anomaly", report.summary.anomaly);
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Tables { which, format } => {
            let kind: TableKind = which.parse()?;
            let format: TableFormat = format.parse()?;
            emit(&cli.out, &build_table(kind)?.render(format))?;
            Ok(0)
        }
        Command::Eval { expr: src, format } => {
            let v = expr::evaluate(src, cli.rank)?;
            let text = match format {
                ReportFormat::Json => expr::to_json(src, &v) + "\n",
                ReportFormat::Text => v.render() + "\n",
            };
            emit(&cli.out, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
