//! Runs a verification suite and prints the report (pass `--json` for JSON).

use triality::report::RunReport;
use triality::suites::{run_suite, suite_names};

fn main() -> triality::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite = args.iter().find(|a| !a.starts_with("--")).map(String::as_str).unwrap_or("triality");
    let results = run_suite(suite, 0, 4)?;
    let report = RunReport::new(0, 4, suite_names(suite), results);
    if args.iter().any(|a| a == "--json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}
