use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use moment_angle::cli::{run, Request};

fn main() -> ExitCode {
    let request = Request::parse();
    let report = run(&request);
    // Broken pipes (e.g. `zk census 5 | head`) are not worth reporting.
    let _ = std::io::stdout().write_all(report.stdout.as_bytes());
    let _ = std::io::stderr().write_all(report.stderr.as_bytes());
    ExitCode::from(report.exit_code as u8)
}
