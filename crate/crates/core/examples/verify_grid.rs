//! Run every structural check over 1 <= m <= n <= N and print the table.
//!
//! cargo run --release --example verify_grid -- [N]

use oddflag::moment_graph::DEFAULT_SIZE_CAP;
use oddflag::verify::{grid, reports_to_table, run_grid};
use oddflag::weyl::Notation;

fn main() -> oddflag::Result<()> {
    let top = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let reports = run_grid(&grid(1, top)?, DEFAULT_SIZE_CAP)?;
    print!("{}", reports_to_table(&reports, Notation::Bar));
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
    Ok(())
}
