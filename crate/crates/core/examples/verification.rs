// Runs the verification harness over a small genus range and prints the
// report, including the diagnostics that never fail a run.

use motive_forge::verify::{run, Suite};
use motive_forge::Result;

pub fn run_example() -> Result<String> {
    let report = run(Suite::All, 2..=3);
    Ok(report.to_text())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
