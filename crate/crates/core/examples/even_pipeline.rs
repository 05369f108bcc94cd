// The even-degree pipeline with all of its intermediate stages and
// diagnostics. Step 3 is a series division, so the report says whether it
// terminated.

use motive_forge::format::report_to_text;
use motive_forge::{n0_even, Result};

pub fn run_example() -> Result<String> {
    let report = n0_even(2, 8)?;
    Ok(report_to_text(&report))
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
