// Run every oracle suite at a small size and print the reports.
//
// `cargo run --release --example verify`

use braidkit::{Result, Suite, VerificationReport};

pub fn run_example() -> Result<Vec<VerificationReport>> {
    let mut all = Vec::new();
    for suite in Suite::ALL {
        for report in suite.run(3, 200, 7)? {
            println!("{report}");
            all.push(report);
        }
    }
    Ok(all)
}

fn main() -> Result<()> {
    let reports = run_example()?;
    let failing = reports.iter().filter(|r| r.gating && !r.passed()).count();
    println!("{failing} gating reports with failures");
    Ok(())
}
