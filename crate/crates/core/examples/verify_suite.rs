//! Runs the full property-verification suite and prints the table.

use gaugenorm::verify::{render_table, run_all};

fn main() -> gaugenorm::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let report = run_all(seed)?;
    print!("{}", render_table(&report));
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
