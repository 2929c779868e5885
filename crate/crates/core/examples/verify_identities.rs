//! Run the identity suite on a random typical pencil and on a degenerate one.

use momentforge::cli::verify_suite;
use momentforge::pencil::parse_pencil_spec;

fn main() -> momentforge::Result<()> {
    for spec in ["P=1,0,-5,0;Q=0,1,0,1", "P=1,0,0,1;Q=0,0,0,1"] {
        let report = verify_suite(&parse_pencil_spec(spec)?, 23)?;
        println!("{spec}: {}", if report.all_passed() { "all checks pass" } else { "FAILURES" });
        for c in &report.checks {
            println!("  {:<20} {:>3} pass {:>3} skip", c.name, c.passed, c.skipped);
        }
    }
    Ok(())
}
