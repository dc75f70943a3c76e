//! Exhaustively verify the algorithmic theorems on every triple of
//! partitions in every rectangle with rows + cols bounded by a parameter.
//!
//! ```sh
//! cargo run --release --example verify_sweep -- 7
//! ```

use schubert_curves::sweep::{run_sweep, Check, SweepSpec};

fn main() -> anyhow::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);
    let spec = SweepSpec::new(max_n, Check::ALL.to_vec())?;
    let started = std::time::Instant::now();
    let outcome = run_sweep(&spec)?;
    println!(
        "swept {} rectangles / {} problems / {} tableaux in {:.1?}",
        outcome.rectangles,
        outcome.problems,
        outcome.tableaux,
        started.elapsed()
    );
    for check in Check::ALL {
        let n = outcome.failures.iter().filter(|f| f.check == check).count();
        println!(
            "  {:<20} {}",
            check.name(),
            if n == 0 { "pass" } else { "FAIL" }
        );
    }
    if let Some(f) = outcome.failures.first() {
        println!("first counterexample ({}, {}):", f.check, f.problem);
        println!("  {}", f.detail);
        for row in &f.tableau_rows {
            println!("  {row}");
        }
        std::process::exit(1);
    }
    Ok(())
}
