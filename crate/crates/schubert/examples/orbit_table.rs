//! Decompose the monodromy into orbits and tabulate, for each orbit, the
//! genomic tableaux its Phase 1 and Phase 2 jumps generate.
//!
//! ```sh
//! cargo run --release --example orbit_table
//! ```

use schubert_curves::enumerate::SchubertProblem;
use schubert_curves::monodromy::orbit_decomposition;
use schubert_curves::report::orbit_table;
use schubert_curves::{Partition, Rectangle};

fn main() -> schubert_curves::Result<()> {
    for (a, b, g, rows, cols) in [
        (vec![6, 5, 3, 1], vec![7, 4, 3, 2], vec![5, 5, 4, 2], 6, 8),
        (vec![2, 2, 1], vec![3, 1, 1], vec![3, 2], 4, 4),
    ] {
        let problem = SchubertProblem::new(
            Partition::new(a)?,
            Partition::new(b)?,
            Partition::new(g)?,
            Rectangle::new(rows, cols)?,
        )?;
        let report = orbit_decomposition(&problem)?;
        println!("{problem}");
        println!(
            "{} tableaux fall into {} orbits ({} fixed points)",
            report.tableaux.len(),
            report.orbits.len(),
            report.fixed_points.len()
        );
        print!("{}", orbit_table(&report));
        println!();
    }
    Ok(())
}
