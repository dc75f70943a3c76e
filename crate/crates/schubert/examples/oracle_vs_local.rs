//! Step-counter comparison: the local algorithm moves the marked square a
//! bounded number of times, while the rectification oracle's slide work
//! grows with the inner shape.
//!
//! ```sh
//! cargo run --release --example oracle_vs_local
//! ```

use schubert_curves::bench::{bench_table, staircase_bench};

fn main() -> schubert_curves::Result<()> {
    let rows = staircase_bench(3, 7)?;
    print!("{}", bench_table(&rows));
    for w in rows.windows(2) {
        assert!(w[1].ratio > w[0].ratio, "the gap must widen as t grows");
    }
    println!("\noracle/local step ratio grows with the inner shape, as expected");
    Ok(())
}
