//! The staircase family: a single monodromy orbit whose genus grows
//! quadratically with the parameter.
//!
//! ```sh
//! cargo run --release --example staircase_genus
//! ```

use schubert_curves::enumerate::staircase_family;
use schubert_curves::monodromy::curve_invariants;

fn main() -> schubert_curves::Result<()> {
    println!("  t | tableaux | genomic | orbits | genus");
    println!("----+----------+---------+--------+------");
    for t in 3..=6 {
        let problem = staircase_family(t)?;
        let inv = curve_invariants(&problem)?;
        assert_eq!(inv.lr_count, 2 * t * (t - 1));
        assert_eq!(inv.k_count, 3 * t * t - 5 * t + 1);
        assert_eq!(inv.genus, Some((t - 1) * (t - 2)));
        println!(
            "{:>3} | {:>8} | {:>7} | {:>6} | {:>5}",
            t,
            inv.lr_count,
            inv.k_count,
            inv.eta,
            inv.genus.unwrap()
        );
    }
    Ok(())
}
