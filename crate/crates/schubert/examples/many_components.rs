//! The many-components family: the monodromy is the identity, every
//! tableau is a fixed point, and there are no genomic tableaux, so the
//! associated curve splits into m - 1 disjoint lines.
//!
//! ```sh
//! cargo run --example many_components
//! ```

use schubert_curves::enumerate::{enumerate_genomic, many_components_family};
use schubert_curves::monodromy::{is_fixed_point, orbit_decomposition};

fn main() -> schubert_curves::Result<()> {
    for m in 2..=5 {
        let problem = many_components_family(m)?;
        let report = orbit_decomposition(&problem)?;
        let genomic = enumerate_genomic(&problem)?;
        assert_eq!(report.tableaux.len(), m - 1);
        assert!(report.permutation.iter().enumerate().all(|(i, &j)| i == j));
        assert!(genomic.is_empty());
        for pt in &report.tableaux {
            let flags = is_fixed_point(pt)?;
            assert!(flags.fixed && flags.path_connected && flags.no_genomic);
        }
        println!(
            "m = {m}: {} ({} fixed tableaux, 0 genomic)",
            problem,
            report.tableaux.len()
        );
    }
    Ok(())
}
