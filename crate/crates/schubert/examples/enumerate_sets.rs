//! List the three tableau sets attached to a triple of partitions: the two
//! punctured sets (marked square first / last) and the genomic tableaux.
//!
//! ```sh
//! cargo run --example enumerate_sets
//! ```

use schubert_curves::enumerate::{
    enumerate_box_first, enumerate_box_last, enumerate_genomic, SchubertProblem,
};
use schubert_curves::{Partition, Rectangle};

fn main() -> schubert_curves::Result<()> {
    let problem = SchubertProblem::new(
        Partition::new(vec![3, 2, 1])?,
        Partition::new(vec![4, 2, 1])?,
        Partition::new(vec![3, 2, 1])?,
        Rectangle::new(4, 5)?,
    )?;
    println!("{problem}\n");

    let firsts = enumerate_box_first(&problem)?;
    let lasts = enumerate_box_last(&problem)?;
    assert_eq!(firsts.len(), lasts.len(), "the slide is a bijection");
    println!("{} tableaux with the marked square first:", firsts.len());
    for (i, t) in firsts.iter().enumerate() {
        println!("--- {i} (square at {})\n{t}", t.box_cell());
    }

    let genomic = enumerate_genomic(&problem)?;
    println!("\n{} genomic tableaux:", genomic.len());
    for (i, g) in genomic.iter().enumerate() {
        let (a, b) = g.marked();
        println!(
            "--- {i} family {}, repeated squares {a} and {b}\n{}",
            g.family(),
            g.base()
        );
    }
    Ok(())
}
