//! Run the local evacuation-shuffle on one tableau, print every step, and
//! undo it with the reverse algorithm.
//!
//! ```sh
//! cargo run --example worked_shuffle
//! ```

use schubert_curves::local::{local_esh, local_esh_reverse, replay};
use schubert_curves::punctured::PuncturedTableau;

fn main() -> schubert_curves::Result<()> {
    let pt =
        PuncturedTableau::parse_text("......111\n...X1122\n...1223\n...334\n..44\n235", false)?;
    println!("start (content {}):\n{pt}\n", pt.content());

    let (out, path) = local_esh(&pt)?;
    for (mv, state) in replay(pt.tableau(), &path.moves) {
        if mv.is_movement() {
            println!("{mv}\n{state}\n");
        } else {
            println!("{mv}  (suffix already tied; no movement)\n");
        }
    }
    println!("transition step: {}", path.transition_step);
    println!(
        "path of the marked square ({} squares, {} moves): {}",
        path.cells.len(),
        path.move_count(),
        path.cells
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    let (back, reverse_path) = local_esh_reverse(&out)?;
    assert_eq!(back, pt, "the reverse algorithm must undo the forward one");
    println!(
        "\nreverse pass visits the same squares backwards: {}",
        reverse_path
            .cells
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(())
}
