//! Draw the path of the marked square as an SVG: initial square black,
//! final square gray, a star where the algorithm switched phases.
//!
//! ```sh
//! cargo run --example path_svg -- out.svg
//! ```

use schubert_curves::local::local_esh;
use schubert_curves::punctured::PuncturedTableau;
use schubert_curves::svg::render_path;

fn main() -> anyhow::Result<()> {
    let target = std::env::args().nth(1).unwrap_or_else(|| "path.svg".into());
    let pt =
        PuncturedTableau::parse_text("......111\n...X1122\n...1223\n...334\n..44\n235", false)?;
    let (_, path) = local_esh(&pt)?;
    let svg = render_path(pt.shape(), &path, pt.strips());
    std::fs::write(&target, svg)?;
    println!(
        "wrote {target}: {} squares, transition at step {}",
        path.cells.len(),
        path.transition_step
    );
    Ok(())
}
