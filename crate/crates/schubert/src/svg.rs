//! SVG diagrams of the marked square's path: a unit-square grid over the
//! skew shape, the initial cell black, the final cell gray, and a star on
//! the square where Phase 2 began.

use crate::local::EvacuShufflePath;
use crate::partition::Cell;
use crate::skew::SkewShape;

const UNIT: usize = 24;

/// Render the path over its shape. The viewBox covers the full outer
/// partition so column positions stay aligned.
pub fn render_path(shape: &SkewShape, path: &EvacuShufflePath, strips: usize) -> String {
    let rows = shape.n_rows();
    let cols = shape.outer().part(1);
    let width = cols * UNIT + 2;
    let height = rows * UNIT + 2;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    let corner = |c: Cell| ((c.col - 1) * UNIT + 1, (c.row - 1) * UNIT + 1);
    let start = path.cells.first().copied();
    let end = path.cells.last().copied();
    for cell in shape.cells_reading() {
        let (x, y) = corner(cell);
        let fill = if Some(cell) == start {
            "#000000"
        } else if Some(cell) == end {
            "#9e9e9e"
        } else if path.cells.contains(&cell) {
            "#e3ecf7"
        } else {
            "#ffffff"
        };
        out.push_str(&format!(
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{UNIT}\" height=\"{UNIT}\" \
             fill=\"{fill}\" stroke=\"#333333\"/>\n"
        ));
    }
    // Star the square where the algorithm switched phases.
    if path.transition_step <= strips && path.cells.len() >= path.transition_step {
        let cell = path.cells[path.transition_step - 1];
        let (x, y) = corner(cell);
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" \
             fill=\"#b00020\">*</text>\n",
            x + UNIT / 2,
            y + 3 * UNIT / 4,
            UNIT
        ));
    }
    out.push_str("</svg>\n");
    out
}
