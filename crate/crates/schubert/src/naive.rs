//! Slow reference implementations, written independently of the main
//! enumeration and algorithm paths. They exist for the test suite to check
//! against and are not meant for production use.

use crate::error::Result;
use crate::partition::Cell;
use crate::skew::{is_ballot, SkewShape, SkewTableau};

use crate::enumerate::{GenomicTableau, SchubertProblem};

/// Semistandard fillings generated in forward reading order (bottom row
/// first), the opposite traversal from the main enumerator.
pub fn ssyt_fillings_forward(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    let cells = shape.cells_reading();
    let total: usize = content.iter().sum();
    if cells.len() != total {
        return Vec::new();
    }
    let max = content.len();
    let mut out = Vec::new();
    let mut acc: Vec<(Cell, usize)> = Vec::with_capacity(cells.len());
    let mut remaining: Vec<usize> = content.to_vec();

    fn entry_at(acc: &[(Cell, usize)], cell: Cell) -> Option<usize> {
        acc.iter().find(|&&(c, _)| c == cell).map(|&(_, v)| v)
    }

    fn rec(
        cells: &[Cell],
        k: usize,
        max: usize,
        acc: &mut Vec<(Cell, usize)>,
        remaining: &mut Vec<usize>,
        shape: &SkewShape,
        out: &mut Vec<SkewTableau>,
    ) {
        if k == cells.len() {
            out.push(
                SkewTableau::from_cells(shape.clone(), acc.iter().copied())
                    .expect("forward search respects the shape"),
            );
            return;
        }
        let cell = cells[k];
        for v in 1..=max {
            if remaining[v - 1] == 0 {
                continue;
            }
            // Left neighbour is earlier in the same row; the cell below is
            // in an earlier row. Both are already placed.
            if cell.col > 1 {
                if let Some(w) = entry_at(acc, Cell::new(cell.row, cell.col - 1)) {
                    if w > v {
                        continue;
                    }
                }
            }
            if let Some(w) = entry_at(acc, Cell::new(cell.row + 1, cell.col)) {
                if w <= v {
                    continue;
                }
            }
            acc.push((cell, v));
            remaining[v - 1] -= 1;
            rec(cells, k + 1, max, acc, remaining, shape, out);
            remaining[v - 1] += 1;
            acc.pop();
        }
    }
    rec(&cells, 0, max, &mut acc, &mut remaining, shape, &mut out);
    out
}

/// Genomic tableaux by exhaustive filtering: every semistandard filling
/// with one extra entry, every pair of equal entries, checked against the
/// defining conditions on the raw reading word.
pub fn genomic_brute(problem: &SchubertProblem) -> Result<Vec<GenomicTableau>> {
    let Some(shape) = problem.skew_shape() else {
        return Ok(Vec::new());
    };
    let beta = &problem.beta;
    let mut out = Vec::new();
    for family in 1..=beta.len() {
        let mut content: Vec<usize> = beta.parts().to_vec();
        content[family - 1] += 1;
        for base in ssyt_fillings_forward(&shape, &content) {
            let word: Vec<(Cell, usize)> = base.entries_reading().collect();
            let spots: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(_, &(_, v))| v == family)
                .map(|(k, _)| k)
                .collect();
            for a in 0..spots.len() {
                for b in a + 1..spots.len() {
                    let (pa, pb) = (spots[a], spots[b]);
                    let (ca, cb) = (word[pa].0, word[pb].0);
                    if ca.is_adjacent(cb) {
                        continue;
                    }
                    if word[pa + 1..pb].iter().any(|&(_, v)| v == family) {
                        continue;
                    }
                    let drop_one = |skip: usize| -> Vec<usize> {
                        word.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != skip)
                            .map(|(_, &(_, v))| v)
                            .collect()
                    };
                    if !is_ballot(&drop_one(pa)) || !is_ballot(&drop_one(pb)) {
                        continue;
                    }
                    out.push(GenomicTableau::new(base.clone(), (ca, cb), family)?);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Ballot fillings by post-hoc filtering of the forward enumeration.
pub fn ballot_fillings_filtered(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    ssyt_fillings_forward(shape, content)
        .into_iter()
        .filter(|t| t.is_ballot())
        .collect()
}
