//! Exhaustive enumeration of the tableau sets attached to a triple of
//! partitions in a rectangle: the two punctured Littlewood-Richardson sets,
//! the genomic tableaux with one repeated entry, and Pieri strips. Also the
//! two parameter families used for extremal examples.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, Rectangle};
use crate::punctured::{BoxPosition, PuncturedTableau};
use crate::skew::{SkewShape, SkewTableau, MARKER};

/// A triple of partitions in a rectangle with
/// `|alpha| + |beta| + |gamma| = rows*cols - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchubertProblem {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub rect: Rectangle,
}

impl SchubertProblem {
    pub fn new(
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        rect: Rectangle,
    ) -> Result<Self> {
        for (name, p) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            if !p.fits(rect) {
                return Err(Error::NotContained(format!(
                    "{name} = {p} does not fit in {rect}"
                )));
            }
        }
        let total = alpha.size() + beta.size() + gamma.size();
        if total + 1 != rect.size() {
            return Err(Error::SizeMismatch {
                alpha: alpha.size(),
                beta: beta.size(),
                gamma: gamma.size(),
                expected: rect.size() - 1,
            });
        }
        Ok(SchubertProblem {
            alpha,
            beta,
            gamma,
            rect,
        })
    }

    pub fn gamma_complement(&self) -> Partition {
        self.gamma
            .complement(self.rect)
            .expect("validated at construction")
    }

    /// The ambient skew shape `gamma^c / alpha`, when `alpha` fits inside
    /// the complement.
    pub fn skew_shape(&self) -> Option<SkewShape> {
        let gc = self.gamma_complement();
        if gc.contains(&self.alpha) {
            Some(SkewShape::new(gc, self.alpha.clone()).expect("containment checked"))
        } else {
            None
        }
    }
}

impl fmt::Display for SchubertProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha=({}) beta=({}) gamma=({}) rect={}",
            self.alpha, self.beta, self.gamma, self.rect
        )
    }
}

impl fmt::Debug for SchubertProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All ballot semistandard fillings of `shape` with the given content.
/// Cells are assigned in reverse reading order so the ballot condition
/// prunes prefixes of the search.
pub fn ballot_fillings(shape: &SkewShape, content: &Partition) -> Vec<SkewTableau> {
    fillings(shape, content.parts(), true)
}

/// All semistandard fillings with arbitrary entry counts (no ballot
/// condition).
pub fn ssyt_fillings(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    fillings(shape, content, false)
}

fn fillings(shape: &SkewShape, content: &[usize], ballot: bool) -> Vec<SkewTableau> {
    let total: usize = content.iter().sum();
    if shape.size() != total {
        return Vec::new();
    }
    let cells = shape.cells_reading();
    let n = cells.len();
    if n == 0 {
        return vec![SkewTableau::from_cells(shape.clone(), []).expect("empty filling")];
    }
    // For cell k, the reading positions of its neighbour above and to the
    // right, both later in reading order.
    let pos_of = |cell: Cell| cells.iter().position(|&c| c == cell);
    let above: Vec<Option<usize>> = cells
        .iter()
        .map(|c| {
            (c.row > 1)
                .then(|| Cell::new(c.row - 1, c.col))
                .and_then(pos_of)
        })
        .collect();
    let right: Vec<Option<usize>> = cells
        .iter()
        .map(|c| pos_of(Cell::new(c.row, c.col + 1)))
        .collect();

    let mut out = Vec::new();
    let mut entries = vec![0usize; n];
    let mut counts = vec![0usize; content.len() + 1];
    // Fill from the end of the reading word backwards; `counts` then always
    // holds the content of the suffix assigned so far.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        entries: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        content: &[usize],
        above: &[Option<usize>],
        right: &[Option<usize>],
        ballot: bool,
        shape: &SkewShape,
        cells: &[Cell],
        out: &mut Vec<SkewTableau>,
    ) {
        if k == 0 {
            let t = SkewTableau::from_cells(
                shape.clone(),
                cells.iter().copied().zip(entries.iter().copied()),
            )
            .expect("search respects the shape");
            out.push(t);
            return;
        }
        let k = k - 1;
        for v in 1..=content.len() {
            if counts[v] >= content[v - 1] {
                continue;
            }
            if ballot && v >= 2 && counts[v - 1] <= counts[v] {
                continue;
            }
            if let Some(r) = right[k] {
                if entries[r] < v {
                    continue;
                }
            }
            if let Some(a) = above[k] {
                if entries[a] >= v {
                    continue;
                }
            }
            entries[k] = v;
            counts[v] += 1;
            rec(
                k, entries, counts, content, above, right, ballot, shape, cells, out,
            );
            counts[v] -= 1;
        }
    }
    rec(
        n,
        &mut entries,
        &mut counts,
        content,
        &above,
        &right,
        ballot,
        shape,
        &cells,
        &mut out,
    );
    out
}

/// Positions where the marked square can start: the co-corners of `alpha`
/// inside the ambient shape.
fn box_first_cells(problem: &SchubertProblem, gc: &Partition) -> Vec<Cell> {
    problem
        .alpha
        .cocorners()
        .into_iter()
        .filter(|c| gc.contains_cell(*c))
        .collect()
}

/// All punctured tableaux with the marked square first, in canonical order
/// (lexicographic reading word, marked square read as 0).
pub fn enumerate_box_first(problem: &SchubertProblem) -> Result<Vec<PuncturedTableau>> {
    let Some(shape) = problem.skew_shape() else {
        return Ok(Vec::new());
    };
    let gc = problem.gamma_complement();
    let mut out = Vec::new();
    for b in box_first_cells(problem, &gc) {
        let inner = problem.alpha.with_cell(b)?;
        if !gc.contains(&inner) {
            continue;
        }
        let rest = SkewShape::new(gc.clone(), inner)?;
        for t in ballot_fillings(&rest, &problem.beta) {
            let cells = t
                .entries_reading()
                .chain(std::iter::once((b, MARKER)))
                .collect::<Vec<_>>();
            let full = SkewTableau::from_cells(shape.clone(), cells)?;
            out.push(PuncturedTableau::new(full, BoxPosition::First)?);
        }
    }
    out.sort_by_key(PuncturedTableau::key);
    Ok(out)
}

/// All punctured tableaux with the marked square last, in canonical order
/// (lexicographic reading word, marked square read as `t + 1`).
pub fn enumerate_box_last(problem: &SchubertProblem) -> Result<Vec<PuncturedTableau>> {
    let Some(shape) = problem.skew_shape() else {
        return Ok(Vec::new());
    };
    let gc = problem.gamma_complement();
    let mut out = Vec::new();
    for b in gc.corners() {
        if b.col <= problem.alpha.part(b.row) {
            continue;
        }
        let outer = gc.without_cell(b)?;
        if !outer.contains(&problem.alpha) {
            continue;
        }
        let rest = SkewShape::new(outer, problem.alpha.clone())?;
        for t in ballot_fillings(&rest, &problem.beta) {
            let cells = t
                .entries_reading()
                .chain(std::iter::once((b, MARKER)))
                .collect::<Vec<_>>();
            let full = SkewTableau::from_cells(shape.clone(), cells)?;
            out.push(PuncturedTableau::new(full, BoxPosition::Last)?);
        }
    }
    out.sort_by_key(PuncturedTableau::key);
    Ok(out)
}

/// A semistandard filling with one extra entry of `family` and a marked
/// pair of non-adjacent equal entries: no other `family` entry lies between
/// them in reading order, and deleting either one leaves a ballot word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenomicTableau {
    base: SkewTableau,
    marked: (Cell, Cell),
    family: usize,
}

/// Earlier-in-reading-order comparison.
fn reading_le(a: Cell, b: Cell) -> bool {
    a.row > b.row || (a.row == b.row && a.col <= b.col)
}

impl GenomicTableau {
    pub fn new(base: SkewTableau, marked: (Cell, Cell), family: usize) -> Result<Self> {
        let (c1, c2) = if reading_le(marked.0, marked.1) {
            (marked.0, marked.1)
        } else {
            (marked.1, marked.0)
        };
        if base.entry(c1) != Some(family) || base.entry(c2) != Some(family) {
            return Err(Error::InvalidTableau(format!(
                "marked squares {c1}, {c2} must both hold {family}"
            )));
        }
        if c1.is_adjacent(c2) || c1 == c2 {
            return Err(Error::InvalidTableau(format!(
                "marked squares {c1}, {c2} must be distinct and non-adjacent"
            )));
        }
        if !base.is_semistandard() {
            return Err(Error::InvalidTableau(
                "base filling is not semistandard".into(),
            ));
        }
        // No other `family` entry strictly between the marked squares.
        let word: Vec<(Cell, usize)> = base.entries_reading().collect();
        let p1 = word.iter().position(|&(c, _)| c == c1).unwrap();
        let p2 = word.iter().position(|&(c, _)| c == c2).unwrap();
        if word[p1 + 1..p2].iter().any(|&(_, v)| v == family) {
            return Err(Error::InvalidTableau(format!(
                "another {family} lies between {c1} and {c2} in reading order"
            )));
        }
        // Deleting either marked square leaves a ballot word.
        for skip in [p1, p2] {
            let reduced: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &(_, v))| v)
                .collect();
            if !crate::skew::is_ballot(&reduced) {
                return Err(Error::InvalidTableau(format!(
                    "deleting the marked square at {} breaks ballotness",
                    word[skip].0
                )));
            }
        }
        Ok(GenomicTableau {
            base,
            marked: (c1, c2),
            family,
        })
    }

    pub fn base(&self) -> &SkewTableau {
        &self.base
    }

    pub fn marked(&self) -> (Cell, Cell) {
        self.marked
    }

    pub fn family(&self) -> usize {
        self.family
    }
}

impl fmt::Debug for GenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Genomic[{} marked {:?},{:?} family {}]",
            self.base.to_text().replace('\n', " | "),
            self.marked.0,
            self.marked.1,
            self.family
        )
    }
}

/// All genomic tableaux for the problem, sorted by family and then
/// canonically.
pub fn enumerate_genomic(problem: &SchubertProblem) -> Result<Vec<GenomicTableau>> {
    let Some(shape) = problem.skew_shape() else {
        return Ok(Vec::new());
    };
    let beta = &problem.beta;
    let mut out = Vec::new();
    for family in 1..=beta.len() {
        let mut content: Vec<usize> = beta.parts().to_vec();
        content[family - 1] += 1;
        for base in ssyt_fillings(&shape, &content) {
            let family_cells: Vec<Cell> = base
                .entries_reading()
                .filter(|&(_, v)| v == family)
                .map(|(c, _)| c)
                .collect();
            for pair in family_cells.windows(2) {
                if let Ok(g) = GenomicTableau::new(base.clone(), (pair[0], pair[1]), family) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Genomic counts per family, indexed by `family - 1`.
pub fn genomic_family_counts(problem: &SchubertProblem) -> Result<Vec<usize>> {
    let mut counts = vec![0usize; problem.beta.len()];
    for g in enumerate_genomic(problem)? {
        counts[g.family() - 1] += 1;
    }
    Ok(counts)
}

/// Fillings of a horizontal strip whose rows strictly increase and whose
/// reading word weakly increases through every value `1..=max_content`.
pub fn enumerate_pieri_strips(shape: &SkewShape, max_content: usize) -> Result<Vec<SkewTableau>> {
    if !shape.is_horizontal_strip() {
        return Err(Error::InvalidShape(format!(
            "{shape:?} is not a horizontal strip"
        )));
    }
    let cells = shape.cells_reading();
    let n = cells.len();
    if n == 0 || max_content == 0 {
        return Ok(Vec::new());
    }
    // A gap-free weakly increasing word with strictly increasing rows
    // climbs by exactly one inside a row; row boundaries climb by 0 or 1.
    let breaks: Vec<bool> = cells.windows(2).map(|w| w[1].row != w[0].row).collect();
    let forced: usize = breaks.iter().filter(|&&b| !b).count();
    let n_breaks = breaks.len() - forced;
    if max_content < forced + 1 || max_content > n {
        return Ok(Vec::new());
    }
    let need = max_content - 1 - forced;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n_breaks) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut word = Vec::with_capacity(n);
        let mut v = 1;
        word.push(v);
        let mut bi = 0;
        for &is_break in &breaks {
            if is_break {
                if mask >> bi & 1 == 1 {
                    v += 1;
                }
                bi += 1;
            } else {
                v += 1;
            }
            word.push(v);
        }
        debug_assert_eq!(v, max_content);
        let t = SkewTableau::from_cells(shape.clone(), cells.iter().copied().zip(word))?;
        out.push(t);
    }
    out.sort_by_key(|t| t.reading_word());
    Ok(out)
}

/// The staircase family: `alpha = gamma = (t, ..., 1)`,
/// `beta = (t+1, 2, 1^(t-2))` in a `(t+1) x (t+2)` rectangle.
pub fn staircase_family(t: usize) -> Result<SchubertProblem> {
    if t < 3 {
        return Err(Error::InvalidArgument(format!(
            "staircase family needs t >= 3, got {t}"
        )));
    }
    let staircase = Partition::new((1..=t).rev().collect())?;
    let mut beta_parts = vec![t + 1, 2];
    beta_parts.extend(std::iter::repeat_n(1, t - 2));
    let beta = Partition::new(beta_parts)?;
    SchubertProblem::new(
        staircase.clone(),
        beta,
        staircase,
        Rectangle::new(t + 1, t + 2)?,
    )
}

/// The many-components family: `beta = (m, 1, 1)`,
/// `alpha = (m, m-1, ..., 2)`, and `gamma` the complement of
/// `(m+1, m, ..., 3, 2, 2)` in an `(m+1) x (m+1)` square.
pub fn many_components_family(m: usize) -> Result<SchubertProblem> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "many-components family needs m >= 2, got {m}"
        )));
    }
    let rect = Rectangle::new(m + 1, m + 1)?;
    let alpha = Partition::new((2..=m).rev().collect())?;
    let beta = Partition::new(vec![m, 1, 1])?;
    let mut gc_parts: Vec<usize> = (3..=m + 1).rev().collect();
    gc_parts.push(2);
    gc_parts.push(2);
    let gamma_c = Partition::new(gc_parts)?;
    let gamma = gamma_c.complement(rect)?;
    SchubertProblem::new(alpha, beta, gamma, rect)
}

/// Every partition fitting inside the rectangle, grouped by size.
pub fn partitions_by_size(rect: Rectangle) -> Vec<Vec<Partition>> {
    let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); rect.size() + 1];
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(parts) = stack.pop() {
        let size: usize = parts.iter().sum();
        by_size[size].push(Partition::new(parts.clone()).unwrap());
        if parts.len() < rect.rows {
            let cap = parts.last().copied().unwrap_or(rect.cols);
            for next in 1..=cap {
                let mut bigger = parts.clone();
                bigger.push(next);
                stack.push(bigger);
            }
        }
    }
    for group in &mut by_size {
        group.sort();
    }
    by_size
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn problem(a: &[usize], b: &[usize], g: &[usize], rows: usize, cols: usize) -> SchubertProblem {
        SchubertProblem::new(p(a), p(b), p(g), Rectangle::new(rows, cols).unwrap()).unwrap()
    }

    #[test]
    fn size_mismatch_reports_sizes() {
        let err = SchubertProblem::new(p(&[2]), p(&[1]), p(&[1]), Rectangle::new(2, 2).unwrap())
            .unwrap_err();
        assert!(matches!(
            err,
            Error::SizeMismatch {
                alpha: 2,
                beta: 1,
                gamma: 1,
                expected: 3
            }
        ));
    }

    #[test]
    fn pieri_case_box_positions() {
        // A horizontal strip with three nonempty rows: the marked square
        // sits at the left end of each row.
        let pr = problem(&[3, 1], &[5], &[5, 3], 3, 6);
        let firsts = enumerate_box_first(&pr).unwrap();
        assert_eq!(firsts.len(), 3);
        let cells: Vec<Cell> = firsts.iter().map(|t| t.box_cell()).collect();
        assert!(cells.contains(&Cell::new(1, 4)));
        assert!(cells.contains(&Cell::new(2, 2)));
        assert!(cells.contains(&Cell::new(3, 1)));
        let lasts = enumerate_box_last(&pr).unwrap();
        assert_eq!(lasts.len(), 3);
        let cells: Vec<Cell> = lasts.iter().map(|t| t.box_cell()).collect();
        assert!(cells.contains(&Cell::new(1, 6)));
        assert!(cells.contains(&Cell::new(2, 3)));
        assert!(cells.contains(&Cell::new(3, 1)));
    }

    #[test]
    fn four_by_four_counts() {
        let pr = problem(&[2, 2, 1], &[3, 1, 1], &[3, 2], 4, 4);
        assert_eq!(enumerate_box_first(&pr).unwrap().len(), 2);
        assert_eq!(enumerate_box_last(&pr).unwrap().len(), 2);
        assert_eq!(enumerate_genomic(&pr).unwrap().len(), 0);
    }

    #[test]
    fn staircase_counts_t3() {
        let pr = staircase_family(3).unwrap();
        assert_eq!(pr.alpha, p(&[3, 2, 1]));
        assert_eq!(pr.beta, p(&[4, 2, 1]));
        assert_eq!(pr.rect, Rectangle::new(4, 5).unwrap());
        assert_eq!(enumerate_box_first(&pr).unwrap().len(), 12);
        assert_eq!(enumerate_box_last(&pr).unwrap().len(), 12);
        // Family counts t(t-1), (t-1)^2, t(t-2); total 3t^2 - 5t + 1.
        assert_eq!(genomic_family_counts(&pr).unwrap(), vec![6, 4, 3]);
        assert_eq!(enumerate_genomic(&pr).unwrap().len(), 13);
    }

    #[test]
    fn staircase_guard() {
        assert!(staircase_family(2).is_err());
        assert!(staircase_family(3).is_ok());
    }

    #[test]
    fn many_components_values() {
        let pr = many_components_family(3).unwrap();
        assert_eq!(pr.alpha, p(&[3, 2]));
        assert_eq!(pr.beta, p(&[3, 1, 1]));
        assert_eq!(pr.gamma, p(&[2, 2, 1]));
        assert_eq!(pr.rect, Rectangle::new(4, 4).unwrap());
        assert_eq!(enumerate_box_first(&pr).unwrap().len(), 2);
        assert!(many_components_family(1).is_err());
    }

    #[test]
    fn pieri_strip_display_counts() {
        // Rows of sizes 2, 2, 1 from the top.
        let shape = SkewShape::new(p(&[5, 3, 1]), p(&[3, 1])).unwrap();
        assert_eq!(enumerate_pieri_strips(&shape, 5).unwrap().len(), 1);
        assert_eq!(enumerate_pieri_strips(&shape, 4).unwrap().len(), 2);
        assert_eq!(enumerate_pieri_strips(&shape, 3).unwrap().len(), 1);
        assert_eq!(enumerate_pieri_strips(&shape, 2).unwrap().len(), 0);
        assert_eq!(enumerate_pieri_strips(&shape, 6).unwrap().len(), 0);
    }

    #[test]
    fn pieri_strip_edge_cases() {
        let single = SkewShape::new(p(&[1]), Partition::empty()).unwrap();
        assert_eq!(enumerate_pieri_strips(&single, 1).unwrap().len(), 1);
        let not_strip = SkewShape::new(p(&[2, 2]), Partition::empty()).unwrap();
        assert!(enumerate_pieri_strips(&not_strip, 2).is_err());
    }

    #[test]
    fn genomic_marked_pair_is_unordered() {
        let pr = staircase_family(3).unwrap();
        for g in enumerate_genomic(&pr).unwrap() {
            let (c1, c2) = g.marked();
            assert!(reading_le(c1, c2));
            assert!(!c1.is_adjacent(c2));
        }
    }

    #[test]
    fn empty_lr_set_when_alpha_escapes() {
        // alpha not inside gamma^c: no fillings at all.
        let pr = problem(&[2, 2], &[], &[2, 2], 3, 3);
        assert!(pr.skew_shape().is_none());
        assert!(enumerate_box_first(&pr).unwrap().is_empty());
        assert!(enumerate_genomic(&pr).unwrap().is_empty());
    }
}
