use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, Rectangle};

/// The entry value that stands for the marked square. It sorts below every
/// genuine entry, matching its role when it sits in front of a tableau.
pub const MARKER: usize = 0;

/// A skew diagram `outer/inner`. Corners and co-corners are taken with
/// respect to the pair of partitions, not the bare cell set, so the same
/// square may be both an inner and an outer corner.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn n_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column bounds `(lo, hi)` of the cells in `row`; empty when `lo > hi`.
    pub fn row_bounds(&self, row: usize) -> (usize, usize) {
        (self.inner.part(row) + 1, self.outer.part(row))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        let (lo, hi) = self.row_bounds(cell.row);
        cell.row >= 1 && cell.col >= lo && cell.col <= hi
    }

    /// Cells in reading order: rows from bottom to top, left to right.
    pub fn cells_reading(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        for row in (1..=self.n_rows()).rev() {
            let (lo, hi) = self.row_bounds(row);
            for col in lo..=hi {
                cells.push(Cell::new(row, col));
            }
        }
        cells
    }

    /// Corners of the outer partition that lie in the shape; deleting one
    /// leaves a smaller skew shape.
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.outer
            .corners()
            .into_iter()
            .filter(|&c| self.contains(c))
            .collect()
    }

    /// Co-corners of the inner partition that lie in the shape; moving one
    /// into the inner partition leaves a smaller skew shape.
    pub fn outer_corners(&self) -> Vec<Cell> {
        self.inner
            .cocorners()
            .into_iter()
            .filter(|&c| c.col <= self.outer.part(c.row))
            .collect()
    }

    /// Corners of the inner partition: the starting holes of inward slides.
    pub fn inner_cocorners(&self) -> Vec<Cell> {
        self.inner.corners()
    }

    /// Co-corners of the outer partition: the starting holes of outward
    /// slides.
    pub fn outer_cocorners(&self) -> Vec<Cell> {
        self.outer.cocorners()
    }

    /// True when `cell` is in the shape and could be moved into the inner
    /// partition (its north and west neighbours are outside the shape).
    pub fn is_addable_to_inner(&self, cell: Cell) -> bool {
        self.contains(cell)
            && cell.col == self.inner.part(cell.row) + 1
            && (cell.row == 1 || self.inner.part(cell.row - 1) >= cell.col)
    }

    /// True when `cell` is in the shape and could be removed from the outer
    /// partition (its south and east neighbours are outside the shape).
    pub fn is_removable_from_outer(&self, cell: Cell) -> bool {
        self.contains(cell)
            && cell.col == self.outer.part(cell.row)
            && self.outer.part(cell.row + 1) < cell.col
    }

    /// No two cells share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.n_rows()).all(|r| self.outer.part(r + 1) <= self.inner.part(r))
    }

    /// No two cells share a row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.n_rows())
            .all(|r| self.outer.part(r) - self.inner.part(r).min(self.outer.part(r)) <= 1)
    }

    /// The shape obtained by reflecting through the antidiagonal of `rect`.
    pub fn antidiagonal(&self, rect: Rectangle) -> Result<SkewShape> {
        if !self.outer.fits(rect) {
            return Err(Error::NotContained(format!(
                "shape {}/{} does not fit in {rect}",
                self.outer, self.inner
            )));
        }
        let outer = self.inner.complement(rect)?.transpose();
        let inner = self.outer.complement(rect)?.transpose();
        SkewShape::new(outer, inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Is every suffix of the word ballot, i.e. does every suffix contain at
/// least as many `i`s as `i+1`s for all `i`? Entries must be positive.
pub fn is_ballot(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &v in word.iter().rev() {
        debug_assert!(v >= 1, "ballot words contain positive entries");
        counts[v] += 1;
        if v >= 2 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// A filling of a skew shape. Entries are positive integers; the value
/// [`MARKER`] (zero) stands for the single marked square, when present.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.n_rows() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, got {}",
                shape.n_rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_bounds(i + 1);
            let want = (hi + 1).saturating_sub(lo);
            if row.len() != want {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, shape wants {}",
                    i + 1,
                    row.len(),
                    want
                )));
            }
        }
        let t = SkewTableau { shape, rows };
        if t.entries_reading().filter(|&(_, v)| v == MARKER).count() > 1 {
            return Err(Error::InvalidTableau("more than one marked square".into()));
        }
        Ok(t)
    }

    pub fn from_cells<I>(shape: SkewShape, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Cell, usize)>,
    {
        let mut rows: Vec<Vec<Option<usize>>> = (1..=shape.n_rows())
            .map(|r| {
                let (lo, hi) = shape.row_bounds(r);
                vec![None; (hi + 1).saturating_sub(lo)]
            })
            .collect();
        for (cell, v) in cells {
            if !shape.contains(cell) {
                return Err(Error::InvalidTableau(format!("{cell} outside shape")));
            }
            let (lo, _) = shape.row_bounds(cell.row);
            let slot = &mut rows[cell.row - 1][cell.col - lo];
            if slot.is_some() {
                return Err(Error::InvalidTableau(format!("{cell} filled twice")));
            }
            *slot = Some(v);
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::InvalidTableau(format!("row {} not fully filled", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        SkewTableau::new(shape, rows)
    }

    /// The highest weight tableau of straight shape `p`: row `i` is all `i`s.
    pub fn highest_weight(p: &Partition) -> SkewTableau {
        let rows = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        SkewTableau {
            shape: SkewShape::straight(p.clone()),
            rows,
        }
    }

    pub fn empty() -> SkewTableau {
        SkewTableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains(cell) {
            return None;
        }
        let (lo, _) = self.shape.row_bounds(cell.row);
        Some(self.rows[cell.row - 1][cell.col - lo])
    }

    pub(crate) fn set(&mut self, cell: Cell, v: usize) {
        debug_assert!(self.shape.contains(cell));
        let (lo, _) = self.shape.row_bounds(cell.row);
        self.rows[cell.row - 1][cell.col - lo] = v;
    }

    /// Cells and entries in reading order (bottom row to top row, each left
    /// to right).
    pub fn entries_reading(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape
            .cells_reading()
            .into_iter()
            .map(move |c| (c, self.entry(c).unwrap()))
    }

    /// The reading word. A marked square appears as [`MARKER`].
    pub fn reading_word(&self) -> Vec<usize> {
        self.entries_reading().map(|(_, v)| v).collect()
    }

    pub fn marker_cell(&self) -> Option<Cell> {
        self.entries_reading()
            .find(|&(_, v)| v == MARKER)
            .map(|(c, _)| c)
    }

    /// Entry counts, ignoring a marker: `content()[i-1]` is the number of
    /// `i`s.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for (_, v) in self.entries_reading() {
            if v == MARKER {
                continue;
            }
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Rows weakly increase and columns strictly increase, skipping a marked
    /// square if present.
    pub fn is_semistandard(&self) -> bool {
        for (cell, v) in self.entries_reading() {
            if v == MARKER {
                continue;
            }
            let right = Cell::new(cell.row, cell.col + 1);
            if let Some(w) = self.entry(right) {
                if w != MARKER && w < v {
                    return false;
                }
            }
            let below = Cell::new(cell.row + 1, cell.col);
            if let Some(w) = self.entry(below) {
                if w != MARKER && w <= v {
                    return false;
                }
            }
        }
        true
    }

    /// Is the reading word ballot, with any marked square omitted?
    pub fn is_ballot(&self) -> bool {
        let word: Vec<usize> = self
            .reading_word()
            .into_iter()
            .filter(|&v| v != MARKER)
            .collect();
        is_ballot(&word)
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.entries_reading() {
            if v == MARKER || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.is_semistandard()
    }

    /// Replace the entries by `1..=n` preserving relative order; ties broken
    /// left-to-right along the reading word.
    pub fn standardize(&self) -> Result<SkewTableau> {
        if self.marker_cell().is_some() {
            return Err(Error::InvalidTableau(
                "cannot standardize a tableau with a marked square".into(),
            ));
        }
        if !self.is_semistandard() {
            return Err(Error::InvalidTableau(
                "cannot standardize a non-semistandard tableau".into(),
            ));
        }
        let mut order: Vec<(usize, usize, Cell)> = self
            .entries_reading()
            .enumerate()
            .map(|(pos, (cell, v))| (v, pos, cell))
            .collect();
        order.sort();
        let mut out = self.clone();
        for (rank, &(_, _, cell)) in order.iter().enumerate() {
            out.set(cell, rank + 1);
        }
        Ok(out)
    }

    /// Inverse of standardization for a known content: entry `v` becomes `i`
    /// when `v` lies in the `i`-th block of the partial sums of `content`.
    pub(crate) fn destandardize(&self, content: &Partition) -> Result<SkewTableau> {
        if !self.is_standard() {
            return Err(Error::InvalidTableau(
                "destandardize wants a standard tableau".into(),
            ));
        }
        if content.size() != self.size() {
            return Err(Error::InvalidTableau(format!(
                "content {content} has size {}, tableau has {} cells",
                content.size(),
                self.size()
            )));
        }
        let mut bounds = Vec::with_capacity(content.len());
        let mut acc = 0;
        for &p in content.parts() {
            acc += p;
            bounds.push(acc);
        }
        let mut out = self.clone();
        for (cell, v) in self.entries_reading().collect::<Vec<_>>() {
            let i = bounds.partition_point(|&b| b < v);
            out.set(cell, i + 1);
        }
        Ok(out)
    }

    /// Rotate a standard tableau by 180 degrees about the center of `rect`
    /// and reverse its numbering (`m` becomes `n+1-m`).
    pub fn rotate180(&self, rect: Rectangle) -> Result<SkewTableau> {
        if !self.is_standard() {
            return Err(Error::InvalidTableau(
                "rotate180 wants a standard tableau".into(),
            ));
        }
        let n = self.size();
        let outer = self.shape.inner().complement(rect)?;
        let inner = self.shape.outer().complement(rect)?;
        let shape = SkewShape::new(outer, inner)?;
        let cells = self
            .entries_reading()
            .map(|(c, v)| {
                (
                    Cell::new(rect.rows + 1 - c.row, rect.cols + 1 - c.col),
                    n + 1 - v,
                )
            })
            .collect::<Vec<_>>();
        SkewTableau::from_cells(shape, cells)
    }

    /// Text form: one line per row, `.` for inner cells, `X` for the marked
    /// square. Entries are bare digits, or comma-separated tokens once any
    /// entry exceeds 9.
    pub fn to_text(&self) -> String {
        let wide = self.entries_reading().any(|(_, v)| v >= 10);
        let mut lines = Vec::with_capacity(self.shape.n_rows());
        for row in 1..=self.shape.n_rows() {
            let (lo, hi) = self.shape.row_bounds(row);
            let mut toks: Vec<String> = vec![".".into(); lo - 1];
            for col in lo..=hi {
                let v = self.entry(Cell::new(row, col)).unwrap();
                toks.push(if v == MARKER {
                    "X".into()
                } else {
                    v.to_string()
                });
            }
            lines.push(if wide { toks.join(",") } else { toks.concat() });
        }
        lines.join("\n")
    }

    pub fn parse_text(text: &str) -> Result<SkewTableau> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .skip_while(|l| l.is_empty())
            .collect();
        let lines: Vec<&str> = lines
            .iter()
            .rev()
            .skip_while(|l| l.is_empty())
            .copied()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        let mut inner_parts = Vec::new();
        let mut outer_parts = Vec::new();
        let mut rows = Vec::new();
        for line in &lines {
            let toks: Vec<String> = if line.contains(',') {
                line.split(',').map(|t| t.trim().to_string()).collect()
            } else {
                line.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(String::from)
                    .collect()
            };
            let dots = toks.iter().take_while(|t| *t == ".").count();
            let mut entries = Vec::with_capacity(toks.len() - dots);
            for tok in &toks[dots..] {
                if tok == "." {
                    return Err(Error::Parse("'.' cells must be a prefix of the row".into()));
                }
                if tok == "X" || tok == "x" {
                    entries.push(MARKER);
                } else {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                    if v == 0 {
                        return Err(Error::Parse(
                            "entries must be positive (use X for the marked square)".into(),
                        ));
                    }
                    entries.push(v);
                }
            }
            inner_parts.push(dots);
            outer_parts.push(dots + entries.len());
            rows.push(entries);
        }
        while outer_parts.last() == Some(&0) {
            outer_parts.pop();
            inner_parts.pop();
            rows.pop();
        }
        while inner_parts.last() == Some(&0) {
            inner_parts.pop();
        }
        let outer = Partition::new(outer_parts)
            .map_err(|e| Error::Parse(format!("row lengths do not form a partition: {e}")))?;
        let inner = Partition::new(inner_parts)
            .map_err(|e| Error::Parse(format!("indents do not form a partition: {e}")))?;
        SkewTableau::new(SkewShape::new(outer, inner)?, rows)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewTableau[{}]", self.to_text().replace('\n', " | "))
    }
}
