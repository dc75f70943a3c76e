use std::fmt;

use crate::error::{Error, Result};
use crate::jdt::{highest_weight_representative, SlideRecord};
use crate::partition::{Cell, Partition, Rectangle};
use crate::skew::{SkewShape, SkewTableau, MARKER};

/// Where the marked square sits relative to the strips of the filling.
///
/// `First` and `Last` are the endpoints of a chain: the marked square is an
/// inner (resp. outer) co-corner of the rest of the filling. `Between(i)`
/// says the marked square is an outer co-corner of the squares with entries
/// below `i` and an inner co-corner of those with entries `i` and above;
/// `First` coincides with `Between(1)` and `Last` with `Between(t+1)` where
/// `t` is the number of strips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoxPosition {
    First,
    Between(usize),
    Last,
}

/// A ballot semistandard filling of a skew shape together with one marked
/// square. The tableau holds [`MARKER`] at `box_cell`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PuncturedTableau {
    tableau: SkewTableau,
    box_cell: Cell,
    position: BoxPosition,
}

impl PuncturedTableau {
    pub fn new(tableau: SkewTableau, position: BoxPosition) -> Result<Self> {
        let box_cell = tableau.marker_cell().ok_or_else(|| {
            Error::InvalidTableau("punctured tableau needs a marked square".into())
        })?;
        let t = tableau.content().len();
        let position = match position {
            BoxPosition::Between(1) => BoxPosition::First,
            BoxPosition::Between(i) if i == t + 1 => BoxPosition::Last,
            other => other,
        };
        let pt = PuncturedTableau {
            tableau,
            box_cell,
            position,
        };
        pt.validate()?;
        Ok(pt)
    }

    pub fn box_first(tableau: SkewTableau) -> Result<Self> {
        Self::new(tableau, BoxPosition::First)
    }

    pub fn box_last(tableau: SkewTableau) -> Result<Self> {
        Self::new(tableau, BoxPosition::Last)
    }

    /// Parse from the text format; the position is inferred from the marked
    /// square (inner co-corner wins when both placements are legal and
    /// `prefer_last` is false).
    pub fn parse_text(text: &str, prefer_last: bool) -> Result<Self> {
        let tableau = SkewTableau::parse_text(text)?;
        let cell = tableau
            .marker_cell()
            .ok_or_else(|| Error::Parse("no X in tableau text".into()))?;
        let first_ok = tableau.shape().is_addable_to_inner(cell);
        let last_ok = tableau.shape().is_removable_from_outer(cell);
        let position = match (first_ok, last_ok) {
            (true, false) => BoxPosition::First,
            (false, true) => BoxPosition::Last,
            (true, true) => {
                if prefer_last {
                    BoxPosition::Last
                } else {
                    BoxPosition::First
                }
            }
            (false, false) => {
                return Err(Error::InvalidTableau(format!(
                    "marked square {cell} is neither first nor last"
                )))
            }
        };
        Self::new(tableau, position)
    }

    fn validate(&self) -> Result<()> {
        if !self.tableau.is_semistandard() {
            return Err(Error::InvalidTableau(
                "rows must weakly increase and columns strictly increase".into(),
            ));
        }
        if !self.tableau.is_ballot() {
            return Err(Error::InvalidTableau("reading word is not ballot".into()));
        }
        let content = self.tableau.content();
        if Partition::new(content.clone()).is_err() {
            return Err(Error::InvalidTableau(format!(
                "content {content:?} is not a partition"
            )));
        }
        let t = content.len();
        let i = self.class_index();
        if i < 1 || i > t + 1 {
            return Err(Error::InvalidTableau(format!(
                "position index {i} out of range for {t} strips"
            )));
        }
        let shape = self.tableau.shape();
        let Cell { row, col } = self.box_cell;
        let north = row
            .checked_sub(1)
            .map(|r| Cell::new(r.max(1), col))
            .filter(|c| c.row < row && shape.contains(*c));
        let west = col
            .checked_sub(1)
            .map(|c| Cell::new(row, c.max(1)))
            .filter(|c| c.col < col && shape.contains(*c));
        let south = Some(Cell::new(row + 1, col)).filter(|c| shape.contains(*c));
        let east = Some(Cell::new(row, col + 1)).filter(|c| shape.contains(*c));
        for c in [north, west].into_iter().flatten() {
            let v = self.tableau.entry(c).unwrap();
            if v >= i {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} at {c} should be below {i} next to the marked square"
                )));
            }
        }
        for c in [south, east].into_iter().flatten() {
            let v = self.tableau.entry(c).unwrap();
            if v < i {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} at {c} should be at least {i} next to the marked square"
                )));
            }
        }
        Ok(())
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn box_cell(&self) -> Cell {
        self.box_cell
    }

    pub fn position(&self) -> BoxPosition {
        self.position
    }

    pub fn shape(&self) -> &SkewShape {
        self.tableau.shape()
    }

    /// The content of the filling, ignoring the marked square.
    pub fn content(&self) -> Partition {
        Partition::new(self.tableau.content()).expect("validated at construction")
    }

    /// Number of strips, `t`.
    pub fn strips(&self) -> usize {
        self.tableau.content().len()
    }

    /// `1` for `First`, `t+1` for `Last`, `i` for `Between(i)`.
    pub fn class_index(&self) -> usize {
        match self.position {
            BoxPosition::First => 1,
            BoxPosition::Between(i) => i,
            BoxPosition::Last => self.strips() + 1,
        }
    }

    /// Canonical sort key: the reading word with the marked square read as
    /// `0` when first and as `t+1` when last.
    pub fn key(&self) -> Vec<usize> {
        let marker_value = match self.position {
            BoxPosition::Last => self.strips() + 1,
            _ => 0,
        };
        self.tableau
            .reading_word()
            .into_iter()
            .map(|v| if v == MARKER { marker_value } else { v })
            .collect()
    }

    /// The filling without its marked square. Only the chain endpoints give
    /// a genuine skew shape.
    pub fn numeric_part(&self) -> Result<SkewTableau> {
        let shape = self.tableau.shape();
        let (outer, inner) = match self.position {
            BoxPosition::First => (
                shape.outer().clone(),
                shape.inner().with_cell(self.box_cell)?,
            ),
            BoxPosition::Last => (
                shape.outer().without_cell(self.box_cell)?,
                shape.inner().clone(),
            ),
            BoxPosition::Between(i) => {
                return Err(Error::InvalidTableau(format!(
                    "marked square strictly between strips ({i}) leaves no skew shape"
                )))
            }
        };
        let cells = self
            .tableau
            .entries_reading()
            .filter(|&(c, _)| c != self.box_cell);
        SkewTableau::from_cells(SkewShape::new(outer, inner)?, cells)
    }

    fn slide_in_place(&self, outward: bool) -> (SkewTableau, Cell, SlideRecord) {
        let mut t = self.tableau.clone();
        let shape = t.shape().clone();
        let mut hole = self.box_cell;
        let mut path = vec![hole];
        loop {
            let (a, b) = if outward {
                (
                    (hole.row > 1).then(|| Cell::new(hole.row - 1, hole.col)),
                    (hole.col > 1).then(|| Cell::new(hole.row, hole.col - 1)),
                )
            } else {
                (
                    Some(Cell::new(hole.row + 1, hole.col)),
                    Some(Cell::new(hole.row, hole.col + 1)),
                )
            };
            let va = a
                .filter(|&c| shape.contains(c))
                .map(|c| (c, t.entry(c).unwrap()));
            let vb = b
                .filter(|&c| shape.contains(c))
                .map(|c| (c, t.entry(c).unwrap()));
            let chosen = match (va, vb) {
                (None, None) => break,
                (Some((c, _)), None) => c,
                (None, Some((c, _))) => c,
                (Some((ca, x)), Some((cb, y))) => {
                    if (outward && x >= y) || (!outward && x <= y) {
                        ca
                    } else {
                        cb
                    }
                }
            };
            let v = t.entry(chosen).unwrap();
            t.set(hole, v);
            t.set(chosen, MARKER);
            hole = chosen;
            path.push(hole);
        }
        let rec = SlideRecord {
            start: path[0],
            end: hole,
            path,
        };
        (t, hole, rec)
    }

    /// The jeu de taquin bijection from last to first: slide the marked
    /// square inward through the whole filling.
    pub fn sh(&self) -> Result<(PuncturedTableau, SlideRecord)> {
        if self.position != BoxPosition::Last {
            return Err(Error::InvalidTableau(
                "sh expects the marked square in last position".into(),
            ));
        }
        let (t, _, rec) = self.slide_in_place(true);
        Ok((PuncturedTableau::new(t, BoxPosition::First)?, rec))
    }

    /// Inverse of [`Self::sh`]: slide the marked square outward through the
    /// whole filling.
    pub fn sh_inverse(&self) -> Result<(PuncturedTableau, SlideRecord)> {
        if self.position != BoxPosition::First {
            return Err(Error::InvalidTableau(
                "sh_inverse expects the marked square in first position".into(),
            ));
        }
        let (t, _, rec) = self.slide_in_place(false);
        Ok((PuncturedTableau::new(t, BoxPosition::Last)?, rec))
    }

    /// Rotate by 180 degrees about the center of `rect`, transpose, and take
    /// the highest-weight representative, computed strip-wise: the square
    /// holding the `j`-th-from-last instance of any entry lands on the
    /// reflected square with entry `j`. An involution exchanging first and
    /// last positions.
    pub fn rotate_transpose(&self, rect: Rectangle) -> Result<PuncturedTableau> {
        if matches!(self.position, BoxPosition::Between(_)) {
            return Err(Error::InvalidTableau(
                "rotate_transpose expects the marked square first or last".into(),
            ));
        }
        let shape = self.tableau.shape().antidiagonal(rect)?;
        let mut seen: Vec<usize> = vec![0; self.strips() + 1];
        let mut cells: Vec<(Cell, usize)> = Vec::with_capacity(self.tableau.size());
        // Walk the reading word backwards so "j-th from last" is a running
        // count per value.
        let entries: Vec<(Cell, usize)> = self.tableau.entries_reading().collect();
        for &(cell, v) in entries.iter().rev() {
            if v == MARKER {
                continue;
            }
            seen[v] += 1;
            cells.push((rect.antidiagonal(cell), seen[v]));
        }
        cells.push((rect.antidiagonal(self.box_cell), MARKER));
        let tableau = SkewTableau::from_cells(shape, cells)?;
        let position = match self.position {
            BoxPosition::First => BoxPosition::Last,
            BoxPosition::Last => BoxPosition::First,
            BoxPosition::Between(_) => unreachable!(),
        };
        PuncturedTableau::new(tableau, position)
    }

    /// Transpose the pair (marked square, dual equivalence class) and take
    /// the highest-weight representative. Keeps the position.
    pub fn transpose_class(&self) -> Result<PuncturedTableau> {
        let numeric = self.numeric_part()?;
        let std = numeric.standardize()?;
        let transposed_shape = SkewShape::new(
            std.shape().outer().transpose(),
            std.shape().inner().transpose(),
        )?;
        let transposed = SkewTableau::from_cells(
            transposed_shape,
            std.entries_reading()
                .map(|(c, v)| (Cell::new(c.col, c.row), v)),
        )?;
        let rep = highest_weight_representative(&transposed)?;
        let full_shape = SkewShape::new(
            self.shape().outer().transpose(),
            self.shape().inner().transpose(),
        )?;
        let box_cell = Cell::new(self.box_cell.col, self.box_cell.row);
        let cells = rep
            .entries_reading()
            .chain(std::iter::once((box_cell, MARKER)));
        let tableau = SkewTableau::from_cells(full_shape, cells)?;
        PuncturedTableau::new(tableau, self.position)
    }

    /// Rotate the pair (marked square, dual equivalence class) by 180
    /// degrees about the center of `rect` and take the highest-weight
    /// representative. Exchanges first and last positions.
    pub fn rotate_class(&self, rect: Rectangle) -> Result<PuncturedTableau> {
        let numeric = self.numeric_part()?;
        let std = numeric.standardize()?;
        let rotated = std.rotate180(rect)?;
        let rep = highest_weight_representative(&rotated)?;
        let full_shape = SkewShape::new(
            self.shape().inner().complement(rect)?,
            self.shape().outer().complement(rect)?,
        )?;
        let box_cell = Cell::new(
            rect.rows + 1 - self.box_cell.row,
            rect.cols + 1 - self.box_cell.col,
        );
        let cells = rep
            .entries_reading()
            .chain(std::iter::once((box_cell, MARKER)));
        let tableau = SkewTableau::from_cells(full_shape, cells)?;
        let position = match self.position {
            BoxPosition::First => BoxPosition::Last,
            BoxPosition::Last => BoxPosition::First,
            BoxPosition::Between(i) => BoxPosition::Between(i),
        };
        PuncturedTableau::new(tableau, position)
    }
}

impl fmt::Display for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tableau.to_text())
    }
}

impl fmt::Debug for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PuncturedTableau[{} @ {:?} {:?}]",
            self.tableau.to_text().replace('\n', " | "),
            self.box_cell,
            self.position
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first(text: &str) -> PuncturedTableau {
        PuncturedTableau::parse_text(text, false).unwrap()
    }

    fn last(text: &str) -> PuncturedTableau {
        PuncturedTableau::parse_text(text, true).unwrap()
    }

    #[test]
    fn positions_inferred_from_text() {
        let a = first("...X11\n.11\n1");
        assert_eq!(a.position(), BoxPosition::First);
        assert_eq!(a.box_cell(), Cell::new(1, 4));
        let b = last("...111\n.1X\n1");
        assert_eq!(b.position(), BoxPosition::Last);
    }

    #[test]
    fn rejects_non_ballot() {
        // Word (omitting X) is 2 1 ... suffix "2" fails.
        assert!(PuncturedTableau::parse_text("X2\n1", false).is_err());
    }

    #[test]
    fn sh_single_displayed_step() {
        // Sliding the marked square inward moves it one row of the strip at
        // a time.
        let b = last("...111\n.1X\n1");
        let (a, rec) = b.sh().unwrap();
        assert_eq!(a, first("...111\n.X1\n1"));
        assert_eq!(rec.end, Cell::new(2, 2));

        let c = last("...11X\n.11\n1");
        let (d, _) = c.sh().unwrap();
        assert_eq!(d, first("...X11\n.11\n1"));
    }

    #[test]
    fn sh_inverse_roundtrip() {
        let b = last("...111\n.1X\n1");
        let (a, _) = b.sh().unwrap();
        let (back, _) = a.sh_inverse().unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn sh_identity_on_lone_marker() {
        let t = SkewTableau::parse_text("X").unwrap();
        let pt = PuncturedTableau::new(t, BoxPosition::Last).unwrap();
        let (moved, rec) = pt.sh().unwrap();
        assert_eq!(moved.box_cell(), pt.box_cell());
        assert_eq!(rec.steps(), 0);
    }

    #[test]
    fn rejects_column_repeats() {
        assert!(PuncturedTableau::parse_text(".X1\n11\n1", false).is_err());
    }

    #[test]
    fn rotate_transpose_is_involution() {
        let rect = Rectangle::new(3, 3).unwrap();
        let pt = first(".X1\n12\n2");
        let r = pt.rotate_transpose(rect).unwrap();
        assert_eq!(r.position(), BoxPosition::Last);
        let back = r.rotate_transpose(rect.transpose()).unwrap();
        assert_eq!(back, pt);
    }

    #[test]
    fn rotate_transpose_one_row_becomes_one_column() {
        // A single row of 1s reflects to a single column filled 1..k.
        let rect = Rectangle::new(1, 3).unwrap();
        let pt = first("X11");
        let r = pt.rotate_transpose(rect).unwrap();
        assert_eq!(r.tableau().to_text(), "1\n2\nX");
    }

    #[test]
    fn transpose_class_fixes_symmetric_pair() {
        // A vertical domino of 1,2 under the marked square transposes to a
        // horizontal strip of two 1s.
        let pt = first("X\n1\n2");
        let tr = pt.transpose_class().unwrap();
        assert_eq!(tr.tableau().to_text(), "X11");
        let back = tr.transpose_class().unwrap();
        assert_eq!(back, pt);
    }

    #[test]
    fn numeric_part_strips_marker() {
        let pt = first("...X11\n.11\n1");
        let n = pt.numeric_part().unwrap();
        assert_eq!(n.size(), 5);
        assert!(n.marker_cell().is_none());
    }
}
