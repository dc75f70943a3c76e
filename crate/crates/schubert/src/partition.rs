use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A square of a Young diagram in matrix coordinates: 1-indexed `(row, col)`
/// from the top-left, English convention.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// True when the two cells share an edge.
    pub fn is_adjacent(self, other: Cell) -> bool {
        let dr = self.row.abs_diff(other.row);
        let dc = self.col.abs_diff(other.col);
        dr + dc == 1
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

// Cells serialize as [row, col] pairs.
impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (row, col) = <(usize, usize)>::deserialize(deserializer)?;
        if row == 0 || col == 0 {
            return Err(D::Error::custom("cells are 1-indexed"));
        }
        Ok(Cell { row, col })
    }
}

/// A `k x (n-k)` rectangle of squares.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "rectangle must have positive sides, got {rows}x{cols}"
            )));
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn size(self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(self) -> Rectangle {
        Rectangle {
            rows: self.cols,
            cols: self.rows,
        }
    }

    /// Reflection through the antidiagonal: rotate 180 degrees about the
    /// center, then transpose. Maps this rectangle onto its transpose.
    pub fn antidiagonal(self, cell: Cell) -> Cell {
        debug_assert!(cell.row <= self.rows && cell.col <= self.cols);
        Cell::new(self.cols + 1 - cell.col, self.rows + 1 - cell.row)
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::Parse(format!("expected ROWSxCOLS, got {s:?}")))?;
        let rows = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad row count in {s:?}")))?;
        let cols = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad column count in {s:?}")))?;
        Rectangle::new(rows, cols)
    }
}

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of squares in the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The part in the given 1-indexed row; 0 past the last row.
    pub fn part(&self, row: usize) -> usize {
        debug_assert!(row >= 1);
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.parts[i])
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.col <= self.part(cell.row)
    }

    pub fn fits(&self, rect: Rectangle) -> bool {
        self.len() <= rect.rows && self.part(1) <= rect.cols
    }

    /// Conjugate partition (reflect the diagram through the main diagonal).
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Complement inside the rectangle: rotate the diagram by 180 degrees
    /// about the center of `rect` and take what is left.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        if !self.fits(rect) {
            return Err(Error::NotContained(format!(
                "partition {self} does not fit in {rect}"
            )));
        }
        let mut parts: Vec<usize> = (1..=rect.rows)
            .rev()
            .map(|r| rect.cols - self.part(r))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Squares which, if removed, leave a smaller partition.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// Exterior squares which, if added, give a larger partition.
    pub fn cocorners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Cell::new(r, self.part(r) + 1))
            .collect()
    }

    /// Co-corners that stay inside the rectangle.
    pub fn cocorners_in(&self, rect: Rectangle) -> Vec<Cell> {
        self.cocorners()
            .into_iter()
            .filter(|c| c.row <= rect.rows && c.col <= rect.cols)
            .collect()
    }

    pub fn with_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.cocorners().contains(&cell) {
            return Err(Error::InvalidArgument(format!(
                "{cell} is not a co-corner of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if cell.row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn without_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.corners().contains(&cell) {
            return Err(Error::InvalidArgument(format!(
                "{cell} is not a corner of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Parses a comma-separated list of parts. The empty string, `"0"` and `"-"`
/// all denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
