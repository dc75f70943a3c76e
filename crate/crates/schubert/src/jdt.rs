use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::skew::{SkewShape, SkewTableau};

/// The cells visited by the empty square during a single slide, start and
/// end inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideRecord {
    pub start: Cell,
    pub end: Cell,
    pub path: Vec<Cell>,
}

impl SlideRecord {
    /// Number of unit moves of the empty square.
    pub fn steps(&self) -> usize {
        self.path.len() - 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Inward,
    Outward,
}

/// Core slide loop on a cell map. Zero-length slides are allowed here;
/// the public wrappers reject them.
fn slide_map(entries: &mut BTreeMap<Cell, usize>, hole: Cell, dir: Dir) -> SlideRecord {
    let mut path = vec![hole];
    let mut hole = hole;
    loop {
        let (a, b) = match dir {
            // Candidates below and to the right; smaller moves, ties to below.
            Dir::Inward => (
                Cell::new(hole.row + 1, hole.col),
                Cell::new(hole.row, hole.col + 1),
            ),
            // Candidates above and to the left; larger moves, ties to above.
            Dir::Outward => (
                if hole.row > 1 {
                    Cell::new(hole.row - 1, hole.col)
                } else {
                    Cell::new(usize::MAX, usize::MAX)
                },
                if hole.col > 1 {
                    Cell::new(hole.row, hole.col - 1)
                } else {
                    Cell::new(usize::MAX, usize::MAX)
                },
            ),
        };
        let va = entries.get(&a).copied();
        let vb = entries.get(&b).copied();
        let chosen = match (va, vb) {
            (None, None) => break,
            (Some(_), None) => a,
            (None, Some(_)) => b,
            (Some(x), Some(y)) => match dir {
                Dir::Inward => {
                    if x <= y {
                        a
                    } else {
                        b
                    }
                }
                Dir::Outward => {
                    if x >= y {
                        a
                    } else {
                        b
                    }
                }
            },
        };
        let v = entries.remove(&chosen).unwrap();
        entries.insert(hole, v);
        hole = chosen;
        path.push(hole);
    }
    SlideRecord {
        start: path[0],
        end: hole,
        path,
    }
}

fn cell_map(t: &SkewTableau) -> BTreeMap<Cell, usize> {
    t.entries_reading().collect()
}

fn inward_slide_tolerant(t: &SkewTableau, hole: Cell) -> Result<(SkewTableau, SlideRecord)> {
    if !t.shape().inner_cocorners().contains(&hole) {
        return Err(Error::InvalidHole(format!(
            "{hole} is not an inner co-corner of {:?}",
            t.shape()
        )));
    }
    let mut map = cell_map(t);
    let rec = slide_map(&mut map, hole, Dir::Inward);
    let inner = t.shape().inner().without_cell(hole)?;
    let outer = t
        .shape()
        .outer()
        .without_cell(rec.end)
        .map_err(|e| Error::Internal(format!("inward slide ended badly: {e}")))?;
    let out = SkewTableau::from_cells(SkewShape::new(outer, inner)?, map)?;
    Ok((out, rec))
}

fn outward_slide_tolerant(t: &SkewTableau, hole: Cell) -> Result<(SkewTableau, SlideRecord)> {
    if !t.shape().outer_cocorners().contains(&hole) {
        return Err(Error::InvalidHole(format!(
            "{hole} is not an outer co-corner of {:?}",
            t.shape()
        )));
    }
    let mut map = cell_map(t);
    let rec = slide_map(&mut map, hole, Dir::Outward);
    let outer = t.shape().outer().with_cell(hole)?;
    let inner = t
        .shape()
        .inner()
        .with_cell(rec.end)
        .map_err(|e| Error::Internal(format!("outward slide ended badly: {e}")))?;
    let out = SkewTableau::from_cells(SkewShape::new(outer, inner)?, map)?;
    Ok((out, rec))
}

/// One inward slide starting from an inner co-corner of the shape. The hole
/// must have a movable entry below or to the right.
pub fn inward_slide(t: &SkewTableau, hole: Cell) -> Result<(SkewTableau, SlideRecord)> {
    let (out, rec) = inward_slide_tolerant(t, hole)?;
    if rec.steps() == 0 {
        return Err(Error::InvalidHole(format!(
            "{hole} has nothing to slide inward"
        )));
    }
    Ok((out, rec))
}

/// One outward slide starting from an outer co-corner of the shape. The
/// hole must have a movable entry above or to the left.
pub fn outward_slide(t: &SkewTableau, hole: Cell) -> Result<(SkewTableau, SlideRecord)> {
    let (out, rec) = outward_slide_tolerant(t, hole)?;
    if rec.steps() == 0 {
        return Err(Error::InvalidHole(format!(
            "{hole} has nothing to slide outward"
        )));
    }
    Ok((out, rec))
}

/// Rectification by inward slides. Any slide order gives the same result;
/// this uses the topmost inner co-corner at every step.
pub fn rectify(t: &SkewTableau) -> SkewTableau {
    rectify_with(t, |_| 0).0
}

/// Rectify, choosing among the available inner co-corners with `pick`
/// (an index into the corner list). Exposed so tests can sweep slide orders.
pub fn rectify_with<F>(t: &SkewTableau, mut pick: F) -> (SkewTableau, Vec<SlideRecord>)
where
    F: FnMut(&[Cell]) -> usize,
{
    let mut cur = t.clone();
    let mut records = Vec::new();
    loop {
        let holes = cur.shape().inner_cocorners();
        if holes.is_empty() {
            return (cur, records);
        }
        let hole = holes[pick(&holes).min(holes.len() - 1)];
        let (next, rec) =
            inward_slide_tolerant(&cur, hole).expect("inner co-corner accepted by slide");
        cur = next;
        records.push(rec);
    }
}

/// Jeu de taquin shuffle of the pair `(s, t)`, where the shape of `t`
/// extends that of `s`. Returns `(t', s')`: `s'` is obtained by sliding `s`
/// outward in the order given by the standardization of `t`, and `t'`
/// records the squares vacated on the inner edge.
pub fn shuffle(s: &SkewTableau, t: &SkewTableau) -> Result<(SkewTableau, SkewTableau)> {
    let (a, b, _) = shuffle_with_steps(s, t)?;
    Ok((a, b))
}

/// As [`shuffle`], also reporting the total number of unit moves performed
/// by the empty square.
pub fn shuffle_with_steps(
    s: &SkewTableau,
    t: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau, usize)> {
    if t.shape().inner() != s.shape().outer() {
        return Err(Error::InvalidShape(format!(
            "shape {:?} does not extend {:?}",
            t.shape(),
            s.shape()
        )));
    }
    // Standardization order: by entry, ties left-to-right in reading order.
    let mut order: Vec<(usize, usize, Cell)> = t
        .entries_reading()
        .enumerate()
        .map(|(pos, (cell, v))| (v, pos, cell))
        .collect();
    order.sort();

    let mut cur = s.clone();
    let mut vacated = Vec::with_capacity(order.len());
    let mut steps = 0;
    for &(entry, _, cell) in &order {
        let (next, rec) = outward_slide_tolerant(&cur, cell)?;
        steps += rec.steps();
        vacated.push((rec.end, entry));
        cur = next;
    }
    debug_assert_eq!(cur.shape().outer(), t.shape().outer());
    let t_shape = SkewShape::new(cur.shape().inner().clone(), s.shape().inner().clone())?;
    let t_new = SkewTableau::from_cells(t_shape, vacated)?;
    Ok((t_new, cur, steps))
}

/// A chain of tableaux in which each shape extends the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    items: Vec<SkewTableau>,
}

impl Chain {
    pub fn new(items: Vec<SkewTableau>) -> Result<Self> {
        for w in items.windows(2) {
            if w[1].shape().inner() != w[0].shape().outer() {
                return Err(Error::InvalidShape(format!(
                    "chain break: {:?} does not extend {:?}",
                    w[1].shape(),
                    w[0].shape()
                )));
            }
        }
        Ok(Chain { items })
    }

    pub fn items(&self) -> &[SkewTableau] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Every member is ballot semistandard.
    pub fn is_lr(&self) -> bool {
        self.items
            .iter()
            .all(|t| t.is_semistandard() && t.is_ballot() && t.marker_cell().is_none())
    }

    /// Shuffle the adjacent pair at positions `j` and `j+1` (0-indexed).
    pub fn shuffled(&self, j: usize) -> Result<Chain> {
        if j + 1 >= self.items.len() {
            return Err(Error::InvalidArgument(format!(
                "no pair at position {j} in a chain of {}",
                self.items.len()
            )));
        }
        let (t_new, s_new) = shuffle(&self.items[j], &self.items[j + 1])?;
        let mut items = self.items.clone();
        items[j] = t_new;
        items[j + 1] = s_new;
        Chain::new(items)
    }
}

/// The ballot semistandard tableau whose standardization is the
/// highest-weight representative of the dual equivalence class of a
/// standard skew tableau.
pub fn highest_weight_representative(u: &SkewTableau) -> Result<SkewTableau> {
    if !u.is_standard() {
        return Err(Error::InvalidTableau(
            "highest-weight representative wants a standard tableau".into(),
        ));
    }
    let rectifier = SkewTableau::highest_weight(u.shape().inner());
    let (u_rect, rec) = shuffle(&rectifier, u)?;
    let rho = u_rect.shape().outer().clone();
    let w = SkewTableau::highest_weight(&rho).standardize()?;
    let (_, w_skew) = shuffle(&w, &rec)?;
    w_skew.destandardize(&rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::skew::MARKER;

    fn tab(text: &str) -> SkewTableau {
        SkewTableau::parse_text(text).unwrap()
    }

    #[test]
    fn displayed_inward_slide() {
        let t = tab(".13\n23");
        let (out, rec) = inward_slide(&t, Cell::new(1, 1)).unwrap();
        assert_eq!(out, tab("133\n2"));
        assert_eq!(rec.start, Cell::new(1, 1));
        assert_eq!(rec.end, Cell::new(2, 2));
        assert_eq!(
            rec.path,
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 2)]
        );
    }

    #[test]
    fn forced_slide_with_tie() {
        let t = tab(".1\n12");
        let (out, _) = inward_slide(&t, Cell::new(1, 1)).unwrap();
        assert_eq!(out, tab("11\n2"));
    }

    #[test]
    fn invalid_holes_rejected() {
        let t = tab("12\n3");
        assert!(inward_slide(&t, Cell::new(1, 1)).is_err());
        assert!(inward_slide(&t, Cell::new(5, 5)).is_err());
        // (3,1) is an outer co-corner but has nothing above or left to move
        // besides the column above it; (1,3) does have a left neighbour.
        assert!(outward_slide(&t, Cell::new(2, 2)).is_ok());
    }

    #[test]
    fn outward_inverts_inward() {
        let t = tab(".13\n23");
        let (slid, rec) = inward_slide(&t, Cell::new(1, 1)).unwrap();
        let (back, rec2) = outward_slide(&slid, rec.end).unwrap();
        assert_eq!(back, t);
        assert_eq!(rec2.end, rec.start);
    }

    #[test]
    fn rectify_examples() {
        assert_eq!(rectify(&tab(".13\n23")), tab("133\n2"));
        let straight = tab("122\n23");
        assert_eq!(rectify(&straight), straight);
    }

    #[test]
    fn rectify_ballot_gives_highest_weight() {
        let t = tab("..11\n.12\n12");
        assert!(t.is_ballot());
        let r = rectify(&t);
        let content = Partition::new(t.content()).unwrap();
        assert_eq!(r, SkewTableau::highest_weight(&content));
    }

    #[test]
    fn shuffle_involution_small() {
        let s = tab("11");
        let t = tab("..1\n1");
        let (t2, s2) = shuffle(&s, &t).unwrap();
        let (s3, t3) = shuffle(&t2, &s2).unwrap();
        assert_eq!(s3, s);
        assert_eq!(t3, t);
    }

    #[test]
    fn shuffle_with_empty_sides() {
        let empty_inner = SkewTableau::empty();
        let s_shape_empty = SkewTableau::new(
            SkewShape::new(
                Partition::new(vec![1]).unwrap(),
                Partition::new(vec![1]).unwrap(),
            )
            .unwrap(),
            vec![vec![]],
        )
        .unwrap();
        // T empty: nothing moves.
        let (t2, s2) = shuffle(&tab("1"), &s_shape_empty).unwrap();
        assert_eq!(t2.size(), 0);
        assert_eq!(s2, tab("1"));
        // S empty straight shape: T stays put.
        let (t3, s3) = shuffle(&empty_inner, &tab("1\n2")).unwrap();
        assert_eq!(t3, tab("1\n2"));
        assert_eq!(s3.size(), 0);
    }

    #[test]
    fn shuffle_moves_marker_first() {
        // The marker entry (0) standardizes below everything, so it is the
        // first square processed when it sits in the outer tableau.
        let s = tab("1");
        let mut t = tab(".1\n1");
        t.set(Cell::new(2, 1), MARKER);
        let (t2, _) = shuffle(&s, &t).unwrap();
        assert_eq!(t2.marker_cell(), Some(Cell::new(1, 1)));
    }

    #[test]
    fn chain_shuffle_preserves_membership() {
        let a = tab("1");
        let b = tab(".1\n1");
        let chain = Chain::new(vec![a, b]).unwrap();
        assert!(chain.is_lr());
        let shuffled = chain.shuffled(0).unwrap();
        let back = shuffled.shuffled(0).unwrap();
        assert_eq!(back, chain);
    }

    #[test]
    fn hw_representative_of_straight_standard() {
        // Any straight-shape standard tableau has the unique straight-shape
        // ballot tableau as its highest-weight representative.
        let u = tab("13\n2").standardize().unwrap();
        let rep = highest_weight_representative(&u).unwrap();
        let rho = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(rep, SkewTableau::highest_weight(&rho));
    }
}
