//! Evacuation-shuffling computed the long way: rectify the filling together
//! with its marked square, slide the square past the rectified tableau,
//! and un-rectify. A second formulation by five shuffles of a three-term
//! chain gives an independent route; the two must always agree, and both
//! serve as the correctness reference for the local algorithm.

use crate::error::{Error, Result};
use crate::jdt::{shuffle_with_steps, Chain, SlideRecord};
use crate::partition::Cell;
use crate::punctured::{BoxPosition, PuncturedTableau};
use crate::skew::{SkewShape, SkewTableau, MARKER};

/// Evacuation-shuffling by rectification, promotion, and un-rectification,
/// using the highest weight tableau on the inner shape as rectifier.
pub fn esh_oracle(pt: &PuncturedTableau) -> Result<PuncturedTableau> {
    let rectifier = SkewTableau::highest_weight(pt.shape().inner());
    esh_oracle_with_rectifier(pt, &rectifier).map(|(out, _)| out)
}

/// As [`esh_oracle`], also counting the unit moves of the empty square
/// across all slides.
pub fn esh_oracle_steps(pt: &PuncturedTableau) -> Result<(PuncturedTableau, usize)> {
    let rectifier = SkewTableau::highest_weight(pt.shape().inner());
    esh_oracle_with_rectifier(pt, &rectifier)
}

/// Evacuation-shuffling with a caller-chosen straight-shape rectifier. The
/// result does not depend on the choice; sweeps verify this by passing
/// several.
pub fn esh_oracle_with_rectifier(
    pt: &PuncturedTableau,
    rectifier: &SkewTableau,
) -> Result<(PuncturedTableau, usize)> {
    if pt.position() != BoxPosition::First {
        return Err(Error::InvalidTableau(
            "evacuation-shuffling starts with the marked square first".into(),
        ));
    }
    if !rectifier.shape().inner().is_empty()
        || rectifier.shape().outer() != pt.shape().inner()
        || !rectifier.is_semistandard()
        || rectifier.marker_cell().is_some()
    {
        return Err(Error::InvalidTableau(format!(
            "rectifier must be a straight semistandard tableau of shape {}",
            pt.shape().inner()
        )));
    }
    let strips = pt.strips();

    // Rectify the filling with its marked square treated as the least
    // entry.
    let (rectified, recorder, steps1) = shuffle_with_steps(rectifier, pt.tableau())?;
    debug_assert!(rectified.shape().inner().is_empty());
    if rectified.marker_cell() != Some(Cell::new(1, 1)) {
        return Err(Error::Internal(
            "the marked square did not rectify to the top-left corner".into(),
        ));
    }

    // Promotion: delete the marked square, rectify what remains, and label
    // the vacated corner with one more than the largest entry.
    let rho = rectified.shape().outer().clone();
    let hole_shape = SkewShape::new(rho.clone(), crate::partition::Partition::new(vec![1])?)?;
    let holed = SkewTableau::from_cells(
        hole_shape,
        rectified
            .entries_reading()
            .filter(|&(c, _)| c != Cell::new(1, 1)),
    )?;
    let (promoted_core, rec) = promote_slide(&holed)?;
    let steps2 = rec.steps();
    let promoted = SkewTableau::from_cells(
        SkewShape::straight(rho),
        promoted_core
            .entries_reading()
            .chain(std::iter::once((rec.end, strips + 1))),
    )?;

    // Un-rectify against the recorder and put the marked square back.
    let (_, unrectified, steps3) = shuffle_with_steps(&promoted, &recorder)?;
    let box_cell = unrectified
        .entries_reading()
        .find(|&(_, v)| v == strips + 1)
        .map(|(c, _)| c)
        .ok_or_else(|| Error::Internal("promotion label lost in un-rectification".into()))?;
    let mut tableau = unrectified;
    tableau.set(box_cell, MARKER);
    if tableau.shape() != pt.shape() {
        return Err(Error::Internal(
            "evacuation-shuffling changed the total shape".into(),
        ));
    }
    let out = PuncturedTableau::new(tableau, BoxPosition::Last)?;
    Ok((out, steps1 + steps2 + steps3))
}

/// The single inward slide emptying the top-left corner of a straight
/// shape minus one square.
fn promote_slide(holed: &SkewTableau) -> Result<(SkewTableau, SlideRecord)> {
    let mut entries: std::collections::BTreeMap<Cell, usize> = holed.entries_reading().collect();
    let mut hole = Cell::new(1, 1);
    let mut path = vec![hole];
    loop {
        let below = Cell::new(hole.row + 1, hole.col);
        let right = Cell::new(hole.row, hole.col + 1);
        let chosen = match (entries.get(&below), entries.get(&right)) {
            (None, None) => break,
            (Some(_), None) => below,
            (None, Some(_)) => right,
            (Some(&b), Some(&r)) => {
                if b <= r {
                    below
                } else {
                    right
                }
            }
        };
        let v = entries.remove(&chosen).unwrap();
        entries.insert(hole, v);
        hole = chosen;
        path.push(hole);
    }
    let outer = holed.shape().outer().without_cell(hole)?;
    let out = SkewTableau::from_cells(SkewShape::straight(outer), entries)?;
    Ok((
        out,
        SlideRecord {
            start: path[0],
            end: hole,
            path,
        },
    ))
}

/// Evacuation-shuffling as five shuffles of the chain
/// (inner filling, marked square, rest): swap the first pair, the second,
/// the first, the second, the first.
pub fn esh_oracle_chain(pt: &PuncturedTableau) -> Result<PuncturedTableau> {
    if pt.position() != BoxPosition::First {
        return Err(Error::InvalidTableau(
            "evacuation-shuffling starts with the marked square first".into(),
        ));
    }
    let alpha = pt.shape().inner().clone();
    let t_alpha = SkewTableau::highest_weight(&alpha);
    let box_shape = SkewShape::new(alpha.with_cell(pt.box_cell())?, alpha.clone())?;
    let box_tab = SkewTableau::from_cells(box_shape, [(pt.box_cell(), 1)])?;
    let rest = pt.numeric_part()?;
    let mut chain = Chain::new(vec![t_alpha, box_tab, rest])?;
    for j in [0usize, 1, 0, 1, 0] {
        chain = chain.shuffled(j)?;
    }
    let [head, middle, tail] = chain.items() else {
        return Err(Error::Internal("chain length changed".into()));
    };
    if head != &SkewTableau::highest_weight(&alpha) {
        return Err(Error::Internal(
            "the straight member of the chain drifted".into(),
        ));
    }
    if tail.size() != 1 {
        return Err(Error::Internal("the marked square's tableau grew".into()));
    }
    let box_cell = tail.shape().cells_reading()[0];
    let cells = middle
        .entries_reading()
        .chain(std::iter::once((box_cell, MARKER)));
    let tableau = SkewTableau::from_cells(pt.shape().clone(), cells)?;
    PuncturedTableau::new(tableau, BoxPosition::Last)
}
