//! The local algorithm: moving the marked square through a ballot filling
//! without rectifying. Phase 1 walks the square down-and-left past one strip
//! per step; Phase 2 walks it right-and-up along suffix ties. The
//! step-by-step expansion of Phase 2 records one move per square visited.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::punctured::{BoxPosition, PuncturedTableau};
use crate::skew::{SkewShape, SkewTableau, MARKER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// Phase 1, strictly down.
    Vert,
    /// Phase 1, down-and-left.
    Pieri,
    /// Phase 2 in default mode; `from == to` when the suffix was already
    /// tied and the square did not move.
    Jump,
    /// Phase 2 step-by-step, strictly right.
    Horiz,
    /// Phase 2 step-by-step, up-and-right.
    CPieri,
}

/// One movement of the marked square. `index` is the strip number for
/// `Vert`/`Pieri`/`Jump` and the position along the path for
/// `Horiz`/`CPieri`; `strip` is always the strip being crossed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub index: usize,
    pub strip: usize,
    pub from: Cell,
    pub to: Cell,
}

impl Move {
    pub fn is_movement(&self) -> bool {
        self.from != self.to
    }

    /// Did the square move to a non-adjacent cell?
    pub fn is_gap(&self) -> bool {
        self.is_movement() && !self.from.is_adjacent(self.to)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}_{} {} -> {}",
            self.kind, self.index, self.from, self.to
        )
    }
}

/// The squares occupied by the marked square during the step-by-step
/// algorithm, with the moves between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvacuShufflePath {
    /// Visited cells, initial first, final last. Zero-length jumps add no
    /// cells.
    pub cells: Vec<Cell>,
    /// Step-by-step moves: `Vert`/`Pieri` in Phase 1, `Horiz`/`CPieri` in
    /// Phase 2, plus zero-length `Jump` markers.
    pub moves: Vec<Move>,
    /// The strip index at which the algorithm switched to Phase 2
    /// (`t + 1` when it never did).
    pub transition_step: usize,
}

impl EvacuShufflePath {
    /// Number of actual movements.
    pub fn move_count(&self) -> usize {
        self.moves.iter().filter(|m| m.is_movement()).count()
    }

    /// The default-mode view: Phase 2 runs collapse into one `Jump` per
    /// strip.
    pub fn default_moves(&self) -> Vec<Move> {
        let mut out: Vec<Move> = Vec::new();
        for mv in &self.moves {
            match mv.kind {
                MoveKind::Vert | MoveKind::Pieri | MoveKind::Jump => out.push(*mv),
                MoveKind::Horiz | MoveKind::CPieri => {
                    if let Some(last) = out.last_mut() {
                        if last.kind == MoveKind::Jump
                            && last.strip == mv.strip
                            && last.is_movement()
                        {
                            last.to = mv.to;
                            continue;
                        }
                    }
                    out.push(Move {
                        kind: MoveKind::Jump,
                        index: mv.strip,
                        strip: mv.strip,
                        from: mv.from,
                        to: mv.to,
                    });
                }
            }
        }
        out
    }

    /// A path is connected when consecutive cells share an edge.
    pub fn is_connected(&self) -> bool {
        self.cells.windows(2).all(|w| w[0].is_adjacent(w[1]))
    }

    /// Cells visited during Phase 1 (a vertical strip).
    pub fn phase1_cells(&self) -> Vec<Cell> {
        let n = self
            .moves
            .iter()
            .filter(|m| matches!(m.kind, MoveKind::Vert | MoveKind::Pieri))
            .count();
        self.cells[..=n.min(self.cells.len() - 1)].to_vec()
    }
}

/// Flat working state: the shape never changes while the square moves, so
/// the reading order is computed once. `after` maintains entry counts
/// strictly after the marked square, updated as it moves.
struct Engine {
    shape: SkewShape,
    cells: Vec<Cell>,
    entries: Vec<usize>,
    box_pos: usize,
    after: Vec<usize>,
    t: usize,
}

impl Engine {
    fn from_pt(pt: &PuncturedTableau) -> Engine {
        let shape = pt.shape().clone();
        let cells = shape.cells_reading();
        let entries: Vec<usize> = cells
            .iter()
            .map(|&c| pt.tableau().entry(c).unwrap())
            .collect();
        let box_pos = entries.iter().position(|&v| v == MARKER).unwrap();
        let t = pt.strips();
        let mut after = vec![0usize; t + 2];
        for &v in &entries[box_pos + 1..] {
            after[v] += 1;
        }
        Engine {
            shape,
            cells,
            entries,
            box_pos,
            after,
            t,
        }
    }

    fn cell(&self, pos: usize) -> Cell {
        self.cells[pos]
    }

    fn after_cnt(&self, v: usize) -> usize {
        if v == 0 || v > self.t + 1 {
            0
        } else {
            self.after[v]
        }
    }

    /// Is the suffix strictly after the marked square tied for `(i, i+1)`?
    fn tied_after_box(&self, i: usize) -> bool {
        self.after_cnt(i) == self.after_cnt(i + 1)
    }

    /// Swap the marked square with the entry at `q`, keeping `after` in
    /// sync.
    fn swap_with(&mut self, q: usize) {
        let p = self.box_pos;
        if q > p {
            for j in p + 1..=q {
                self.after[self.entries[j]] -= 1;
            }
        } else {
            for j in q..p {
                self.after[self.entries[j]] += 1;
            }
        }
        self.entries.swap(p, q);
        self.box_pos = q;
        #[cfg(debug_assertions)]
        self.recount_check();
    }

    #[cfg(debug_assertions)]
    fn recount_check(&self) {
        // Naive recount validating the incremental bookkeeping.
        let mut counts = vec![0usize; self.t + 2];
        for &v in &self.entries[self.box_pos + 1..] {
            counts[v] += 1;
        }
        assert_eq!(counts, self.after, "incremental suffix counts drifted");
    }

    fn exists_prior(&self, v: usize) -> bool {
        self.entries[..self.box_pos].contains(&v)
    }

    fn nearest_prior(&self, v: usize) -> Option<usize> {
        (0..self.box_pos).rev().find(|&j| self.entries[j] == v)
    }

    fn nearest_after(&self, v: usize) -> Option<usize> {
        (self.box_pos + 1..self.entries.len()).find(|&j| self.entries[j] == v)
    }

    /// The nearest `i` after the marked square whose own suffix is tied for
    /// `(i, i+1)`.
    fn nearest_after_tied(&self, i: usize) -> Option<usize> {
        let mut cnt_i = self.after_cnt(i);
        let mut cnt_i1 = self.after_cnt(i + 1);
        for j in self.box_pos + 1..self.entries.len() {
            let v = self.entries[j];
            if v == i {
                cnt_i -= 1;
                if cnt_i == cnt_i1 {
                    return Some(j);
                }
            } else if v == i + 1 {
                cnt_i1 -= 1;
            }
        }
        None
    }

    fn to_tableau(&self) -> SkewTableau {
        SkewTableau::from_cells(
            self.shape.clone(),
            self.cells.iter().copied().zip(self.entries.iter().copied()),
        )
        .expect("engine state is a valid filling")
    }

    fn to_pt(&self, position: BoxPosition) -> Result<PuncturedTableau> {
        PuncturedTableau::new(self.to_tableau(), position)
    }
}

/// Observer invoked after every recorded move with the move, the filling
/// after it, and the marked square's cell after it.
pub type StepObserver<'a> = dyn FnMut(&Move, &SkewTableau, Cell) + 'a;

fn phase1_kind(from: Cell, to: Cell) -> Result<MoveKind> {
    if to.row > from.row && to.col == from.col {
        Ok(MoveKind::Vert)
    } else if to.row > from.row && to.col < from.col {
        Ok(MoveKind::Pieri)
    } else {
        Err(Error::Internal(format!(
            "phase 1 move {from} -> {to} is not down or down-and-left"
        )))
    }
}

fn phase2_kind(from: Cell, to: Cell) -> Result<MoveKind> {
    if to.row == from.row && to.col > from.col {
        Ok(MoveKind::Horiz)
    } else if to.row < from.row && to.col > from.col {
        Ok(MoveKind::CPieri)
    } else {
        Err(Error::Internal(format!(
            "phase 2 move {from} -> {to} is not right or up-and-right"
        )))
    }
}

fn run_step_by_step(eng: &mut Engine, obs: &mut StepObserver<'_>) -> Result<EvacuShufflePath> {
    let t = eng.t;
    let mut moves: Vec<Move> = Vec::new();
    let mut cells = vec![eng.cell(eng.box_pos)];
    let mut movement = 0usize;

    // Phase 1: switch with the nearest i prior in reading order.
    let mut i = 1;
    while i <= t {
        let Some(q) = eng.nearest_prior(i) else { break };
        let from = eng.cell(eng.box_pos);
        let to = eng.cell(q);
        let kind = phase1_kind(from, to)?;
        eng.swap_with(q);
        movement += 1;
        let mv = Move {
            kind,
            index: i,
            strip: i,
            from,
            to,
        };
        cells.push(to);
        obs(&mv, &eng.to_tableau(), to);
        moves.push(mv);
        i += 1;
    }
    let transition_step = i;

    // Phase 2, step by step: switch with the nearest i after, until the
    // suffix from the marked square is tied for (i, i+1).
    for i in transition_step..=t {
        let mut moved = false;
        let mut guard = eng.entries.len() + 1;
        while !eng.tied_after_box(i) {
            guard = guard
                .checked_sub(1)
                .ok_or_else(|| Error::Internal("phase 2 failed to reach a tied suffix".into()))?;
            let q = eng.nearest_after(i).ok_or_else(|| {
                Error::Internal(format!(
                    "suffix untied for ({i},{}) with no {i} ahead",
                    i + 1
                ))
            })?;
            let from = eng.cell(eng.box_pos);
            let to = eng.cell(q);
            let kind = phase2_kind(from, to)?;
            eng.swap_with(q);
            movement += 1;
            let mv = Move {
                kind,
                index: movement,
                strip: i,
                from,
                to,
            };
            cells.push(to);
            obs(&mv, &eng.to_tableau(), to);
            moves.push(mv);
            moved = true;
        }
        if !moved {
            let here = eng.cell(eng.box_pos);
            let mv = Move {
                kind: MoveKind::Jump,
                index: i,
                strip: i,
                from: here,
                to: here,
            };
            obs(&mv, &eng.to_tableau(), here);
            moves.push(mv);
        }
    }

    Ok(EvacuShufflePath {
        cells,
        moves,
        transition_step,
    })
}

/// Local evacuation shuffling: the forward algorithm, from first to last
/// position, with the step-by-step path of the marked square.
pub fn local_esh(pt: &PuncturedTableau) -> Result<(PuncturedTableau, EvacuShufflePath)> {
    local_esh_with(pt, &mut |_, _, _| {})
}

/// As [`local_esh`], reporting every step to `obs`.
pub fn local_esh_with(
    pt: &PuncturedTableau,
    obs: &mut StepObserver<'_>,
) -> Result<(PuncturedTableau, EvacuShufflePath)> {
    if pt.position() != BoxPosition::First {
        return Err(Error::InvalidTableau(
            "local_esh expects the marked square in first position".into(),
        ));
    }
    let mut eng = Engine::from_pt(pt);
    let path = run_step_by_step(&mut eng, obs)?;
    let out = eng.to_pt(BoxPosition::Last)?;
    debug_assert!({
        let beta = pt.content();
        let s = path.transition_step;
        s > beta.len() || path.cells.len() == s + beta.part(s)
    });
    Ok((out, path))
}

/// The default (not step-by-step) mode: Phase 2 moves the marked square in
/// one jump per strip. Returns the result and the transition step.
pub fn local_esh_default(pt: &PuncturedTableau) -> Result<(PuncturedTableau, usize, Vec<Move>)> {
    if pt.position() != BoxPosition::First {
        return Err(Error::InvalidTableau(
            "local_esh expects the marked square in first position".into(),
        ));
    }
    let mut eng = Engine::from_pt(pt);
    let t = eng.t;
    let mut moves = Vec::new();
    let mut i = 1;
    while i <= t {
        let Some(q) = eng.nearest_prior(i) else { break };
        let from = eng.cell(eng.box_pos);
        let to = eng.cell(q);
        let kind = phase1_kind(from, to)?;
        eng.swap_with(q);
        moves.push(Move {
            kind,
            index: i,
            strip: i,
            from,
            to,
        });
        i += 1;
    }
    let transition_step = i;
    for i in transition_step..=t {
        let from = eng.cell(eng.box_pos);
        let to = if eng.tied_after_box(i) {
            from
        } else {
            let q = eng.nearest_after_tied(i).ok_or_else(|| {
                Error::Internal(format!("no tied {i} ahead of the marked square"))
            })?;
            let to = eng.cell(q);
            eng.swap_with(q);
            to
        };
        moves.push(Move {
            kind: MoveKind::Jump,
            index: i,
            strip: i,
            from,
            to,
        });
    }
    let out = eng.to_pt(BoxPosition::Last)?;
    Ok((out, transition_step, moves))
}

/// The transition step of the forward algorithm on `pt`, without keeping
/// the result.
pub fn transition_step(pt: &PuncturedTableau) -> Result<usize> {
    local_esh_default(pt).map(|(_, s, _)| s)
}

/// Reverse local evacuation shuffling, from last to first position. The
/// inverse of [`local_esh`]; its path visits the forward path backwards.
pub fn local_esh_reverse(pt: &PuncturedTableau) -> Result<(PuncturedTableau, EvacuShufflePath)> {
    if pt.position() != BoxPosition::Last {
        return Err(Error::InvalidTableau(
            "local_esh_reverse expects the marked square in last position".into(),
        ));
    }
    let mut eng = Engine::from_pt(pt);
    let t = eng.t;
    let mut moves: Vec<Move> = Vec::new();
    let mut cells = vec![eng.cell(eng.box_pos)];
    let mut movement = 0usize;

    // Reverse Phase 2. At index i the state matches the forward algorithm
    // just after its i-th step, so the suffix from the marked square is
    // tied for (i, i+1) exactly while jumps remain to be undone.
    let mut i = t;
    while i >= 1 {
        if eng.after_cnt(i) > eng.after_cnt(i + 1) {
            break;
        }
        // Decide where the forward jump came from. A forward jump leaves an
        // i behind the square; if the square precedes every i, or (for
        // i >= 2, where ballotness bites) its own (i-1, i) suffix is tied,
        // the forward jump was zero-length.
        let zero_length =
            !eng.exists_prior(i) || (i >= 2 && eng.after_cnt(i - 1) == eng.after_cnt(i));
        let target = if zero_length {
            None
        } else {
            let mut cnt_im1 = eng.after_cnt(i.wrapping_sub(1));
            let mut cnt_i = eng.after_cnt(i);
            let mut found = None;
            for p in (0..eng.box_pos).rev() {
                let v = eng.entries[p];
                if v == i {
                    cnt_i += 1;
                    if cnt_im1 == cnt_i {
                        found = Some(p);
                        break;
                    }
                } else if i >= 2 && v == i - 1 {
                    cnt_im1 += 1;
                }
            }
            Some(found.unwrap_or_else(|| {
                eng.entries
                    .iter()
                    .position(|&v| v == i)
                    .expect("prior i exists")
            }))
        };
        match target {
            None => {
                let here = eng.cell(eng.box_pos);
                moves.push(Move {
                    kind: MoveKind::Jump,
                    index: i,
                    strip: i,
                    from: here,
                    to: here,
                });
            }
            Some(q) => {
                // Walk back one i at a time, mirroring the step-by-step
                // expansion of the forward jump.
                while eng.box_pos != q {
                    let p = eng
                        .nearest_prior(i)
                        .ok_or_else(|| Error::Internal("reverse jump lost its target".into()))?;
                    debug_assert!(p >= q);
                    let from = eng.cell(eng.box_pos);
                    let to = eng.cell(p);
                    let kind = if to.row == from.row {
                        MoveKind::Horiz
                    } else {
                        MoveKind::CPieri
                    };
                    eng.swap_with(p);
                    movement += 1;
                    moves.push(Move {
                        kind,
                        index: movement,
                        strip: i,
                        from,
                        to,
                    });
                    cells.push(to);
                }
            }
        }
        i -= 1;
    }
    let transition_step = i + 1;

    // Reverse Phase 1: switch with the nearest i after the marked square.
    for j in (1..=i).rev() {
        let q = eng.nearest_after(j).ok_or_else(|| {
            Error::Internal(format!("reverse phase 1 found no {j} after the square"))
        })?;
        let from = eng.cell(eng.box_pos);
        let to = eng.cell(q);
        let kind = if to.col == from.col {
            MoveKind::Vert
        } else {
            MoveKind::Pieri
        };
        if to.row >= from.row {
            return Err(Error::Internal(format!(
                "reverse phase 1 move {from} -> {to} is not upward"
            )));
        }
        eng.swap_with(q);
        moves.push(Move {
            kind,
            index: j,
            strip: j,
            from,
            to,
        });
        cells.push(to);
    }

    let out = eng.to_pt(BoxPosition::First)?;
    Ok((
        out,
        EvacuShufflePath {
            cells,
            moves,
            transition_step,
        },
    ))
}

/// Rebuild the filling after each move of a recorded path, for traces that
/// show every intermediate state.
pub fn replay(start: &SkewTableau, moves: &[Move]) -> Vec<(Move, SkewTableau)> {
    let mut t = start.clone();
    let mut out = Vec::with_capacity(moves.len());
    for mv in moves {
        if mv.is_movement() {
            let v = t.entry(mv.to).expect("move stays in shape");
            t.set(mv.from, v);
            t.set(mv.to, MARKER);
        }
        out.push((*mv, t.clone()));
    }
    out
}

/// The splitting of a ballot filling into leading horizontal strips and
/// trailing vertical strips. `horizontals[i]` holds the squares with entry
/// `i+1`; `verticals[j]` is the strip `V_{s+j}`, where `V_{t+1-k}` collects
/// the `k`-th-from-last instance of every entry from `s` up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDecomposition {
    pub horizontals: Vec<Vec<Cell>>,
    pub verticals: Vec<Vec<Cell>>,
    pub s: usize,
    pub t: usize,
}

impl SDecomposition {
    /// Cumulative outer partitions: inner shape, then after each strip in
    /// order. Computed during validation.
    pub fn strip_shapes(&self, inner: &Partition) -> Result<Vec<Partition>> {
        let mut shapes = vec![inner.clone()];
        let mut cur = inner.clone();
        for strip in self.horizontals.iter().chain(self.verticals.iter()) {
            let mut parts: Vec<usize> = (1..=cur
                .len()
                .max(strip.iter().map(|c| c.row).max().unwrap_or(0)))
                .map(|r| cur.part(r))
                .collect();
            for c in strip {
                if c.col != parts[c.row - 1] + 1 {
                    return Err(Error::Internal(format!(
                        "strip cell {c} does not extend the shape"
                    )));
                }
                parts[c.row - 1] += 1;
            }
            cur = Partition::new(parts)
                .map_err(|e| Error::Internal(format!("strip does not extend: {e}")))?;
            shapes.push(cur.clone());
        }
        Ok(shapes)
    }
}

/// Split a ballot filling at `s`: entries below `s` stay as horizontal
/// strips, the rest splits into `beta_s` vertical strips by
/// position-from-last.
pub fn s_decomposition(t: &SkewTableau, s: usize) -> Result<SDecomposition> {
    if t.marker_cell().is_some() {
        return Err(Error::InvalidTableau(
            "decomposition wants no marked square".into(),
        ));
    }
    if !t.is_semistandard() || !t.is_ballot() {
        return Err(Error::InvalidTableau(
            "decomposition wants a ballot semistandard filling".into(),
        ));
    }
    let beta = Partition::new(t.content())
        .map_err(|_| Error::InvalidTableau("content is not a partition".into()))?;
    let ell = beta.len();
    if s < 1 || s > ell + 1 {
        return Err(Error::InvalidArgument(format!(
            "s must lie in 1..={}, got {s}",
            ell + 1
        )));
    }
    let t_top = if s <= ell { beta.part(s) + s - 1 } else { ell };

    let mut horizontals = vec![Vec::new(); s - 1];
    let mut verticals = vec![Vec::new(); t_top + 1 - s];
    // Positions of each value in reading order.
    let mut positions: Vec<Vec<Cell>> = vec![Vec::new(); ell + 1];
    for (cell, v) in t.entries_reading() {
        positions[v].push(cell);
    }
    for v in 1..=ell {
        if v < s {
            horizontals[v - 1] = positions[v].clone();
        } else {
            let k = positions[v].len();
            for (m, &cell) in positions[v].iter().enumerate() {
                // This instance is the (k - m)-th from the last.
                let from_last = k - m;
                let strip = t_top + 1 - from_last;
                debug_assert!(strip >= s, "ballotness bounds the strip index");
                verticals[strip - s].push(cell);
            }
        }
    }
    // Order vertical strips by reading order of their cells.
    for v in &mut verticals {
        v.sort_by_key(|c| (usize::MAX - c.row, c.col));
    }

    let dec = SDecomposition {
        horizontals,
        verticals,
        s,
        t: t_top,
    };
    // Validate the nesting; also checks each strip is a strip.
    dec.strip_shapes(t.shape().inner())?;
    for (k, strip) in dec.verticals.iter().enumerate() {
        let mut rows: Vec<usize> = strip.iter().map(|c| c.row).collect();
        rows.dedup();
        if rows.len() != strip.len() {
            return Err(Error::Internal(format!(
                "vertical strip {} repeats a row",
                k + dec.s
            )));
        }
    }
    for (k, strip) in dec.horizontals.iter().enumerate() {
        let mut cols: Vec<usize> = strip.iter().map(|c| c.col).collect();
        cols.sort_unstable();
        cols.dedup();
        if cols.len() != strip.len() {
            return Err(Error::Internal(format!(
                "horizontal strip {} repeats a column",
                k + 1
            )));
        }
    }
    Ok(dec)
}

/// One step of the local algorithm as a map between position classes: the
/// phase is decided from the filling alone. A Phase 1 move applies exactly
/// when the suffix from the marked square is untied for `(i-1, i)` (taken
/// as untied when `i = 1`) and some `i` precedes the square.
pub fn step_ell(i: usize, x: &PuncturedTableau) -> Result<(PuncturedTableau, Move)> {
    let t = x.strips();
    if i < 1 || i > t {
        return Err(Error::InvalidArgument(format!(
            "step index {i} out of 1..={t}"
        )));
    }
    if x.class_index() != i {
        return Err(Error::InvalidTableau(format!(
            "step_ell({i}) expects the marked square between strips {} and {i}",
            i - 1
        )));
    }
    let mut eng = Engine::from_pt(x);
    let phase1 = (i == 1 || eng.after_cnt(i - 1) != eng.after_cnt(i)) && eng.exists_prior(i);
    let from = eng.cell(eng.box_pos);
    let mv = if phase1 {
        let q = eng.nearest_prior(i).expect("checked exists_prior");
        let to = eng.cell(q);
        let kind = phase1_kind(from, to)?;
        eng.swap_with(q);
        Move {
            kind,
            index: i,
            strip: i,
            from,
            to,
        }
    } else {
        let to = if eng.tied_after_box(i) {
            from
        } else {
            let q = eng.nearest_after_tied(i).ok_or_else(|| {
                Error::Internal(format!("no tied {i} ahead of the marked square"))
            })?;
            let to = eng.cell(q);
            eng.swap_with(q);
            to
        };
        Move {
            kind: MoveKind::Jump,
            index: i,
            strip: i,
            from,
            to,
        }
    };
    let out = eng.to_pt(BoxPosition::Between(i + 1))?;
    Ok((out, mv))
}

fn slide_through_strip(x: &PuncturedTableau, i: usize, backward: bool) -> Result<PuncturedTableau> {
    let mut t = x.tableau().clone();
    let shape = t.shape().clone();
    let mut hole = x.box_cell();
    loop {
        let (a, b) = if backward {
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
        let pick = |c: Option<Cell>| {
            c.filter(|&c| shape.contains(c))
                .filter(|&c| t.entry(c) == Some(i))
        };
        // Ties go to the vertical neighbour; the horizontal choice would
        // stack two equal entries in a column.
        let chosen = pick(a).or_else(|| pick(b));
        let Some(c) = chosen else { break };
        t.set(hole, i);
        t.set(c, MARKER);
        hole = c;
    }
    let class = if backward { i } else { i + 1 };
    PuncturedTableau::new(t, BoxPosition::Between(class))
}

/// The jeu de taquin slide of the marked square backwards past the strip of
/// `i`s only.
pub fn step_sh(i: usize, x: &PuncturedTableau) -> Result<PuncturedTableau> {
    let t = x.strips();
    if i < 1 || i > t {
        return Err(Error::InvalidArgument(format!(
            "step index {i} out of 1..={t}"
        )));
    }
    if x.class_index() != i + 1 {
        return Err(Error::InvalidTableau(format!(
            "step_sh({i}) expects the marked square between strips {i} and {}",
            i + 1
        )));
    }
    slide_through_strip(x, i, true)
}

/// Inverse of [`step_sh`]: slide the marked square forwards past the strip
/// of `i`s.
pub fn step_sh_inverse(i: usize, x: &PuncturedTableau) -> Result<PuncturedTableau> {
    let t = x.strips();
    if i < 1 || i > t {
        return Err(Error::InvalidArgument(format!(
            "step index {i} out of 1..={t}"
        )));
    }
    if x.class_index() != i {
        return Err(Error::InvalidTableau(format!(
            "step_sh_inverse({i}) expects the marked square between strips {} and {i}",
            i - 1
        )));
    }
    slide_through_strip(x, i, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt;

    fn first(text: &str) -> PuncturedTableau {
        PuncturedTableau::parse_text(text, false).unwrap()
    }

    fn last(text: &str) -> PuncturedTableau {
        PuncturedTableau::parse_text(text, true).unwrap()
    }

    const WORKED_IN: &str = "......111\n...X1122\n...1223\n...334\n..44\n235";
    const WORKED_OUT: &str = "......111\n...11122\n...2223\n...33X\n..44\n345";

    #[test]
    fn worked_example_result_and_path() {
        let pt = first(WORKED_IN);
        assert_eq!(pt.content(), Partition::new(vec![6, 5, 4, 3, 1]).unwrap());
        let (out, path) = local_esh(&pt).unwrap();
        assert_eq!(out.tableau().to_text(), WORKED_OUT);
        assert_eq!(path.transition_step, 3);
        // s + beta_s = 3 + 4 squares, both endpoints included.
        assert_eq!(path.cells.len(), 7);
        let kinds: Vec<(MoveKind, usize)> = path
            .moves
            .iter()
            .filter(|m| m.is_movement())
            .map(|m| (m.kind, m.index))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (MoveKind::Vert, 1),
                (MoveKind::Pieri, 2),
                (MoveKind::Horiz, 3),
                (MoveKind::CPieri, 4),
                (MoveKind::Horiz, 5),
                (MoveKind::CPieri, 6),
            ]
        );
        let defaults: Vec<(MoveKind, usize, bool)> = path
            .default_moves()
            .iter()
            .map(|m| (m.kind, m.index, m.is_movement()))
            .collect();
        assert_eq!(
            defaults,
            vec![
                (MoveKind::Vert, 1, true),
                (MoveKind::Pieri, 2, true),
                (MoveKind::Jump, 3, true),
                (MoveKind::Jump, 4, true),
                (MoveKind::Jump, 5, false),
            ]
        );
    }

    #[test]
    fn worked_example_default_agrees() {
        let pt = first(WORKED_IN);
        let (out, path) = local_esh(&pt).unwrap();
        let (out2, s, _) = local_esh_default(&pt).unwrap();
        assert_eq!(out, out2);
        assert_eq!(s, path.transition_step);
        assert_eq!(transition_step(&pt).unwrap(), 3);
    }

    #[test]
    fn worked_example_reverse_roundtrip() {
        let pt = first(WORKED_IN);
        let (out, forward) = local_esh(&pt).unwrap();
        let (back, reverse) = local_esh_reverse(&out).unwrap();
        assert_eq!(back, pt);
        assert_eq!(reverse.transition_step, forward.transition_step);
        let mut rev_cells = reverse.cells.clone();
        rev_cells.reverse();
        assert_eq!(rev_cells, forward.cells);
    }

    #[test]
    fn vertical_pieri_example() {
        let pt = first("..1\n.2\n.3\nX\n4");
        let (out, path) = local_esh(&pt).unwrap();
        assert_eq!(path.transition_step, 1);
        let movements: Vec<MoveKind> = path
            .moves
            .iter()
            .filter(|m| m.is_movement())
            .map(|m| m.kind)
            .collect();
        assert_eq!(movements, vec![MoveKind::CPieri]);
        assert_eq!(out.tableau().to_text(), "..1\n.2\n.X\n3\n4");
    }

    #[test]
    fn domino_and_cycle_displays() {
        // Vertical domino: the square slides straight down.
        let pt = first("..X11\n.11\n1");
        let (out, path) = local_esh(&pt).unwrap();
        assert_eq!(out.tableau().to_text(), "..111\n.1X\n1");
        assert_eq!(path.moves[0].kind, MoveKind::Vert);
        // One-row content, square before everything: one long jump.
        let pt2 = first("...111\n.11\nX");
        let (out2, path2) = local_esh(&pt2).unwrap();
        assert_eq!(out2.tableau().to_text(), "...11X\n.11\n1");
        assert_eq!(path2.transition_step, 1);
        assert_eq!(path2.cells.len(), 6);
    }

    #[test]
    fn empty_content_is_identity() {
        let t = SkewTableau::parse_text("X").unwrap();
        let pt = PuncturedTableau::new(t, BoxPosition::First).unwrap();
        let (out, path) = local_esh(&pt).unwrap();
        assert_eq!(out.box_cell(), pt.box_cell());
        assert_eq!(path.cells.len(), 1);
        assert_eq!(path.move_count(), 0);
        assert_eq!(path.transition_step, 1);
    }

    #[test]
    fn transition_when_phase1_never_fires() {
        // One-row content with an adjacent 1 below: phase 1 completes, so
        // the transition step is t + 1 = 2.
        let pt = first("X\n1");
        assert_eq!(transition_step(&pt).unwrap(), 2);
    }

    #[test]
    fn reverse_of_vertical_pieri() {
        let out = last("..1\n.2\n.X\n3\n4");
        let (back, _) = local_esh_reverse(&out).unwrap();
        assert_eq!(back.tableau().to_text(), "..1\n.2\n.3\nX\n4");
    }

    #[test]
    fn s_decomposition_of_worked_example() {
        let pt = first(WORKED_IN);
        let numeric = pt.numeric_part().unwrap();
        let dec = s_decomposition(&numeric, 3).unwrap();
        assert_eq!(dec.horizontals.len(), 2);
        assert_eq!(dec.verticals.len(), 4);
        assert_eq!(dec.t, 6);
        assert_eq!(dec.horizontals[0].len(), 6);
        assert_eq!(dec.horizontals[1].len(), 5);
        let total: usize = dec.verticals.iter().map(Vec::len).sum();
        assert_eq!(total, 4 + 3 + 1);
    }

    #[test]
    fn s_decomposition_extremes() {
        let pt = first(WORKED_IN);
        let numeric = pt.numeric_part().unwrap();
        let ell = 5;
        let all_h = s_decomposition(&numeric, ell + 1).unwrap();
        assert_eq!(all_h.horizontals.len(), ell);
        assert!(all_h.verticals.is_empty());
        let all_v = s_decomposition(&numeric, 1).unwrap();
        assert!(all_v.horizontals.is_empty());
        assert_eq!(all_v.verticals.len(), 6);
        assert!(s_decomposition(&numeric, ell + 2).is_err());
    }

    #[test]
    fn strips_rectify_to_decomposition_of_rectification() {
        // Each prefix of strips rectifies to the matching prefix of the
        // rectified tableau's decomposition.
        let pt = first(WORKED_IN);
        let numeric = pt.numeric_part().unwrap();
        let s = 3;
        let dec = s_decomposition(&numeric, s).unwrap();
        let rect = jdt::rectify(&numeric);
        let dec_rect = s_decomposition(&rect, s).unwrap();
        let shapes = dec.strip_shapes(numeric.shape().inner()).unwrap();
        let rect_shapes = dec_rect.strip_shapes(rect.shape().inner()).unwrap();
        for k in 1..shapes.len() {
            let cells: Vec<(Cell, usize)> = numeric
                .entries_reading()
                .filter(|(c, _)| {
                    dec.horizontals
                        .iter()
                        .chain(dec.verticals.iter())
                        .take(k)
                        .any(|strip| strip.contains(c))
                })
                .collect();
            let shape = SkewShape::new(shapes[k].clone(), numeric.shape().inner().clone()).unwrap();
            let prefix = SkewTableau::from_cells(shape, cells).unwrap();
            let rect_prefix_outer = rect_shapes[k].clone();
            let rectified = jdt::rectify(&prefix);
            assert_eq!(rectified.shape().outer(), &rect_prefix_outer);
        }
    }

    #[test]
    fn step_operators_compose_to_local_esh() {
        let pt = first(WORKED_IN);
        let t = pt.strips();
        let mut x = pt.clone();
        for i in 1..=t {
            let (y, _) = step_ell(i, &x).unwrap();
            x = y;
        }
        let (expected, _) = local_esh(&pt).unwrap();
        assert_eq!(x, expected);
    }

    #[test]
    fn step_sh_composes_to_full_slide() {
        let pt = first(WORKED_IN);
        let t = pt.strips();
        let (after, _) = local_esh(&pt).unwrap();
        let mut x = after.clone();
        for i in (1..=t).rev() {
            x = step_sh(i, &x).unwrap();
        }
        let (expected, _) = after.sh().unwrap();
        assert_eq!(x, expected);
    }

    #[test]
    fn step_sh_inverse_roundtrip() {
        let pt = first(WORKED_IN);
        let y = step_sh_inverse(1, &pt).unwrap();
        let back = step_sh(1, &y).unwrap();
        assert_eq!(back, pt);
    }

    #[test]
    fn step_sh_is_the_full_slide_for_one_strip() {
        let pt = last("...11X\n.11\n1");
        assert_eq!(pt.strips(), 1);
        let via_step = step_sh(1, &pt).unwrap();
        let (via_sh, _) = pt.sh().unwrap();
        assert_eq!(via_step, via_sh);
    }
}
