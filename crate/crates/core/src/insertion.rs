//! Insertion of an integer into a Young composition tableau, its inverse
//! ("rapture"), and the word-level maps built from them.
//!
//! Both procedures scan the augmented diagram in Young reading order.
//! Leftmost-column cells are never bumped or evicted, so the scans skip
//! column 1; new rows are opened only by the terminal step of insertion.
//!
//! Bumping paths and escape routes are recorded in the coordinates of the
//! larger of the two tableaux involved (the one that contains the moving
//! cell). With that convention the escape route of a rapture is exactly the
//! reversed bumping path of the insertion it undoes.

use serde::Serialize;

use crate::dirt::is_dirt;
use crate::error::{Error, Result};
use crate::tableau::{young_order, Cell, Entry, Filling};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A scanned cell and whether the procedure's condition held there.
    Scan {
        cell: Cell,
        carried: u32,
        left: Entry,
        occupant: Entry,
        #[serde(skip_serializing_if = "Option::is_none")]
        right: Option<Entry>,
        matched: bool,
    },
    Bump {
        cell: Cell,
        placed: u32,
        bumped: u32,
    },
    Place {
        cell: Cell,
        value: u32,
    },
    /// A single-cell row opened at `row`; rows at or above it moved up.
    NewRow {
        row: usize,
        value: u32,
    },
    /// The raptured entry left the diagram; `row_removed` means its row
    /// vanished and the rows above it moved down.
    Remove {
        cell: Cell,
        value: u32,
        row_removed: bool,
    },
    Pass {
        cell: Cell,
        carried: u32,
    },
    Evict {
        cell: Cell,
        placed: u32,
        evicted: u32,
    },
    Output {
        value: Entry,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionResult {
    pub tableau: Filling,
    pub new_cell: Cell,
    pub bumping_path: Vec<Cell>,
    pub trace: Vec<TraceEvent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaptureResult {
    pub tableau: Filling,
    /// `Infinity` when no integer inserts into the result to give back the
    /// input; `tableau` then holds the filling at the moment the procedure
    /// stopped.
    pub output: Entry,
    pub escape_route: Vec<Cell>,
    pub trace: Vec<TraceEvent>,
}

/// Inserts `k` into the SSYCT `t`.
pub fn insert(t: &Filling, k: u32) -> Result<InsertionResult> {
    if k == 0 {
        return Err(Error::ZeroEntry);
    }
    if !t.is_ssyct() {
        return Err(Error::NotSsyct);
    }
    insert_unchecked(t, k)
}

fn insert_unchecked(t: &Filling, k: u32) -> Result<InsertionResult> {
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut carried = k;
    let mut path = Vec::new();
    let mut trace = Vec::new();

    for cell in young_order(t.shape()) {
        if cell.col == 1 {
            continue;
        }
        let row = &mut rows[cell.row - 1];
        let left = row[cell.col - 2];
        let occupant = row.get(cell.col - 1).map_or(Entry::Infinity, |&v| Entry::Finite(v));
        let matched = left <= carried && Entry::Finite(carried) < occupant;
        trace.push(TraceEvent::Scan { cell, carried, left: Entry::Finite(left), occupant, right: None, matched });
        if !matched {
            continue;
        }
        path.push(cell);
        match occupant {
            Entry::Infinity => {
                row.push(carried);
                trace.push(TraceEvent::Place { cell, value: carried });
                out.resync_shape();
                return Ok(InsertionResult { tableau: out, new_cell: cell, bumping_path: path, trace });
            }
            Entry::Finite(bumped) => {
                row[cell.col - 1] = carried;
                trace.push(TraceEvent::Bump { cell, placed: carried, bumped });
                carried = bumped;
            }
        }
    }

    // No cell qualified: open a row in the leftmost column above every
    // smaller leftmost entry.
    let pos = rows.iter().take_while(|r| r[0] < carried).count();
    if rows.get(pos).is_some_and(|r| r[0] == carried) {
        return Err(Error::ColumnConflict(carried));
    }
    rows.insert(pos, vec![carried]);
    let new_row = pos + 1;
    for cell in &mut path {
        if cell.row >= new_row {
            cell.row += 1;
        }
    }
    let new_cell = Cell::new(1, new_row);
    path.push(new_cell);
    trace.push(TraceEvent::NewRow { row: new_row, value: carried });
    out.resync_shape();
    Ok(InsertionResult { tableau: out, new_cell, bumping_path: path, trace })
}

/// A cell whose entry exceeds everything below it in its column, ends its
/// row, and is the lowest row end in its column.
pub fn is_virtuous(t: &Filling, cell: Cell) -> Result<bool> {
    let value = t.get(cell).ok_or(Error::EmptyCell(cell))?;
    let greater_than_below = (1..cell.row).all(|r| t.get(Cell::new(cell.col, r)).is_none_or(|v| v < value));
    let ends_row = t.row_len(cell.row) == cell.col;
    let lowest_end = (1..cell.row).all(|r| t.row_len(r) != cell.col);
    Ok(greater_than_below && ends_row && lowest_end)
}

/// Raptures the virtuous entry at `cell` out of the SSYCT `t`.
pub fn rapture(t: &Filling, cell: Cell) -> Result<RaptureResult> {
    if !t.is_ssyct() {
        return Err(Error::NotSsyct);
    }
    if !is_virtuous(t, cell)? {
        return Err(Error::NotVirtuous(cell));
    }
    Ok(rapture_unchecked(t, cell))
}

fn rapture_unchecked(t: &Filling, start: Cell) -> RaptureResult {
    let value = t.get(start).expect("virtuous cell is occupied");
    let mut out = t.clone();
    let row_removed = start.col == 1;
    {
        let rows = out.rows_mut();
        if row_removed {
            rows.remove(start.row - 1);
        } else {
            rows[start.row - 1].pop();
        }
    }
    out.resync_shape();

    let mut trace = vec![TraceEvent::Remove { cell: start, value, row_removed }];
    let mut route = vec![start];
    let mut carried = value;

    // Cells that preceded the removed one in Young reading order.
    let earlier: Vec<Cell> = young_order(out.shape())
        .into_iter()
        .filter(|c| c.col >= 2)
        .filter(|c| row_removed || c.col > start.col || (c.col == start.col && c.row > start.row))
        .collect();
    // Map post-removal coordinates back onto `t`.
    let lift = |c: Cell| if row_removed && c.row >= start.row { Cell::new(c.col, c.row + 1) } else { c };

    let rows = out.rows_mut();
    for &cell in earlier.iter().rev() {
        let row = &mut rows[cell.row - 1];
        let left = row[cell.col - 2];
        let occupant = row.get(cell.col - 1).map_or(Entry::Infinity, |&v| Entry::Finite(v));
        let right = row.get(cell.col).map_or(Entry::Infinity, |&v| Entry::Finite(v));
        let matched = left <= carried && Entry::Finite(carried) <= right;
        trace.push(TraceEvent::Scan {
            cell: lift(cell),
            carried,
            left: Entry::Finite(left),
            occupant,
            right: Some(right),
            matched,
        });
        if !matched {
            continue;
        }
        match occupant {
            Entry::Infinity => {
                row.push(carried);
                trace.push(TraceEvent::Place { cell: lift(cell), value: carried });
                trace.push(TraceEvent::Output { value: Entry::Infinity });
                out.resync_shape();
                return RaptureResult { tableau: out, output: Entry::Infinity, escape_route: route, trace };
            }
            Entry::Finite(occ) if occ >= carried => {
                trace.push(TraceEvent::Pass { cell: lift(cell), carried });
            }
            Entry::Finite(evicted) => {
                row[cell.col - 1] = carried;
                trace.push(TraceEvent::Evict { cell: lift(cell), placed: carried, evicted });
                route.push(lift(cell));
                carried = evicted;
            }
        }
    }
    trace.push(TraceEvent::Output { value: Entry::Finite(carried) });
    RaptureResult { tableau: out, output: Entry::Finite(carried), escape_route: route, trace }
}

/// One letter of a word insertion: the insertion itself and the recording
/// filling after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordStep {
    pub letter: u32,
    pub insertion: InsertionResult,
    pub recording: Filling,
}

/// Inserts the letters of `word` left to right into an empty tableau and
/// records, at the cell created by the `j`-th insertion, the value `j`.
///
/// Any duplicate-free word is accepted. The recording filling is a DIRT
/// when `word` is the immaculate reading word of a standard immaculate
/// tableau; for other words it is only a standard filling.
pub fn insert_word(word: &[u32]) -> Result<(Filling, Filling)> {
    let steps = insert_word_steps(word)?;
    Ok(match steps.into_iter().last() {
        Some(last) => (last.insertion.tableau, last.recording),
        None => (Filling::empty(), Filling::empty()),
    })
}

pub fn insert_word_steps(word: &[u32]) -> Result<Vec<WordStep>> {
    let mut seen = std::collections::HashSet::new();
    for &k in word {
        if k == 0 {
            return Err(Error::ZeroEntry);
        }
        if !seen.insert(k) {
            return Err(Error::RepeatedLetter(k));
        }
    }
    let mut p = Filling::empty();
    let mut q = Filling::empty();
    let mut steps = Vec::with_capacity(word.len());
    for (j, &k) in word.iter().enumerate() {
        let ins = insert_unchecked(&p, k)?;
        let record = j as u32 + 1;
        let rows = q.rows_mut();
        if ins.new_cell.col == 1 {
            rows.insert(ins.new_cell.row - 1, vec![record]);
        } else {
            rows[ins.new_cell.row - 1].push(record);
        }
        q.resync_shape();
        p = ins.tableau.clone();
        steps.push(WordStep { letter: k, insertion: ins, recording: q.clone() });
    }
    Ok(steps)
}

/// Recovers the word from an (SSYCT, DIRT) pair by repeatedly rapturing the
/// cell that holds the recording tableau's largest entry.
pub fn uninsert(p: &Filling, q: &Filling) -> Result<Vec<u32>> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch { left: p.shape().clone(), right: q.shape().clone() });
    }
    if !p.is_ssyct() {
        return Err(Error::NotSsyct);
    }
    if !is_dirt(q) {
        return Err(Error::NotDirt);
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut word = Vec::with_capacity(p.size());
    while !q.is_empty() {
        let max = q.size() as u32;
        let cell = q.find(max).expect("standard recording filling");
        {
            let rows = q.rows_mut();
            if cell.col == 1 {
                rows.remove(cell.row - 1);
            } else {
                rows[cell.row - 1].pop();
            }
        }
        q.resync_shape();
        if !is_virtuous(&p, cell)? {
            return Err(Error::NotVirtuous(cell));
        }
        let r = rapture_unchecked(&p, cell);
        match r.output {
            Entry::Finite(m) => word.push(m),
            Entry::Infinity => return Err(Error::InfiniteRaptureOutput),
        }
        p = r.tableau;
    }
    word.reverse();
    Ok(word)
}
