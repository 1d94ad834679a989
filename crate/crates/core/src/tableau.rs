//! Fillings of composition diagrams in French notation.
//!
//! Rows are stored bottom-up: `rows[0]` is the bottom row. Cell `(i, j)`
//! means column `i` from the left and row `j` from the bottom, both
//! 1-based. JSON uses the same bottom-up row order; [`fmt::Display`] prints
//! the top row first, the way the diagrams are drawn.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// An entry of an augmented filling. The sentinel `Infinity` compares
/// greater than every finite entry.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Entry {
    Finite(u32),
    Infinity,
}

impl Entry {
    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(v) => Some(v),
            Entry::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Entry::Infinity
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(v) => write!(f, "{v}"),
            Entry::Infinity => f.write_str("∞"),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Finite(v) => s.serialize_u32(*v),
            Entry::Infinity => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((col, row): (usize, usize)) -> Self {
        Cell { col, row }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.col, c.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TableauKind {
    /// Weakly increasing rows and a strictly increasing leftmost column.
    Immaculate,
    /// Immaculate conditions plus the Young composition triple rule.
    YoungComposition,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFilling")]
pub struct Filling {
    #[serde(serialize_with = "serialize_parts")]
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

fn serialize_parts<S: serde::Serializer>(c: &Composition, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.parts().serialize(s)
}

#[derive(Deserialize)]
struct RawFilling {
    shape: Option<Vec<u32>>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawFilling> for Filling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Self> {
        let f = Filling::from_rows(raw.rows)?;
        if let Some(shape) = raw.shape {
            let shape = Composition::new(shape)?;
            if shape != f.shape {
                return Err(Error::ShapeMismatch { left: shape, right: f.shape });
            }
        }
        Ok(f)
    }
}

impl Filling {
    /// Builds a filling from rows listed bottom-up.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::ParseFilling("rows must be nonempty".into()));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::ZeroEntry);
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let shape = Composition::from_positive(rows.iter().map(|r| r.len() as u32).collect());
        Filling { shape, rows }
    }

    pub fn empty() -> Self {
        Filling { shape: Composition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.shape.size() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows.get(row.wrapping_sub(1)).map_or(0, Vec::len)
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.col == 0 || cell.row == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.get(cell).is_some()
    }

    /// Entry at `cell`, reading every cell outside the diagram as `∞`.
    pub fn get_or_inf(&self, cell: Cell) -> Entry {
        self.get(cell).map_or(Entry::Infinity, Entry::Finite)
    }

    /// All cells with their entries, row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (Cell::new(c + 1, r + 1), v)))
    }

    /// The first cell (bottom-up, left to right) holding `value`.
    pub fn find(&self, value: u32) -> Option<Cell> {
        self.cells().find(|&(_, v)| v == value).map(|(c, _)| c)
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn augmented(&self) -> AugmentedView<'_> {
        AugmentedView { filling: self }
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    /// Recomputes the cached shape after in-place row edits.
    pub(crate) fn resync_shape(&mut self) {
        self.shape = Composition::from_positive(self.rows.iter().map(|r| r.len() as u32).collect());
    }

    pub fn is_immaculate(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.rows.windows(2).all(|w| w[0][0] < w[1][0])
    }

    pub fn is_ssyct(&self) -> bool {
        self.is_immaculate() && self.satisfies_young_triple_rule()
    }

    /// For rows `j < k` and `1 ≤ i < max(α_j, α_k)`: if `T(i,k) ≤ T(i+1,j)`
    /// then `T(i+1,k) < T(i+1,j)`, absent cells reading as `∞`.
    fn satisfies_young_triple_rule(&self) -> bool {
        let l = self.num_rows();
        for j in 1..=l {
            for k in j + 1..=l {
                let width = self.row_len(j).max(self.row_len(k));
                for i in 1..width {
                    let b = self.get_or_inf(Cell::new(i, k));
                    let a = self.get_or_inf(Cell::new(i + 1, j));
                    let c = self.get_or_inf(Cell::new(i + 1, k));
                    if b <= a && c >= a {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn young_reading_word(&self) -> Vec<Entry> {
        let view = self.augmented();
        view.young_order().into_iter().map(|c| view.get(c).expect("cell in augmented diagram")).collect()
    }

    /// Rows left to right, top row first.
    pub fn immaculate_reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `i` such that `i+1` sits weakly left of `i`.
    pub fn young_descent_set(&self) -> Result<BTreeSet<u32>> {
        let cells = self.standard_positions()?;
        Ok((1..self.size() as u32).filter(|&i| cells[i as usize + 1].col <= cells[i as usize].col).collect())
    }

    /// `i` such that `i+1` sits strictly above `i`.
    pub fn immaculate_descent_set(&self) -> Result<BTreeSet<u32>> {
        let cells = self.standard_positions()?;
        Ok((1..self.size() as u32).filter(|&i| cells[i as usize + 1].row > cells[i as usize].row).collect())
    }

    /// `positions[v]` is the cell holding `v`; index 0 is unused.
    pub(crate) fn standard_positions(&self) -> Result<Vec<Cell>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut out = vec![Cell::new(0, 0); self.size() + 1];
        for (cell, v) in self.cells() {
            out[v as usize] = cell;
        }
        Ok(out)
    }

    /// Multiplicity of each entry `1..=max`, as a weak composition.
    pub fn weight(&self) -> Vec<u32> {
        let max = self.max_entry().unwrap_or(0) as usize;
        let mut w = vec![0; max];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// Compact text form: rows bottom-up separated by `/`, entries by `,`.
    pub fn to_compact(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// Parses the compact form, e.g. `"2/3,4,7/6,8"` (bottom row first).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Filling::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<u32>().map_err(|_| Error::ParseFilling(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::from_rows(rows)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line = row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            f.write_str(&line)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling[{}]", self.to_compact())
    }
}

/// Read-only view of a filling with one `∞` appended to every row.
#[derive(Clone, Copy)]
pub struct AugmentedView<'a> {
    filling: &'a Filling,
}

impl<'a> AugmentedView<'a> {
    pub fn filling(&self) -> &'a Filling {
        self.filling
    }

    /// `None` outside the augmented diagram.
    pub fn get(&self, cell: Cell) -> Option<Entry> {
        let len = self.filling.row_len(cell.row);
        if cell.row == 0 || cell.row > self.filling.num_rows() || cell.col == 0 {
            None
        } else if cell.col <= len {
            self.filling.get(cell).map(Entry::Finite)
        } else if cell.col == len + 1 {
            Some(Entry::Infinity)
        } else {
            None
        }
    }

    /// Cells of the augmented diagram in Young reading order: columns from
    /// right to left, each column top to bottom.
    pub fn young_order(&self) -> Vec<Cell> {
        young_order(self.filling.shape())
    }
}

/// Young reading order of the augmented diagram of `shape`.
pub fn young_order(shape: &Composition) -> Vec<Cell> {
    let parts = shape.parts();
    let max_col = parts.iter().copied().max().unwrap_or(0) as usize + 1;
    let mut out = Vec::new();
    for col in (1..=max_col).rev() {
        for row in (1..=parts.len()).rev() {
            if col <= parts[row - 1] as usize + 1 {
                out.push(Cell::new(col, row));
            }
        }
    }
    if parts.is_empty() {
        out.clear();
    }
    out
}

/// All standard fillings of `shape` of the given kind, ordered
/// lexicographically by immaculate reading word.
pub fn enumerate_standard(shape: &Composition, kind: TableauKind) -> Vec<Filling> {
    Enumerator::new(shape, kind, Values::Standard).run()
}

/// All fillings of `shape` of the given kind with entries in `1..=max_entry`.
pub fn enumerate_semistandard(shape: &Composition, kind: TableauKind, max_entry: u32) -> Vec<Filling> {
    Enumerator::new(shape, kind, Values::UpTo(max_entry)).run()
}

#[derive(Clone, Copy)]
enum Values {
    Standard,
    UpTo(u32),
}

/// Backtracking over cells in immaculate reading order (top row first,
/// left to right), smallest candidate first.
struct Enumerator {
    kind: TableauKind,
    values: Values,
    order: Vec<Cell>,
    rows: Vec<Vec<u32>>,
    used: Vec<bool>,
    out: Vec<Filling>,
}

impl Enumerator {
    fn new(shape: &Composition, kind: TableauKind, values: Values) -> Self {
        let parts = shape.parts();
        let order = (1..=parts.len())
            .rev()
            .flat_map(|row| (1..=parts[row - 1] as usize).map(move |col| Cell::new(col, row)))
            .collect();
        let rows = parts.iter().map(|&p| vec![0; p as usize]).collect();
        let n = shape.size() as usize;
        Enumerator { kind, values, order, rows, used: vec![false; n + 1], out: Vec::new() }
    }

    fn run(mut self) -> Vec<Filling> {
        self.fill(0);
        self.out
    }

    fn at(&self, col: usize, row: usize) -> Entry {
        match self.rows.get(row - 1).and_then(|r| r.get(col.wrapping_sub(1))) {
            Some(&v) => Entry::Finite(v),
            None => Entry::Infinity,
        }
    }

    fn admissible(&self, cell: Cell, v: u32) -> bool {
        let Cell { col, row } = cell;
        if col > 1 && v < self.rows[row - 1][col - 2] {
            return false;
        }
        if col == 1 && row < self.rows.len() && v >= self.rows[row][0] {
            return false;
        }
        if self.kind == TableauKind::YoungComposition && col > 1 {
            // every triple whose lower cell is this one; upper rows are complete
            let a = Entry::Finite(v);
            for k in row + 1..=self.rows.len() {
                let b = self.at(col - 1, k);
                let c = self.at(col, k);
                if b <= a && c >= a {
                    return false;
                }
            }
        }
        true
    }

    fn fill(&mut self, idx: usize) {
        if idx == self.order.len() {
            self.out.push(Filling::from_rows_unchecked(self.rows.clone()));
            return;
        }
        let cell = self.order[idx];
        let (lo, hi) = match self.values {
            Values::Standard => (1, self.used.len() as u32 - 1),
            Values::UpTo(m) => (1, m),
        };
        let lo = if cell.col > 1 { lo.max(self.rows[cell.row - 1][cell.col - 2]) } else { lo };
        for v in lo..=hi {
            if let Values::Standard = self.values {
                if self.used[v as usize] {
                    continue;
                }
            }
            if !self.admissible(cell, v) {
                continue;
            }
            self.rows[cell.row - 1][cell.col - 1] = v;
            if let Values::Standard = self.values {
                self.used[v as usize] = true;
            }
            self.fill(idx + 1);
            if let Values::Standard = self.values {
                self.used[v as usize] = false;
            }
        }
        self.rows[cell.row - 1][cell.col - 1] = 0;
    }
}
