//! Row strips, dual immaculate recording tableaux (DIRTs), their enumeration,
//! and superstandard DIRTs.

use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableau::{Cell, Filling};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowStrip {
    pub start: u32,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowStripDecomposition {
    pub strips: Vec<RowStrip>,
    pub strip_shape: Composition,
}

/// Splits 1..n into maximal runs of consecutive values occupying pairwise
/// distinct columns, greedily from 1: a run ends as soon as the next value
/// sits in a column the run already uses.
pub fn row_strips(q: &Filling) -> Result<RowStripDecomposition> {
    let positions = q.standard_positions()?;
    let mut strips: Vec<RowStrip> = Vec::new();
    for (idx, &cell) in positions.iter().enumerate().skip(1) {
        let value = idx as u32;
        match strips.last_mut() {
            Some(run) if run.cells.iter().all(|c| c.col != cell.col) => run.cells.push(cell),
            _ => strips.push(RowStrip { start: value, cells: vec![cell] }),
        }
    }
    let strip_shape = Composition::from_positive(strips.iter().map(|s| s.cells.len() as u32).collect());
    Ok(RowStripDecomposition { strips, strip_shape })
}

pub fn row_strip_shape(q: &Filling) -> Result<Composition> {
    Ok(row_strips(q)?.strip_shape)
}

/// Standard filling with increasing rows, row strips that start in column 1
/// and move strictly rightward, a leftmost column increasing from top to
/// bottom, and the recording triple rule.
///
/// Strips moving strictly rightward is what insertion of an increasing run
/// produces. Without it, fillings such as `4/2,6/1,3,5` (last strip in
/// columns 1, 3, 2) would be counted although no insertion records them.
pub fn is_dirt(q: &Filling) -> bool {
    let Ok(decomposition) = row_strips(q) else {
        return false;
    };
    let rows = q.rows();
    let rows_increase = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let strips_anchored = decomposition.strips.iter().all(|s| s.cells[0].col == 1);
    let strips_rightward = decomposition.strips.iter().all(|s| s.cells.windows(2).all(|w| w[0].col < w[1].col));
    let first_column_descends = rows.windows(2).all(|w| w[0][0] > w[1][0]);
    rows_increase && strips_anchored && strips_rightward && first_column_descends && satisfies_recording_triple_rule(q)
}

/// Whenever Q(i,j) > Q(i,g) with row j above row g, Q(i,j) > Q(i+1,g),
/// where a missing right neighbour counts as infinity.
fn satisfies_recording_triple_rule(q: &Filling) -> bool {
    for (cell, upper) in q.cells() {
        for g in 1..cell.row {
            let Some(lower) = q.get(Cell::new(cell.col, g)) else {
                continue;
            };
            if upper > lower {
                match q.get(Cell::new(cell.col + 1, g)) {
                    Some(right) if upper > right => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// All DIRTs of `shape` whose row strip shape is `strip_shape`, ordered
/// lexicographically by the sequence of rows receiving 1, 2, ..., n.
pub fn enumerate_dirts(shape: &Composition, strip_shape: &Composition) -> Vec<Filling> {
    let mut out = Vec::new();
    if shape.size() != strip_shape.size() || shape.len() != strip_shape.len() {
        return out;
    }
    let mut search = DirtSearch {
        shape: shape.parts().iter().map(|&p| p as usize).collect(),
        strips: strip_shape.parts().to_vec(),
        rows: vec![Vec::new(); shape.len()],
        out: &mut out,
    };
    search.strip(0, 1);
    out
}

struct DirtSearch<'a> {
    shape: Vec<usize>,
    strips: Vec<u32>,
    rows: Vec<Vec<u32>>,
    out: &'a mut Vec<Filling>,
}

impl DirtSearch<'_> {
    // Strip k opens in column 1 of the k-th row from the top.
    fn strip(&mut self, k: usize, next: u32) {
        if k == self.strips.len() {
            let q = Filling::from_rows_unchecked(self.rows.clone());
            debug_assert!(is_dirt(&q));
            self.out.push(q);
            return;
        }
        let row = self.rows.len() - 1 - k;
        self.rows[row].push(next);
        self.member(k, next + 1, self.strips[k] - 1, 1);
        self.rows[row].pop();
    }

    // Later members of a strip go to row ends strictly right of the previous one.
    fn member(&mut self, k: usize, next: u32, remaining: u32, last_col: usize) {
        if remaining == 0 {
            self.strip(k + 1, next);
            return;
        }
        for r in 0..self.rows.len() {
            let col = self.rows[r].len() + 1;
            if col <= last_col || col > self.shape[r] || !self.triple_rule_allows(r, col) {
                continue;
            }
            self.rows[r].push(next);
            self.member(k, next + 1, remaining - 1, col);
            self.rows[r].pop();
        }
    }

    // Values arrive in increasing order, so a filled lower cell in the same
    // column is smaller than the new value and needs its right neighbour
    // already present.
    fn triple_rule_allows(&self, row: usize, col: usize) -> bool {
        (0..row).all(|g| self.rows[g].len() != col)
    }
}

/// The DIRT of partition shape `lambda` with row strip shape reverse(`lambda`):
/// the top row holds the first block of values, the next row down the
/// following block, and so on.
pub fn superstandard(lambda: &Composition) -> Result<Filling> {
    if !lambda.is_partition() {
        return Err(Error::NotPartition(lambda.clone()));
    }
    let mut rows = vec![Vec::new(); lambda.len()];
    let mut next = 1;
    for (r, &part) in lambda.parts().iter().enumerate().rev() {
        rows[r] = (next..next + part).collect();
        next += part;
    }
    Ok(Filling::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn f(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn strip_shapes() {
        assert_eq!(row_strip_shape(&f("5/2,3,4,7/1,6")).unwrap(), comp![1, 3, 3]);
        assert_eq!(row_strip_shape(&f("6,7/4,5,8,9/1,2,3")).unwrap(), comp![3, 2, 4]);
        assert_eq!(row_strip_shape(&f("1,2,3")).unwrap(), comp![3]);
        assert_eq!(row_strip_shape(&f("1,1")), Err(Error::NotStandard));
        let d = row_strips(&f("5/2,3,4,7/1,6")).unwrap();
        assert_eq!(d.strips.iter().map(|s| s.start).collect::<Vec<_>>(), vec![1, 2, 5]);
    }

    #[test]
    fn dirt_predicate() {
        assert!(is_dirt(&f("3/1,2")));
        assert!(is_dirt(&f("3/1,2,4")));
        assert!(is_dirt(&f("6,7/4,5,8,9/1,2,3")));
        assert!(!is_dirt(&f("1,2/3,4")));
        assert!(!is_dirt(&f("2,1")));
        // only the recording triple rule fails: 5 above 3, nothing right of 3
        assert!(!is_dirt(&f("4/2,3/1,5")));
        // last strip visits columns 1, 3, 2
        assert!(!is_dirt(&f("4/2,6/1,3,5")));
        assert!(is_dirt(&f("4/2,5/1,3,6")));
        assert!(is_dirt(&Filling::empty()));
    }

    #[test]
    fn dirt_counts() {
        assert_eq!(enumerate_dirts(&comp![2, 2], &comp![2, 2]).len(), 1);
        assert_eq!(enumerate_dirts(&comp![1, 3], &comp![2, 2]).len(), 1);
        assert_eq!(enumerate_dirts(&comp![1, 2, 3], &comp![2, 2, 2]).len(), 2);
        assert_eq!(enumerate_dirts(&comp![3, 1], &comp![2, 2]).len(), 0);
        assert_eq!(enumerate_dirts(&comp![], &comp![]), vec![Filling::empty()]);
    }

    #[test]
    fn dirts_satisfy_predicate_and_strip_shape() {
        for alpha in crate::composition::compositions_of(6, None) {
            for beta in crate::composition::compositions_of(6, Some(alpha.len())) {
                for q in enumerate_dirts(&beta, &alpha) {
                    assert!(is_dirt(&q));
                    assert_eq!(q.shape(), &beta);
                    assert_eq!(row_strip_shape(&q).unwrap(), alpha);
                }
            }
        }
    }

    #[test]
    fn superstandard_examples() {
        assert_eq!(superstandard(&comp![3, 2, 1]).unwrap().rows(), &[vec![4, 5, 6], vec![2, 3], vec![1]]);
        assert_eq!(superstandard(&comp![4]).unwrap().rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(superstandard(&comp![1, 1]).unwrap().rows(), &[vec![2], vec![1]]);
        assert_eq!(superstandard(&comp![1, 2]), Err(Error::NotPartition(comp![1, 2])));
    }
}
