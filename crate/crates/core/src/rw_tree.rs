//! Remmel-Whitney style trees that produce the decomposition coefficients
//! without running insertion.
//!
//! The forward tree grows DIRTs one row strip at a time; its leaves are the
//! DIRTs with a given row strip shape, so counting leaf shapes expands a dual
//! immaculate function in the Young quasisymmetric Schur basis. The dual tree
//! fills a fixed diagram level by level; counting how often each level value
//! occurs in a leaf expands a Young noncommutative Schur function in the
//! immaculate basis.

use std::fmt::Write as _;

use serde::Serialize;

use crate::composition::Composition;
use crate::qsym::{Basis, BasisExpansion};
use crate::tableau::Filling;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RwNode<T> {
    pub label: T,
    /// Set on leaves: the shape (forward) or the immaculate index (dual).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf: Option<Composition>,
    /// Dual leaves only: how many times each level value occurs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<u32>>,
    pub children: Vec<RwNode<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RwTree<T> {
    pub root: RwNode<T>,
}

/// Text rows of a node label, top row first.
pub trait NodeText {
    fn text_rows(&self) -> Vec<String>;
}

impl NodeText for Filling {
    fn text_rows(&self) -> Vec<String> {
        self.rows().iter().rev().map(|r| join(r.iter().map(u32::to_string))).collect()
    }
}

/// A diagram of fixed shape whose rows are filled from the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartialFilling {
    #[serde(serialize_with = "parts")]
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

fn parts<S: serde::Serializer>(c: &Composition, s: S) -> Result<S::Ok, S::Error> {
    c.parts().serialize(s)
}

impl PartialFilling {
    pub fn empty(shape: &Composition) -> Self {
        PartialFilling { shape: shape.clone(), rows: vec![Vec::new(); shape.len()] }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Filled prefixes of each row, bottom-up.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().zip(self.shape.parts()).all(|(r, &p)| r.len() == p as usize)
    }
}

impl NodeText for PartialFilling {
    fn text_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .zip(self.shape.parts())
            .rev()
            .map(|(r, &p)| {
                let filled = r.iter().map(u32::to_string);
                let empty = std::iter::repeat_n(".".to_string(), p as usize - r.len());
                join(filled.chain(empty))
            })
            .collect()
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(" ")
}

impl<T> RwNode<T> {
    fn inner(label: T, children: Vec<RwNode<T>>) -> Self {
        RwNode { label, leaf: None, multiplicities: None, children }
    }
}

impl<T> RwTree<T> {
    pub fn leaves(&self) -> Vec<&RwNode<T>> {
        fn walk<'a, T>(n: &'a RwNode<T>, out: &mut Vec<&'a RwNode<T>>) {
            if n.leaf.is_some() {
                out.push(n);
            }
            for c in &n.children {
                walk(c, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }

    pub fn node_count(&self) -> usize {
        fn count<T>(n: &RwNode<T>) -> usize {
            1 + n.children.iter().map(count).sum::<usize>()
        }
        count(&self.root)
    }
}

impl<T: NodeText> RwTree<T> {
    /// Graphviz rendering; node ids follow a preorder walk.
    pub fn to_dot(&self, name: &str) -> String {
        fn emit<T: NodeText>(n: &RwNode<T>, next: &mut usize, out: &mut String) -> usize {
            let id = *next;
            *next += 1;
            let mut label = n.label.text_rows().join("\\n");
            if let Some(shape) = &n.leaf {
                let _ = write!(label, "\\n[{shape}]");
            }
            let style = if n.leaf.is_some() { ", peripheries=2" } else { "" };
            let _ = writeln!(out, "  n{id} [label=\"{label}\"{style}];");
            for c in &n.children {
                let child = emit(c, next, out);
                let _ = writeln!(out, "  n{id} -> n{child};");
            }
            id
        }
        let mut out = format!("digraph \"{name}\" {{\n  node [shape=box, fontname=\"monospace\"];\n");
        emit(&self.root, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }
}

/// Forward tree for α: the root is one row holding 1..α_ℓ; each level adds a
/// new bottom row opened by the next row strip, whose size runs through
/// α_{ℓ-1}, ..., α_1.
pub fn rw_forward(alpha: &Composition) -> (RwTree<Filling>, BasisExpansion) {
    let blocks: Vec<u32> = alpha.parts().iter().rev().copied().collect();
    let root_rows = match blocks.first() {
        Some(&b) => vec![(1..=b).collect::<Vec<u32>>()],
        None => Vec::new(),
    };
    let first = blocks.first().copied().unwrap_or(0);
    let root = grow_forward(root_rows, &blocks[1.min(blocks.len())..], first + 1);
    let tree = RwTree { root };
    let mut expansion = BasisExpansion::zero(Basis::YoungQs, alpha.size());
    for leaf in tree.leaves() {
        expansion.add_term(leaf.label.shape(), 1).expect("leaf shapes have degree |α|");
    }
    (tree, expansion)
}

fn grow_forward(rows: Vec<Vec<u32>>, blocks: &[u32], next: u32) -> RwNode<Filling> {
    let label = Filling::from_rows(rows.clone()).expect("tree nodes are nonempty positive fillings");
    let Some((&size, rest)) = blocks.split_first() else {
        let shape = label.shape().clone();
        return RwNode { leaf: Some(shape), ..RwNode::inner(label, Vec::new()) };
    };
    let mut start = rows;
    start.insert(0, vec![next]);
    let mut batches = Vec::new();
    place_forward(&mut start, next + 1, size - 1, 1, &mut Vec::new(), &mut batches);
    batches.sort_by(|a, b| a.0.cmp(&b.0));
    let children = batches.into_iter().map(|(_, rows)| grow_forward(rows, rest, next + size)).collect();
    RwNode::inner(label, children)
}

type Batch = (Vec<(usize, usize)>, Vec<Vec<u32>>);

// Places `remaining` values at row ends strictly right of `last_col`,
// recording (column, row) for each placement.
fn place_forward(
    rows: &mut Vec<Vec<u32>>,
    next: u32,
    remaining: u32,
    last_col: usize,
    key: &mut Vec<(usize, usize)>,
    out: &mut Vec<Batch>,
) {
    if remaining == 0 {
        out.push((key.clone(), rows.clone()));
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let col = len + 1;
        if col <= last_col {
            continue;
        }
        // no end-of-row placement above a row exactly one cell longer
        if rows[..r].iter().any(|below| below.len() == len + 1) {
            continue;
        }
        rows[r].push(next);
        key.push((col, r));
        place_forward(rows, next + 1, remaining - 1, col, key, out);
        key.pop();
        rows[r].pop();
    }
}

/// Dual tree for α: level i puts i at the start of the i-th row from the
/// top, then optionally more i's further right, at most one per column. A
/// new i needs a filled left neighbour, and no lower cell in its column may
/// end the filled part of its row.
pub fn rw_dual(alpha: &Composition) -> (RwTree<PartialFilling>, BasisExpansion) {
    let root = grow_dual(PartialFilling::empty(alpha), 1);
    let tree = RwTree { root };
    let mut expansion = BasisExpansion::zero(Basis::Immaculate, alpha.size());
    for leaf in tree.leaves() {
        expansion.add_term(leaf.leaf.as_ref().expect("leaf"), 1).expect("leaf indices have degree |α|");
    }
    (tree, expansion)
}

fn grow_dual(node: PartialFilling, level: u32) -> RwNode<PartialFilling> {
    let len = node.shape.len();
    if level as usize > len {
        let counts: Vec<u32> =
            (1..=len as u32).map(|i| node.rows.iter().flatten().filter(|&&v| v == i).count() as u32).collect();
        let beta = Composition::new(counts.iter().rev().copied().collect()).expect("every level places one value");
        return RwNode { leaf: Some(beta), multiplicities: Some(counts), ..RwNode::inner(node, Vec::new()) };
    }
    let mut start = node.clone();
    let row = len - level as usize;
    start.rows[row].push(level);
    let mut states = Vec::new();
    place_dual(&mut start, level, 1, &mut Vec::new(), &mut states);
    states.sort_by(|a, b| a.0.cmp(&b.0));
    let last = level as usize == len;
    let children =
        states.into_iter().filter(|(_, s)| !last || s.is_complete()).map(|(_, s)| grow_dual(s, level + 1)).collect();
    RwNode::inner(node, children)
}

fn place_dual(
    state: &mut PartialFilling,
    value: u32,
    last_col: usize,
    key: &mut Vec<(usize, usize)>,
    out: &mut Vec<(Vec<(usize, usize)>, PartialFilling)>,
) {
    out.push((key.clone(), state.clone()));
    for r in 0..state.rows.len() {
        let filled = state.rows[r].len();
        let col = filled + 1;
        if col <= last_col || col > state.shape.parts()[r] as usize {
            continue;
        }
        // a lower cell in this column that ends its row's filled part
        if state.rows[..r].iter().any(|below| below.len() == col) {
            continue;
        }
        state.rows[r].push(value);
        key.push((col, r));
        place_dual(state, value, col, key, out);
        key.pop();
        state.rows[r].pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::dirt::{is_dirt, row_strip_shape};

    #[test]
    fn forward_examples() {
        let (tree, e) = rw_forward(&comp![2, 2, 2]);
        assert_eq!(tree.leaves().len(), 6);
        assert_eq!(
            e.coeffs(),
            &[(comp![2, 2, 2], 1), (comp![2, 1, 3], 1), (comp![1, 3, 2], 1), (comp![1, 2, 3], 2), (comp![1, 1, 4], 1)]
                .into()
        );
        let (tree, e) = rw_forward(&comp![4]);
        assert_eq!(tree.node_count(), 1);
        assert_eq!(e.coeffs(), &[(comp![4], 1)].into());
        let (_, e) = rw_forward(&comp![2, 2]);
        assert_eq!(e.coeffs(), &[(comp![2, 2], 1), (comp![1, 3], 1)].into());
    }

    #[test]
    fn forward_nodes_are_dirts() {
        let alpha = comp![2, 1, 2, 1];
        let (tree, _) = rw_forward(&alpha);
        fn walk(n: &RwNode<Filling>, depth: usize, alpha: &Composition) {
            assert!(is_dirt(&n.label));
            assert_eq!(n.label.num_rows(), depth + 1);
            let tail = Composition::new(alpha.reverse().parts()[..depth + 1].to_vec()).unwrap();
            assert_eq!(row_strip_shape(&n.label).unwrap(), tail);
            for c in &n.children {
                walk(c, depth + 1, alpha);
            }
        }
        walk(&tree.root, 0, &alpha);
    }

    #[test]
    fn dual_examples() {
        let (tree, e) = rw_dual(&comp![1, 2, 3]);
        assert_eq!(tree.leaves().len(), 8);
        assert_eq!(
            e.coeffs(),
            &[
                (comp![3, 2, 1], 1),
                (comp![2, 3, 1], 1),
                (comp![3, 1, 2], 1),
                (comp![2, 2, 2], 2),
                (comp![1, 3, 2], 1),
                (comp![2, 1, 3], 1),
                (comp![1, 2, 3], 1)
            ]
            .into()
        );
        assert_eq!(rw_dual(&comp![3, 2, 2]).1.coeffs(), &[(comp![3, 2, 2], 1)].into());
        assert_eq!(rw_dual(&comp![1, 2]).1.coeffs(), &[(comp![1, 2], 1), (comp![2, 1], 1)].into());
    }

    #[test]
    fn dot_output() {
        let (tree, _) = rw_forward(&comp![1, 1]);
        let dot = tree.to_dot("forward 1,1");
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("peripheries=2"));
    }
}
