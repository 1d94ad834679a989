//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's enumerators or expansions.

#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use qsc_core::{Composition, Filling, MExpr};

/// Splits a flat word into rows of the given shape, bottom row first.
pub fn shape_rows(shape: &Composition, flat: &[u32]) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    let mut i = 0;
    for &p in shape.parts() {
        rows.push(flat[i..i + p as usize].to_vec());
        i += p as usize;
    }
    rows
}

/// Every bijective filling of `shape` with 1..n.
pub fn all_standard_fillings(shape: &Composition) -> Vec<Filling> {
    let n = shape.size() as usize;
    (1..=n as u32).permutations(n).map(|p| Filling::from_rows(shape_rows(shape, &p)).unwrap()).collect()
}

/// Every filling of `shape` with entries in 1..=max.
pub fn all_fillings(shape: &Composition, max: u32) -> Vec<Filling> {
    let n = shape.size() as usize;
    if n == 0 {
        return vec![Filling::empty()];
    }
    (0..n)
        .map(|_| 1..=max)
        .multi_cartesian_product()
        .map(|flat| Filling::from_rows(shape_rows(shape, &flat)).unwrap())
        .collect()
}

/// Weight as a composition, or None when some value in 1..max is missing.
pub fn packed_weight(t: &Filling) -> Option<Composition> {
    let max = t.rows().iter().flatten().copied().max().unwrap_or(0);
    let mut w = vec![0u32; max as usize];
    for &v in t.rows().iter().flatten() {
        w[v as usize - 1] += 1;
    }
    Composition::new(w).ok()
}

/// Semistandard Young tableaux of partition shape (French: rows weakly
/// increase, columns strictly increase upward), bucketed by weight. The
/// bucket sizes are Kostka numbers, so this is the Schur function in the
/// monomial basis.
pub fn kostka_m_expansion(lambda: &Composition) -> MExpr {
    let n = lambda.size();
    let mut coeffs = BTreeMap::new();
    for t in all_fillings(lambda, n) {
        let rows = t.rows();
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        if rows_ok && cols_ok {
            if let Some(gamma) = packed_weight(&t) {
                *coeffs.entry(gamma).or_insert(0i64) += 1;
            }
        }
    }
    if n == 0 {
        coeffs.insert(Composition::empty(), 1);
    }
    MExpr::from_coeffs(n, coeffs).unwrap()
}

fn binomial(m: u64, k: u64) -> i128 {
    if k > m {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (m - i) as i128 / (i + 1) as i128)
}

/// Evaluation at x_1 = ... = x_m = 1, all other variables 0.
pub fn principal(f: &MExpr, m: u64) -> i128 {
    f.coeffs().iter().map(|(alpha, &c)| c as i128 * binomial(m, alpha.len() as u64)).sum()
}

pub fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

pub fn filling(compact: &str) -> Filling {
    compact.parse().unwrap()
}
