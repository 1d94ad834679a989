use std::collections::{BTreeMap, HashMap};

use super::expr::MExpr;
use crate::composition::Composition;
use crate::error::{Error, Result};

/// Product of quasisymmetric functions, computed termwise with the
/// overlapping shuffle of compositions.
pub fn quasi_shuffle(f: &MExpr, g: &MExpr) -> Result<MExpr> {
    let mut out = MExpr::zero(f.degree() + g.degree());
    for (a, &ca) in f.coeffs() {
        for (b, &cb) in g.coeffs() {
            let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
            for (gamma, mult) in monomial_product(a.parts(), b.parts()) {
                let m = i64::try_from(mult).map_err(|_| Error::Overflow)?;
                out.add_term(&Composition::from_positive(gamma), c.checked_mul(m).ok_or(Error::Overflow)?)?;
            }
        }
    }
    Ok(out)
}

type Terms = BTreeMap<Vec<u32>, u64>;

fn monomial_product(a: &[u32], b: &[u32]) -> Terms {
    // memo over suffix positions (i, j)
    fn rec(a: &[u32], b: &[u32], i: usize, j: usize, memo: &mut HashMap<(usize, usize), Terms>) -> Terms {
        if i == a.len() || j == b.len() {
            let rest = if i == a.len() { &b[j..] } else { &a[i..] };
            return Terms::from([(rest.to_vec(), 1)]);
        }
        if let Some(t) = memo.get(&(i, j)) {
            return t.clone();
        }
        let mut out = Terms::new();
        for (head, tail) in [
            (a[i], rec(a, b, i + 1, j, memo)),
            (b[j], rec(a, b, i, j + 1, memo)),
            (a[i] + b[j], rec(a, b, i + 1, j + 1, memo)),
        ] {
            for (word, m) in tail {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(head);
                w.extend(word);
                *out.entry(w).or_insert(0) += m;
            }
        }
        memo.insert((i, j), out.clone());
        out
    }
    rec(a, b, 0, 0, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn small_products() {
        let m1 = MExpr::monomial(&comp![1]);
        let sq = quasi_shuffle(&m1, &m1).unwrap();
        assert_eq!(sq, MExpr::from_coeffs(2, [(comp![1, 1], 2), (comp![2], 1)].into()).unwrap());
        let m2 = MExpr::monomial(&comp![2]);
        assert_eq!(
            quasi_shuffle(&m1, &m2).unwrap(),
            MExpr::from_coeffs(3, [(comp![1, 2], 1), (comp![2, 1], 1), (comp![3], 1)].into()).unwrap()
        );
        let a = MExpr::monomial(&comp![1, 3]);
        assert_eq!(quasi_shuffle(&a, &MExpr::monomial(&comp![])).unwrap(), a);
    }
}
