use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::expansions::{basis_element, m_to_f};
use super::expr::{Basis, BasisExpansion, MExpr};
use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};

/// Inverse of the matrix whose column α is the monomial expansion of the
/// basis element indexed by α, over all compositions of one degree.
struct ChangeOfBasis {
    index: Vec<Composition>,
    position: HashMap<Composition, usize>,
    // inverse[α][γ]
    inverse: Vec<Vec<BigRational>>,
}

type Cache = RwLock<HashMap<(Basis, u32), Arc<ChangeOfBasis>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn change_of_basis(basis: Basis, degree: u32) -> Result<Arc<ChangeOfBasis>> {
    if let Some(hit) = cache().read().expect("cache lock").get(&(basis, degree)) {
        return Ok(hit.clone());
    }
    let mut guard = cache().write().expect("cache lock");
    if let Some(hit) = guard.get(&(basis, degree)) {
        return Ok(hit.clone());
    }
    let built = Arc::new(build(basis, degree)?);
    guard.insert((basis, degree), built.clone());
    Ok(built)
}

fn build(basis: Basis, degree: u32) -> Result<ChangeOfBasis> {
    let index = compositions_of(degree, None);
    let position: HashMap<Composition, usize> = index.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let dim = index.len();
    let mut matrix = vec![vec![BigRational::zero(); dim]; dim];
    for (col, alpha) in index.iter().enumerate() {
        for (gamma, &c) in basis_element(basis, alpha)?.coeffs() {
            matrix[position[gamma]][col] = BigRational::from_integer(BigInt::from(c));
        }
    }
    let inverse = invert(matrix).ok_or(Error::Singular(degree))?;
    Ok(ChangeOfBasis { index, position, inverse })
}

/// Gauss-Jordan inversion over the rationals.
fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        if !p.is_one() {
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x /= &p;
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                if !a[col][c].is_zero() {
                    let d = &factor * &a[col][c];
                    a[r][c] -= d;
                }
                if !inv[col][c].is_zero() {
                    let d = &factor * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
    }
    Some(inv)
}

/// Coefficients of `f` in a quasisymmetric basis, by exact linear solve.
/// Every result must be integral.
pub fn expand_in(f: &MExpr, target: Basis) -> Result<BasisExpansion> {
    match target {
        Basis::Monomial => BasisExpansion::from_coeffs(Basis::Monomial, f.degree(), f.coeffs().clone()),
        Basis::Fundamental => m_to_f(f),
        Basis::YoungQs | Basis::DualImmaculate => solve(f, target),
        Basis::Immaculate | Basis::YoungNcSchur => Err(Error::NotQuasisymmetric(target.to_string())),
    }
}

fn solve(f: &MExpr, target: Basis) -> Result<BasisExpansion> {
    let cob = change_of_basis(target, f.degree())?;
    let rhs: Vec<(usize, BigRational)> = f
        .coeffs()
        .iter()
        .map(|(gamma, &c)| (cob.position[gamma], BigRational::from_integer(BigInt::from(c))))
        .collect();
    let mut out = BasisExpansion::zero(target, f.degree());
    for (row, alpha) in cob.inverse.iter().zip(&cob.index) {
        let mut x = BigRational::zero();
        for (j, c) in &rhs {
            if !row[*j].is_zero() {
                x += &row[*j] * c;
            }
        }
        if x.is_zero() {
            continue;
        }
        if !x.is_integer() {
            return Err(Error::NonIntegral { at: alpha.clone(), value: x.to_string() });
        }
        let v = x.to_integer().to_i64().ok_or(Error::Overflow)?;
        out.add_term(alpha, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn change_of_basis_examples() {
        let d22 = basis_element(Basis::DualImmaculate, &comp![2, 2]).unwrap();
        let e = expand_in(&d22, Basis::YoungQs).unwrap();
        assert_eq!(e.coeffs(), &[(comp![2, 2], 1), (comp![1, 3], 1)].into());

        let y21 = basis_element(Basis::YoungQs, &comp![2, 1]).unwrap();
        let e = expand_in(&y21, Basis::DualImmaculate).unwrap();
        assert_eq!(e.coeffs(), &[(comp![2, 1], 1), (comp![1, 2], -1)].into());

        let f11 = basis_element(Basis::Fundamental, &comp![1, 1]).unwrap();
        assert_eq!(expand_in(&f11, Basis::Fundamental).unwrap().coeffs(), &[(comp![1, 1], 1)].into());

        assert!(expand_in(&f11, Basis::Immaculate).is_err());
    }

    #[test]
    fn round_trip_through_every_basis() {
        for n in 0..=5 {
            for alpha in compositions_of(n, None) {
                for basis in [Basis::Monomial, Basis::Fundamental, Basis::YoungQs, Basis::DualImmaculate] {
                    let m = basis_element(basis, &alpha).unwrap();
                    let e = expand_in(&m, basis).unwrap();
                    assert_eq!(e.coeffs(), &[(alpha.clone(), 1)].into(), "{basis} {alpha:?}");
                    assert_eq!(e.to_mexpr().unwrap(), m);
                }
            }
        }
    }
}
