//! Change of basis for single elements and for whole expansions, picking
//! the direct combinatorial rule when one exists.

use super::decomposition::{dimm_to_yqs, yns_to_imm};
use super::expansions::{basis_element, dimm_f_expansion, yqs_f_expansion};
use super::expr::{Basis, BasisExpansion};
use super::solve::expand_in;
use crate::composition::Composition;
use crate::error::{Error, Result};

/// The `from` element indexed by `alpha`, written in the `to` basis.
///
/// Dual immaculate to Young and Young noncommutative Schur to immaculate
/// count DIRTs; Young and dual immaculate to fundamental bucket descent
/// sets; any other pair of quasisymmetric bases goes through the monomial
/// basis. The two noncommutative bases convert only along their DIRT rule.
pub fn convert(from: Basis, alpha: &Composition, to: Basis) -> Result<BasisExpansion> {
    match (from, to) {
        (a, b) if a == b => {
            let mut e = BasisExpansion::zero(a, alpha.size());
            e.add_term(alpha, 1)?;
            Ok(e)
        }
        (Basis::DualImmaculate, Basis::YoungQs) => Ok(dimm_to_yqs(alpha)),
        (Basis::YoungNcSchur, Basis::Immaculate) => Ok(yns_to_imm(alpha)),
        (Basis::YoungQs, Basis::Fundamental) => Ok(yqs_f_expansion(alpha)),
        (Basis::DualImmaculate, Basis::Fundamental) => Ok(dimm_f_expansion(alpha)),
        (a, Basis::Monomial) if a.is_quasisymmetric() => {
            let m = basis_element(a, alpha)?;
            BasisExpansion::from_coeffs(Basis::Monomial, m.degree(), m.coeffs().clone())
        }
        (a, b) if a.is_quasisymmetric() && b.is_quasisymmetric() => expand_in(&basis_element(a, alpha)?, b),
        _ => Err(Error::UnsupportedPair { from, to }),
    }
}

/// Converts every term of `e` and sums.
pub fn convert_expansion(e: &BasisExpansion, to: Basis) -> Result<BasisExpansion> {
    let mut total = BasisExpansion::zero(to, e.degree());
    for (alpha, &c) in e.coeffs() {
        total.add_scaled(&convert(e.basis(), alpha, to)?, c)?;
    }
    Ok(total)
}
