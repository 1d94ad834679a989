use std::collections::BTreeSet;

use super::expr::{Basis, BasisExpansion, MExpr};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableau::{enumerate_semistandard, enumerate_standard, Filling, TableauKind};

/// F_α as the sum of M_β over refinements β of α.
pub fn f_to_m(alpha: &Composition) -> MExpr {
    let mut out = MExpr::zero(alpha.size());
    for beta in alpha.refinements() {
        out.add_term(&beta, 1).expect("refinements keep the degree");
    }
    out
}

/// Inverts the refinement sum: M_β = Σ (−1)^(ℓ(γ)−ℓ(β)) F_γ over refinements γ of β.
pub fn m_to_f(f: &MExpr) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::zero(Basis::Fundamental, f.degree());
    for (beta, &c) in f.coeffs() {
        for gamma in beta.refinements() {
            let sign = if (gamma.len() - beta.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(&gamma, sign * c)?;
        }
    }
    Ok(out)
}

fn descent_expansion(alpha: &Composition, kind: TableauKind) -> BasisExpansion {
    let n = alpha.size();
    let mut out = BasisExpansion::zero(Basis::Fundamental, n);
    for t in enumerate_standard(alpha, kind) {
        let des: BTreeSet<u32> = match kind {
            TableauKind::YoungComposition => t.young_descent_set(),
            TableauKind::Immaculate => t.immaculate_descent_set(),
        }
        .expect("enumerated fillings are standard");
        let beta = Composition::from_descent_set(&des, n).expect("descents lie in 1..n-1");
        out.add_term(&beta, 1).expect("same degree");
    }
    out
}

/// Fundamental expansion of the Young quasisymmetric Schur function, by
/// Young descent sets of standard Young composition tableaux.
pub fn yqs_f_expansion(alpha: &Composition) -> BasisExpansion {
    descent_expansion(alpha, TableauKind::YoungComposition)
}

/// Fundamental expansion of the dual immaculate function, by immaculate
/// descent sets of standard immaculate tableaux.
pub fn dimm_f_expansion(alpha: &Composition) -> BasisExpansion {
    descent_expansion(alpha, TableauKind::Immaculate)
}

/// Monomial expansion of a single basis element.
pub fn basis_element(basis: Basis, alpha: &Composition) -> Result<MExpr> {
    match basis {
        Basis::Monomial => Ok(MExpr::monomial(alpha)),
        Basis::Fundamental => Ok(f_to_m(alpha)),
        Basis::YoungQs => yqs_f_expansion(alpha).to_mexpr(),
        Basis::DualImmaculate => dimm_f_expansion(alpha).to_mexpr(),
        Basis::Immaculate | Basis::YoungNcSchur => Err(Error::NotQuasisymmetric(basis.to_string())),
    }
}

/// Number of semistandard fillings of shape `alpha` (of the given kind) with
/// weight exactly `gamma`: the coefficient of M_γ, counted directly.
pub fn monomial_coefficient_oracle(kind: TableauKind, alpha: &Composition, gamma: &Composition) -> Result<u64> {
    if alpha.size() != gamma.size() {
        return Err(Error::DegreeMismatch { left: alpha.size(), right: gamma.size() });
    }
    if alpha.is_empty() {
        return Ok(1);
    }
    let count =
        enumerate_semistandard(alpha, kind, gamma.len() as u32).iter().filter(|t| t.weight() == gamma.parts()).count();
    Ok(count as u64)
}

/// All M-coefficients at once from one enumeration with entries ≤ n.
pub fn monomial_oracle(kind: TableauKind, alpha: &Composition) -> MExpr {
    let n = alpha.size();
    let mut out = MExpr::zero(n);
    if alpha.is_empty() {
        out.add_term(alpha, 1).expect("degree 0");
        return out;
    }
    for t in enumerate_semistandard(alpha, kind, n) {
        if let Some(gamma) = packed_weight(&t) {
            out.add_term(&gamma, 1).expect("weight has the filling's size");
        }
    }
    out
}

// Weight as a composition, when no value below the maximum is skipped.
fn packed_weight(t: &Filling) -> Option<Composition> {
    Composition::new(t.weight()).ok()
}

/// Schur function as the sum of Young quasisymmetric Schur functions over
/// all rearrangements of `lambda`.
pub fn schur_m_expansion(lambda: &Composition) -> Result<MExpr> {
    if !lambda.is_partition() {
        return Err(Error::NotPartition(lambda.clone()));
    }
    let mut out = MExpr::zero(lambda.size());
    for alpha in lambda.rearrangements() {
        out.add_scaled(&basis_element(Basis::YoungQs, &alpha)?, 1)?;
    }
    Ok(out)
}
