//! Quasisymmetric functions with exact integer coefficients.
//!
//! Every quasisymmetric element is reduced to an [`MExpr`] (monomial basis).
//! The two noncommutative bases only appear as labels on coefficient tables.

mod conjectures;
mod decomposition;
mod expansions;
mod expr;
mod product;
mod route;
mod solve;

pub use conjectures::{
    check_conjectures, AlternatingSumWitness, BoundWitness, ConjectureReport, ExpansionRow, HookSumWitness, Outcome,
};
pub use decomposition::{dimm_to_yqs, dimm_to_yqs_by_insertion, yns_to_imm};
pub use expansions::{
    basis_element, dimm_f_expansion, f_to_m, m_to_f, monomial_coefficient_oracle, monomial_oracle, schur_m_expansion,
    yqs_f_expansion,
};
pub use expr::{Basis, BasisExpansion, Coeffs, KeyedCoeffs, MExpr};
pub use product::quasi_shuffle;
pub use route::{convert, convert_expansion};
pub use solve::expand_in;
