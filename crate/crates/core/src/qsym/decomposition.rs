use std::collections::HashSet;

use super::expr::{Basis, BasisExpansion};
use crate::composition::{compositions_of, Composition};
use crate::dirt::enumerate_dirts;
use crate::insertion::insert_word;
use crate::tableau::{enumerate_standard, TableauKind};

/// Young quasisymmetric Schur expansion of the dual immaculate function:
/// the coefficient at β counts DIRTs of shape β with row strip shape
/// reverse(α). Only β of the same length can contribute.
pub fn dimm_to_yqs(alpha: &Composition) -> BasisExpansion {
    let strips = alpha.reverse();
    let mut out = BasisExpansion::zero(Basis::YoungQs, alpha.size());
    for beta in compositions_of(alpha.size(), Some(alpha.len())) {
        let count = enumerate_dirts(&beta, &strips).len() as i64;
        out.add_term(&beta, count).expect("same degree");
    }
    out
}

/// Immaculate expansion of the Young noncommutative Schur function: the
/// coefficient at β counts DIRTs of shape α with row strip shape reverse(β).
pub fn yns_to_imm(alpha: &Composition) -> BasisExpansion {
    let mut out = BasisExpansion::zero(Basis::Immaculate, alpha.size());
    for beta in compositions_of(alpha.size(), Some(alpha.len())) {
        let count = enumerate_dirts(alpha, &beta.reverse()).len() as i64;
        out.add_term(&beta, count).expect("same degree");
    }
    out
}

/// The same coefficients as [`dimm_to_yqs`], read off the distinct recording
/// tableaux produced by inserting the reading word of every standard
/// immaculate tableau of shape α.
pub fn dimm_to_yqs_by_insertion(alpha: &Composition) -> BasisExpansion {
    let mut recordings = HashSet::new();
    for u in enumerate_standard(alpha, TableauKind::Immaculate) {
        let (_, q) = insert_word(&u.immaculate_reading_word()).expect("reading words are duplicate free");
        recordings.insert(q);
    }
    let mut out = BasisExpansion::zero(Basis::YoungQs, alpha.size());
    for q in recordings {
        out.add_term(q.shape(), 1).expect("same degree");
    }
    out
}
