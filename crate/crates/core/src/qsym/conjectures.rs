use std::fmt;

use serde::Serialize;

use super::expansions::basis_element;
use super::expr::{Basis, BasisExpansion};
use super::solve::expand_in;
use crate::composition::{compositions_of, partitions_of, Composition};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundWitness {
    pub alpha: Composition,
    pub beta: Composition,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookSumWitness {
    pub alpha: Composition,
    pub sum: i64,
    pub expected: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingSumWitness {
    pub lambda: Composition,
    pub predicted: BasisExpansion,
    pub actual: BasisExpansion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome<W> {
    pub holds: bool,
    pub checked: usize,
    pub witnesses: Vec<W>,
}

impl<W> Outcome<W> {
    fn new(checked: usize, witnesses: Vec<W>) -> Self {
        Outcome { holds: witnesses.is_empty(), checked, witnesses }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionRow {
    pub alpha: Composition,
    pub expansion: BasisExpansion,
}

/// Empirical check of the two conjectures on expanding Young quasisymmetric
/// Schur functions in the dual immaculate basis, for every composition of n.
/// Findings are reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: u32,
    /// Ŝ_α in the dual immaculate basis, for every α ⊨ n.
    pub expansions: Vec<ExpansionRow>,
    /// Every coefficient lies in {−1, 0, 1}.
    pub coefficient_bound: Outcome<BoundWitness>,
    /// Coefficients sum to 1 for α = (1^k, n−k) and to 0 otherwise.
    pub hook_sum: Outcome<HookSumWitness>,
    /// For partitions with distinct parts, Ŝ_λ = Σ_σ sign(σ) 𝔖*_σ(λ).
    pub alternating_sum: Outcome<AlternatingSumWitness>,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.coefficient_bound.holds && self.hook_sum.holds && self.alternating_sum.holds
    }
}

pub fn check_conjectures(n: u32) -> Result<ConjectureReport> {
    let mut expansions = Vec::new();
    let mut bound = Vec::new();
    let mut hook = Vec::new();
    let mut coefficients_checked = 0;
    for alpha in compositions_of(n, None) {
        let e = expand_in(&basis_element(Basis::YoungQs, &alpha)?, Basis::DualImmaculate)?;
        for (beta, &c) in e.coeffs() {
            coefficients_checked += 1;
            if !(-1..=1).contains(&c) {
                bound.push(BoundWitness { alpha: alpha.clone(), beta: beta.clone(), coefficient: c });
            }
        }
        let sum = e.sum()?;
        let expected = i64::from(alpha.is_reverse_hook());
        if sum != expected {
            hook.push(HookSumWitness { alpha: alpha.clone(), sum, expected });
        }
        expansions.push(ExpansionRow { alpha, expansion: e });
    }

    let mut alternating = Vec::new();
    let mut distinct = 0;
    for lambda in partitions_of(n) {
        if lambda.parts().windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        distinct += 1;
        let mut predicted = BasisExpansion::zero(Basis::DualImmaculate, n);
        for sigma in lambda.rearrangements() {
            predicted.add_term(&sigma, sign_of_rearrangement(&sigma))?;
        }
        let actual = &expansions.iter().find(|row| row.alpha == lambda).expect("every α ⊨ n is expanded").expansion;
        if *actual != predicted {
            alternating.push(AlternatingSumWitness { lambda, predicted, actual: actual.clone() });
        }
    }

    Ok(ConjectureReport {
        n,
        expansions,
        coefficient_bound: Outcome::new(coefficients_checked, bound),
        hook_sum: Outcome::new(compositions_of(n, None).len(), hook),
        alternating_sum: Outcome::new(distinct, alternating),
    })
}

// (−1)^(inversions) of the permutation taking the decreasing arrangement of
// distinct parts to `sigma`.
fn sign_of_rearrangement(sigma: &Composition) -> i64 {
    let p = sigma.parts();
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] < p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "no violations"
    } else {
        "VIOLATED"
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for row in &self.expansions {
            writeln!(f, "  Ŝ({}) = {}", row.alpha, row.expansion)?;
        }
        let b = &self.coefficient_bound;
        writeln!(f, "coefficients in {{-1,0,1}}: {} ({} nonzero coefficients checked)", verdict(b.holds), b.checked)?;
        for w in &b.witnesses {
            writeln!(f, "  alpha={} beta={} coefficient={}", w.alpha, w.beta, w.coefficient)?;
        }
        let h = &self.hook_sum;
        writeln!(f, "hook sum rule: {} ({} compositions checked)", verdict(h.holds), h.checked)?;
        for w in &h.witnesses {
            writeln!(f, "  alpha={} sum={} expected={}", w.alpha, w.sum, w.expected)?;
        }
        let a = &self.alternating_sum;
        writeln!(f, "alternating sum for distinct parts: {} ({} partitions checked)", verdict(a.holds), a.checked)?;
        for w in &a.witnesses {
            writeln!(f, "  lambda={} predicted {} but got {}", w.lambda, w.predicted, w.actual)?;
        }
        Ok(())
    }
}
