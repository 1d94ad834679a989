//! Exhaustive verification suites over all compositions up to a size bound.
//! Each case records how many checks ran and the first counterexample.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{compositions_of, partitions_of, Composition};
use crate::dirt::{is_dirt, row_strip_shape};
use crate::error::{Error, Result};
use crate::insertion::{insert, insert_word, is_virtuous, rapture};
use crate::qsym::{
    basis_element, dimm_to_yqs, dimm_to_yqs_by_insertion, expand_in, quasi_shuffle, schur_m_expansion, yns_to_imm,
    Basis,
};
use crate::rw_tree::{rw_dual, rw_forward};
use crate::tableau::{enumerate_standard, Entry, Filling, TableauKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Inverse,
    Descents,
    TripleAgreement,
    Symmetry,
    Positivity,
    Dominance,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Inverse, Suite::Descents, Suite::TripleAgreement, Suite::Symmetry, Suite::Positivity, Suite::Dominance];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inverse => "inverse",
            Suite::Descents => "descents",
            Suite::TripleAgreement => "triple-agreement",
            Suite::Symmetry => "symmetry",
            Suite::Positivity => "positivity",
            Suite::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: u32,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{status} {} ({} checks)", c.case, c.checked)?;
            if let Some(x) = &c.counterexample {
                write!(f, ": {x}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        writeln!(f, "{}: {} cases, {} failed, max n = {}", self.suite, self.cases.len(), failed, self.max_n)
    }
}

/// Collects checks for one case, keeping only the first failure.
struct Case {
    name: String,
    checked: usize,
    counterexample: Option<String>,
}

impl Case {
    fn new(name: impl Into<String>) -> Self {
        Case { name: name.into(), checked: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> CaseResult {
        CaseResult {
            case: self.name,
            passed: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

pub fn run_suite(suite: Suite, max_n: u32) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Inverse => per_composition(max_n, inverse_case)?,
        Suite::Descents => per_composition(max_n, descents_case)?,
        Suite::TripleAgreement => per_composition(max_n, triple_agreement_case)?,
        Suite::Symmetry => per_composition(max_n, symmetry_case)?,
        Suite::Positivity => positivity_cases(max_n)?,
        Suite::Dominance => per_composition(max_n, dominance_case)?,
    };
    let passed = cases.iter().all(|c| c.passed);
    Ok(SuiteReport { suite, max_n, passed, cases })
}

fn per_composition(max_n: u32, f: impl Fn(&Composition) -> Result<CaseResult>) -> Result<Vec<CaseResult>> {
    (1..=max_n).flat_map(|n| compositions_of(n, None)).map(|alpha| f(&alpha)).collect()
}

/// Insertion followed by rapture at the new cell, and rapture at every
/// virtuous cell followed by insertion, over every tableau met while
/// inserting reading words of standard immaculate tableaux of shape α.
fn inverse_case(alpha: &Composition) -> Result<CaseResult> {
    let mut case = Case::new(format!("alpha={alpha}"));
    for u in enumerate_standard(alpha, TableauKind::Immaculate) {
        let mut t = Filling::empty();
        for k in u.immaculate_reading_word() {
            let ins = insert(&t, k)?;
            let back = rapture(&ins.tableau, ins.new_cell)?;
            let mut path = ins.bumping_path.clone();
            path.reverse();
            case.check(back.tableau == t && back.output == Entry::Finite(k) && back.escape_route == path, || {
                format!("insert {k} into {} then rapture {}", t.to_compact(), ins.new_cell)
            });
            t = ins.tableau;
            rapture_then_insert(&t, &mut case)?;
        }
    }
    Ok(case.finish())
}

fn rapture_then_insert(t: &Filling, case: &mut Case) -> Result<()> {
    for (cell, _) in t.cells() {
        if !is_virtuous(t, cell)? {
            continue;
        }
        let r = rapture(t, cell)?;
        let Entry::Finite(m) = r.output else {
            continue;
        };
        let again = insert(&r.tableau, m)?;
        let mut route = r.escape_route.clone();
        route.reverse();
        case.check(again.tableau == *t && again.bumping_path == route, || {
            format!("rapture {cell} from {} then insert {m}", t.to_compact())
        });
    }
    Ok(())
}

/// Descent sets are preserved and the recording tableau is a DIRT with
/// row strip shape reverse(α).
fn descents_case(alpha: &Composition) -> Result<CaseResult> {
    let mut case = Case::new(format!("alpha={alpha}"));
    for u in enumerate_standard(alpha, TableauKind::Immaculate) {
        let (p, q) = insert_word(&u.immaculate_reading_word())?;
        let ok = u.immaculate_descent_set()? == p.young_descent_set()?;
        case.check(ok, || format!("U={} P={}", u.to_compact(), p.to_compact()));
        let ok = is_dirt(&q) && row_strip_shape(&q)? == alpha.reverse();
        case.check(ok, || {
            format!("U={} Q={} is not a DIRT with strips reverse(alpha)", u.to_compact(), q.to_compact())
        });
    }
    Ok(case.finish())
}

fn triple_agreement_case(alpha: &Composition) -> Result<CaseResult> {
    let mut case = Case::new(format!("alpha={alpha}"));
    let by_dirts = dimm_to_yqs(alpha);
    let by_insertion = dimm_to_yqs_by_insertion(alpha);
    let (_, by_tree) = rw_forward(alpha);
    case.check(by_insertion == by_dirts, || format!("insertion {by_insertion} vs DIRTs {by_dirts}"));
    case.check(by_tree == by_dirts, || format!("forward tree {by_tree} vs DIRTs {by_dirts}"));
    let (_, dual_tree) = rw_dual(alpha);
    let transposed = yns_to_imm(alpha);
    case.check(dual_tree == transposed, || format!("dual tree {dual_tree} vs DIRTs {transposed}"));
    Ok(case.finish())
}

/// The dual immaculate function is symmetric exactly for hooks (n-k, 1^k),
/// where it equals the Schur function.
fn symmetry_case(alpha: &Composition) -> Result<CaseResult> {
    let mut case = Case::new(format!("alpha={alpha}"));
    let f = basis_element(Basis::DualImmaculate, alpha)?;
    let symmetric = f.is_symmetric();
    case.check(symmetric == alpha.is_hook(), || format!("symmetric={symmetric}, hook={}", alpha.is_hook()));
    if alpha.is_hook() {
        let s = schur_m_expansion(alpha)?;
        case.check(f == s, || format!("{f} differs from the Schur function {s}"));
    }
    Ok(case.finish())
}

/// s_λ times a dual immaculate function expands positively in the Young
/// quasisymmetric Schur basis; one product must fail to be dual immaculate
/// positive.
fn positivity_cases(max_n: u32) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for total in 2..=max_n {
        for m in 1..total {
            for lambda in partitions_of(m) {
                let s = schur_m_expansion(&lambda)?;
                for alpha in compositions_of(total - m, None) {
                    let mut case = Case::new(format!("lambda={lambda} alpha={alpha}"));
                    let product = quasi_shuffle(&s, &basis_element(Basis::DualImmaculate, &alpha)?)?;
                    let e = expand_in(&product, Basis::YoungQs)?;
                    case.check(e.coeffs().values().all(|&c| c >= 0), || format!("expansion {e}"));
                    out.push(case.finish());
                }
            }
        }
    }
    if max_n >= 4 {
        let mut case = Case::new("negative witness lambda=2,1 alpha=1");
        let s = schur_m_expansion(&Composition::new(vec![2, 1])?)?;
        let product = quasi_shuffle(&s, &basis_element(Basis::DualImmaculate, &Composition::new(vec![1])?)?)?;
        let e = expand_in(&product, Basis::DualImmaculate)?;
        case.check(e.coeffs().values().any(|&c| c < 0), || format!("no negative coefficient in {e}"));
        out.push(case.finish());
    }
    Ok(out)
}

/// Nonzero coefficients sit below α in dominance order with the same
/// length, and the diagonal coefficient is 1. A partition λ indexes a
/// nonzero coefficient only on the diagonal, and the dual expansion of a
/// partition is the single term λ.
fn dominance_case(alpha: &Composition) -> Result<CaseResult> {
    let mut case = Case::new(format!("alpha={alpha}"));
    let e = dimm_to_yqs(alpha);
    for beta in e.coeffs().keys() {
        let ok = alpha.dominates(beta)? && beta.len() == alpha.len();
        case.check(ok, || format!("coefficient at {beta} but alpha does not dominate it"));
        case.check(!beta.is_partition() || beta == alpha, || format!("partition {beta} appears off the diagonal"));
    }
    case.check(e.coeff(alpha) == 1, || format!("diagonal coefficient {}", e.coeff(alpha)));
    if alpha.is_partition() {
        let d = yns_to_imm(alpha);
        case.check(d.coeffs().len() == 1 && d.coeff(alpha) == 1, || format!("partition dual expands as {d}"));
    }
    Ok(case.finish())
}

/// Refuses sizes above `limit` unless forced.
pub fn check_guard(max_n: u32, limit: u32, force: bool) -> Result<()> {
    if max_n > limit && !force {
        return Err(Error::GuardExceeded { requested: max_n, limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_size() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 4).unwrap();
            assert!(r.passed, "{r}");
            assert!(!r.cases.is_empty());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
