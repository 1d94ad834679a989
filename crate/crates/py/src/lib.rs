//! Python module `qsc`: tableaux, insertion and rapture, DIRTs, basis
//! changes, trees and the verification suites of qsc-core.
//!
//! Compositions cross the boundary as sequences of positive ints, cells as
//! `(col, row)` tuples (1-based, row 1 at the bottom), and expansions as
//! dicts keyed by tuples in canonical order.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};
use qsc_core::qsym::{self, Basis, BasisExpansion, MExpr};
use qsc_core::verify::{self, Suite};
use qsc_core::{Cell, Composition, Entry, TableauKind};

fn err(e: qsc_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn comp(parts: Vec<u32>) -> PyResult<Composition> {
    Composition::new(parts).map_err(err)
}

fn basis(name: &str) -> PyResult<Basis> {
    name.parse().map_err(err)
}

fn coeff_dict<'py>(py: Python<'py>, coeffs: &qsym::Coeffs) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (alpha, c) in coeffs {
        d.set_item(PyTuple::new(py, alpha.parts())?, c)?;
    }
    Ok(d)
}

fn mexpr(f: &Bound<'_, PyDict>) -> PyResult<MExpr> {
    let mut degree = None;
    let mut out = qsym::Coeffs::new();
    for (k, v) in f.iter() {
        let alpha = comp(k.extract()?)?;
        let c: i64 = v.extract()?;
        match degree {
            Some(d) if d != alpha.size() => return Err(PyValueError::new_err("terms have different degrees")),
            _ => degree = Some(alpha.size()),
        }
        *out.entry(alpha).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    MExpr::from_coeffs(degree.unwrap_or(0), out).map_err(err)
}

/// A filling of a composition diagram; rows listed bottom-up.
#[pyclass(name = "Filling", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFilling(qsc_core::Filling);

#[pymethods]
impl PyFilling {
    #[new]
    fn new(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        qsc_core::Filling::from_rows(rows).map(PyFilling).map_err(err)
    }

    /// Compact form, bottom row first: "2/3,4,7/6,8".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyFilling).map_err(err)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u32>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn shape(&self) -> Vec<u32> {
        self.0.shape().parts().to_vec()
    }

    fn is_ssyct(&self) -> bool {
        self.0.is_ssyct()
    }

    fn is_immaculate(&self) -> bool {
        self.0.is_immaculate()
    }

    fn is_dirt(&self) -> bool {
        qsc_core::is_dirt(&self.0)
    }

    fn row_strip_shape(&self) -> PyResult<Vec<u32>> {
        Ok(qsc_core::row_strip_shape(&self.0).map_err(err)?.parts().to_vec())
    }

    fn immaculate_reading_word(&self) -> Vec<u32> {
        self.0.immaculate_reading_word()
    }

    /// Young reading word; `None` stands for the infinite sentinel.
    fn young_reading_word(&self) -> Vec<Option<u32>> {
        self.0.young_reading_word().into_iter().map(Entry::finite).collect()
    }

    fn young_descent_set(&self) -> PyResult<Vec<u32>> {
        Ok(self.0.young_descent_set().map_err(err)?.into_iter().collect())
    }

    fn immaculate_descent_set(&self) -> PyResult<Vec<u32>> {
        Ok(self.0.immaculate_descent_set().map_err(err)?.into_iter().collect())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("fillings serialize")
    }

    fn __str__(&self) -> String {
        self.0.to_compact()
    }

    fn __repr__(&self) -> String {
        format!("Filling.parse({:?})", self.0.to_compact())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }
}

#[pyclass(name = "InsertionResult", frozen, get_all, skip_from_py_object)]
struct PyInsertion {
    tableau: PyFilling,
    new_cell: (usize, usize),
    bumping_path: Vec<(usize, usize)>,
    /// Step-by-step trace as JSON.
    trace: String,
}

#[pyclass(name = "RaptureResult", frozen, get_all, skip_from_py_object)]
struct PyRapture {
    tableau: PyFilling,
    /// `None` when the output is the infinite sentinel.
    output: Option<u32>,
    escape_route: Vec<(usize, usize)>,
    trace: String,
}

fn cells(path: &[Cell]) -> Vec<(usize, usize)> {
    path.iter().map(|&c| c.into()).collect()
}

#[pyfunction]
fn insert(t: PyRef<'_, PyFilling>, k: u32) -> PyResult<PyInsertion> {
    let r = qsc_core::insert(&t.0, k).map_err(err)?;
    Ok(PyInsertion {
        new_cell: r.new_cell.into(),
        bumping_path: cells(&r.bumping_path),
        trace: serde_json::to_string(&r.trace).expect("traces serialize"),
        tableau: PyFilling(r.tableau),
    })
}

#[pyfunction]
fn rapture(t: PyRef<'_, PyFilling>, cell: (usize, usize)) -> PyResult<PyRapture> {
    let r = qsc_core::rapture(&t.0, cell.into()).map_err(err)?;
    Ok(PyRapture {
        output: r.output.finite(),
        escape_route: cells(&r.escape_route),
        trace: serde_json::to_string(&r.trace).expect("traces serialize"),
        tableau: PyFilling(r.tableau),
    })
}

#[pyfunction]
fn is_virtuous(t: PyRef<'_, PyFilling>, cell: (usize, usize)) -> PyResult<bool> {
    qsc_core::is_virtuous(&t.0, cell.into()).map_err(err)
}

/// Inserts the word into the empty tableau; returns (P, Q).
#[pyfunction]
fn insert_word(word: Vec<u32>) -> PyResult<(PyFilling, PyFilling)> {
    let (p, q) = qsc_core::insert_word(&word).map_err(err)?;
    Ok((PyFilling(p), PyFilling(q)))
}

#[pyfunction]
fn uninsert(p: PyRef<'_, PyFilling>, q: PyRef<'_, PyFilling>) -> PyResult<Vec<u32>> {
    qsc_core::uninsert(&p.0, &q.0).map_err(err)
}

fn kind(name: &str) -> PyResult<TableauKind> {
    match name {
        "immaculate" => Ok(TableauKind::Immaculate),
        "young-composition" | "young_composition" | "ssyct" => Ok(TableauKind::YoungComposition),
        _ => Err(PyValueError::new_err(format!("unknown tableau kind {name:?}"))),
    }
}

/// Standard tableaux of `shape`, or semistandard ones with entries up to
/// `max_entry` when given.
#[pyfunction]
#[pyo3(signature = (shape, kind_name = "immaculate", max_entry = None))]
fn enumerate_tableaux(shape: Vec<u32>, kind_name: &str, max_entry: Option<u32>) -> PyResult<Vec<PyFilling>> {
    let shape = comp(shape)?;
    let k = kind(kind_name)?;
    let all = match max_entry {
        Some(m) => qsc_core::enumerate_semistandard(&shape, k, m),
        None => qsc_core::enumerate_standard(&shape, k),
    };
    Ok(all.into_iter().map(PyFilling).collect())
}

#[pyfunction]
fn enumerate_dirts(shape: Vec<u32>, strips: Vec<u32>) -> PyResult<Vec<PyFilling>> {
    Ok(qsc_core::enumerate_dirts(&comp(shape)?, &comp(strips)?).into_iter().map(PyFilling).collect())
}

#[pyfunction]
fn superstandard(shape: Vec<u32>) -> PyResult<PyFilling> {
    qsc_core::superstandard(&comp(shape)?).map(PyFilling).map_err(err)
}

/// The `from_basis` element for `alpha` written in `to_basis`. Basis names
/// as on the command line: monomial, fundamental, young-qs, dual-immaculate,
/// immaculate, young-ncschur.
#[pyfunction]
fn expand<'py>(py: Python<'py>, from_basis: &str, alpha: Vec<u32>, to_basis: &str) -> PyResult<Bound<'py, PyDict>> {
    let e = qsym::convert(basis(from_basis)?, &comp(alpha)?, basis(to_basis)?).map_err(err)?;
    coeff_dict(py, e.coeffs())
}

/// A monomial-basis dict written in a quasisymmetric basis.
#[pyfunction]
fn expand_in<'py>(py: Python<'py>, f: &Bound<'py, PyDict>, to_basis: &str) -> PyResult<Bound<'py, PyDict>> {
    let e: BasisExpansion = qsym::expand_in(&mexpr(f)?, basis(to_basis)?).map_err(err)?;
    coeff_dict(py, e.coeffs())
}

#[pyfunction]
fn dimm_to_yqs<'py>(py: Python<'py>, alpha: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    coeff_dict(py, qsym::dimm_to_yqs(&comp(alpha)?).coeffs())
}

#[pyfunction]
fn yns_to_imm<'py>(py: Python<'py>, alpha: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    coeff_dict(py, qsym::yns_to_imm(&comp(alpha)?).coeffs())
}

/// Product of two monomial-basis dicts.
#[pyfunction]
fn quasi_shuffle<'py>(py: Python<'py>, f: &Bound<'py, PyDict>, g: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyDict>> {
    let p = qsym::quasi_shuffle(&mexpr(f)?, &mexpr(g)?).map_err(err)?;
    coeff_dict(py, p.coeffs())
}

#[pyfunction]
fn is_symmetric(f: &Bound<'_, PyDict>) -> PyResult<bool> {
    Ok(mexpr(f)?.is_symmetric())
}

#[pyfunction]
fn schur<'py>(py: Python<'py>, lambda: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    coeff_dict(py, qsym::schur_m_expansion(&comp(lambda)?).map_err(err)?.coeffs())
}

/// The forward or dual tree as DOT or JSON text.
#[pyfunction]
#[pyo3(signature = (alpha, direction = "forward", format = "dot"))]
fn tree(alpha: Vec<u32>, direction: &str, format: &str) -> PyResult<String> {
    let alpha = comp(alpha)?;
    let name = alpha.to_string();
    let json = |v: serde_json::Result<String>| v.map_err(|e| PyValueError::new_err(e.to_string()));
    match (direction, format) {
        ("forward", "dot") => Ok(qsc_core::rw_forward(&alpha).0.to_dot(&name)),
        ("dual", "dot") => Ok(qsc_core::rw_dual(&alpha).0.to_dot(&name)),
        ("forward", "json") => json(serde_json::to_string(&qsc_core::rw_forward(&alpha).0)),
        ("dual", "json") => json(serde_json::to_string(&qsc_core::rw_dual(&alpha).0)),
        _ => Err(PyValueError::new_err(format!("unknown direction/format {direction:?}/{format:?}"))),
    }
}

/// Runs one suite; returns (passed, text report).
#[pyfunction]
fn run_suite(suite: &str, max_n: u32) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let report = verify::run_suite(suite, max_n).map_err(err)?;
    Ok((report.passed, report.to_string()))
}

/// Conjecture report for size n; returns (all hold, text report).
#[pyfunction]
fn conjectures(n: u32) -> PyResult<(bool, String)> {
    let report = qsym::check_conjectures(n).map_err(err)?;
    Ok((report.all_hold(), report.to_string()))
}

#[pymodule]
fn qsc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFilling>()?;
    m.add_class::<PyInsertion>()?;
    m.add_class::<PyRapture>()?;
    m.add_function(wrap_pyfunction!(insert, m)?)?;
    m.add_function(wrap_pyfunction!(rapture, m)?)?;
    m.add_function(wrap_pyfunction!(is_virtuous, m)?)?;
    m.add_function(wrap_pyfunction!(insert_word, m)?)?;
    m.add_function(wrap_pyfunction!(uninsert, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_dirts, m)?)?;
    m.add_function(wrap_pyfunction!(superstandard, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(expand_in, m)?)?;
    m.add_function(wrap_pyfunction!(dimm_to_yqs, m)?)?;
    m.add_function(wrap_pyfunction!(yns_to_imm, m)?)?;
    m.add_function(wrap_pyfunction!(quasi_shuffle, m)?)?;
    m.add_function(wrap_pyfunction!(is_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(tree, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(conjectures, m)?)?;
    Ok(())
}
