//! Python bindings: the main types and operations of the `ferrers` crate
//! as an extension module. Verdict-style results come back as dicts;
//! domain errors raise `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ferrers::engine::{self, FailureCertificate, FerrersDecision, FerrersWitness};
use ferrers::monomial::{self, BiDegree};
use ferrers::oracle::{self, OracleLimits};
use ferrers::partition;
use ferrers::table::HilbertTable;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A weakly decreasing tuple of naturals inside a declared box.
#[pyclass(name = "SidedPartition", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySidedPartition {
    inner: partition::SidedPartition,
}

#[pymethods]
impl PySidedPartition {
    #[new]
    fn new(entries: Vec<usize>, sides: (usize, usize)) -> PyResult<Self> {
        let inner = partition::SidedPartition::new(sides, entries).map_err(value_err)?;
        Ok(PySidedPartition { inner })
    }

    /// Parse the text form, e.g. "(3,3,1,1)@(3,4)".
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        Ok(PySidedPartition {
            inner: s.parse().map_err(value_err)?,
        })
    }

    #[getter]
    fn entries(&self) -> Vec<usize> {
        self.inner.entries().to_vec()
    }

    #[getter]
    fn sides(&self) -> (usize, usize) {
        self.inner.sides()
    }

    fn weight(&self) -> usize {
        self.inner.weight()
    }

    fn size(&self) -> PyResult<(usize, usize)> {
        self.inner.size().map_err(value_err)
    }

    fn meet(&self, other: &PySidedPartition) -> PyResult<Self> {
        Ok(PySidedPartition {
            inner: self.inner.meet(&other.inner).map_err(value_err)?,
        })
    }

    fn leq(&self, other: &PySidedPartition) -> PyResult<bool> {
        self.inner.leq(&other.inner).map_err(value_err)
    }

    fn lift_row(&self) -> Self {
        PySidedPartition {
            inner: self.inner.lift_row(),
        }
    }

    fn lift_col(&self) -> PyResult<Self> {
        Ok(PySidedPartition {
            inner: self.inner.lift_col().map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// An exponent quadruple x1^a x2^b y1^c y2^d.
#[pyclass(name = "BiMonomial", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyBiMonomial {
    inner: monomial::BiMonomial,
}

#[pymethods]
impl PyBiMonomial {
    #[new]
    fn new(x1: usize, x2: usize, y1: usize, y2: usize) -> Self {
        PyBiMonomial {
            inner: monomial::BiMonomial::new(x1, x2, y1, y2),
        }
    }

    /// Parse "x1^2 x2 y1^3", "1", or an exponent quadruple "2 1 3 0".
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        Ok(PyBiMonomial {
            inner: s.parse().map_err(value_err)?,
        })
    }

    #[getter]
    fn exponents(&self) -> (usize, usize, usize, usize) {
        let m = self.inner;
        (m.x1, m.x2, m.y1, m.y2)
    }

    fn bidegree(&self) -> (usize, usize) {
        let d = self.inner.bidegree();
        (d.x, d.y)
    }

    fn divides(&self, other: &PyBiMonomial) -> bool {
        self.inner.divides(&other.inner)
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// A monomial ideal given by generators; membership is divisibility.
#[pyclass(name = "MonomialBiIdeal")]
#[derive(Clone)]
struct PyMonomialBiIdeal {
    inner: ferrers::MonomialBiIdeal,
}

#[pymethods]
impl PyMonomialBiIdeal {
    #[new]
    fn new(generators: Vec<PyBiMonomial>) -> Self {
        PyMonomialBiIdeal {
            inner: ferrers::MonomialBiIdeal::new(generators.into_iter().map(|m| m.inner)),
        }
    }

    /// Parse an ideal file: one monomial per line, `#` comments allowed.
    #[staticmethod]
    fn parse_text(s: &str) -> PyResult<Self> {
        Ok(PyMonomialBiIdeal {
            inner: ferrers::MonomialBiIdeal::parse_text(s).map_err(value_err)?,
        })
    }

    #[getter]
    fn generators(&self) -> Vec<PyBiMonomial> {
        self.inner
            .generators()
            .iter()
            .map(|&m| PyBiMonomial { inner: m })
            .collect()
    }

    fn contains(&self, m: &PyBiMonomial) -> bool {
        self.inner.contains(&m.inner)
    }

    fn hilbert_value(&self, a: usize, b: usize) -> usize {
        self.inner.hilbert_value(BiDegree::new(a, b))
    }

    fn hilbert_table(&self, bound_a: usize, bound_b: usize) -> PyHilbertTable {
        PyHilbertTable {
            inner: self.inner.hilbert_table(BiDegree::new(bound_a, bound_b)),
        }
    }

    /// The slice partition at one bidegree; raises on a non-bilex slice.
    fn alpha_at(&self, a: usize, b: usize) -> PyResult<PySidedPartition> {
        Ok(PySidedPartition {
            inner: self
                .inner
                .alpha_at(BiDegree::new(a, b))
                .map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self
            .inner
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        format!("MonomialBiIdeal({})", gens.join(", "))
    }
}

/// A rectangle of Hilbert values.
#[pyclass(name = "HilbertTable", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyHilbertTable {
    inner: HilbertTable,
}

#[pymethods]
impl PyHilbertTable {
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyHilbertTable {
            inner: HilbertTable::new(rows).map_err(value_err)?,
        })
    }

    /// Parse the text form: one row per line, `#` comments allowed.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        Ok(PyHilbertTable {
            inner: s.parse().map_err(value_err)?,
        })
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows().to_vec()
    }

    #[getter]
    fn bounds(&self) -> (usize, usize) {
        let b = self.inner.bounds();
        (b.x, b.y)
    }

    fn get(&self, i: usize, j: usize) -> usize {
        self.inner.get(i, j)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HilbertTable({:?})", self.inner.rows())
    }
}

fn witness_to_py(witness: &FerrersWitness) -> Vec<Vec<PySidedPartition>> {
    witness
        .grid()
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| PySidedPartition { inner: p.clone() })
                .collect()
        })
        .collect()
}

fn witness_from_py(grid: Vec<Vec<PySidedPartition>>) -> PyResult<FerrersWitness> {
    let grid = grid
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.inner).collect())
        .collect();
    FerrersWitness::from_grid(grid).map_err(value_err)
}

/// All partitions of h with the given sides, in canonical order.
#[pyfunction]
fn enumerate_partitions(h: usize, l1: usize, l2: usize) -> Vec<PySidedPartition> {
    partition::enumerate_partitions(h, (l1, l2))
        .into_iter()
        .map(|inner| PySidedPartition { inner })
        .collect()
}

/// The set of sizes of partitions of h with the given sides.
#[pyfunction]
fn enumerate_sizes(h: usize, l1: usize, l2: usize) -> Vec<(usize, usize)> {
    partition::enumerate_sizes(h, (l1, l2))
        .into_iter()
        .collect()
}

/// The maximal sizes under the componentwise order.
#[pyfunction]
fn maximal_sizes(h: usize, l1: usize, l2: usize) -> Vec<(usize, usize)> {
    partition::maximal_sizes(h, (l1, l2)).into_iter().collect()
}

/// The dictionary monomial T(p,q) at bidegree (a,b); None when p or q is 0.
#[pyfunction]
fn t_monomial(p: usize, q: usize, a: usize, b: usize) -> PyResult<Option<PyBiMonomial>> {
    let m = monomial::t_monomial(p, q, BiDegree::new(a, b)).map_err(value_err)?;
    Ok(m.map(|inner| PyBiMonomial { inner }))
}

/// None on pass, otherwise the violation text.
#[pyfunction]
fn quick_filters(table: &PyHilbertTable) -> Option<String> {
    engine::quick_filters(&table.inner)
        .err()
        .map(|v| v.to_string())
}

/// None on pass, otherwise the violation text.
#[pyfunction]
fn growth_bound_ok(table: &PyHilbertTable) -> Option<String> {
    engine::growth_bound_ok(&table.inner)
        .err()
        .map(|v| v.to_string())
}

/// None on pass, otherwise the violation text.
#[pyfunction]
fn diagonal_osequence_ok(table: &PyHilbertTable) -> Option<String> {
    engine::diagonal_osequence_ok(&table.inner)
        .err()
        .map(|v| v.to_string())
}

/// Decide the table. Returns {"yes": True, "witness": grid} or
/// {"yes": False, "cell": (i, j), "reason": str, "dead_end_caps": [...]}.
#[pyfunction]
fn is_ferrers(py: Python<'_>, table: &PyHilbertTable) -> PyResult<Py<PyDict>> {
    let out = PyDict::new(py);
    match engine::is_ferrers(&table.inner) {
        FerrersDecision::Yes(w) => {
            out.set_item("yes", true)?;
            out.set_item("witness", witness_to_py(&w))?;
        }
        FerrersDecision::No(cert) => {
            out.set_item("yes", false)?;
            out.set_item("cell", cert.cell())?;
            out.set_item("reason", cert.reason())?;
            if let FailureCertificate::Exhausted { dead_ends, .. } = &cert {
                let caps: Vec<Option<PySidedPartition>> = dead_ends
                    .iter()
                    .map(|d| d.cap.clone().map(|inner| PySidedPartition { inner }))
                    .collect();
                out.set_item("dead_end_caps", caps)?;
            }
        }
    }
    Ok(out.into())
}

/// None on pass, otherwise the violation text.
#[pyfunction]
fn is_admissible(table: &PyHilbertTable) -> Option<String> {
    engine::is_admissible(&table.inner)
        .err()
        .map(|v| v.to_string())
}

/// The constructive witness grid of an admissible table.
#[pyfunction]
fn admissible_to_witness(table: &PyHilbertTable) -> PyResult<Vec<Vec<PySidedPartition>>> {
    let w = engine::admissible_to_witness(&table.inner).map_err(value_err)?;
    Ok(witness_to_py(&w))
}

/// Realize a witnessed table as a monomial ideal with minimal generators.
#[pyfunction]
fn realize_ideal(
    table: &PyHilbertTable,
    witness: Vec<Vec<PySidedPartition>>,
) -> PyResult<PyMonomialBiIdeal> {
    let w = witness_from_py(witness)?;
    let ideal = engine::realize_ideal(&table.inner, &w).map_err(value_err)?;
    Ok(PyMonomialBiIdeal { inner: ideal })
}

/// Brute-force realizability on a small rectangle, bypassing the search.
#[pyfunction]
fn brute_force_realizable(table: &PyHilbertTable) -> PyResult<bool> {
    oracle::brute_force_realizable(&table.inner, &OracleLimits::default()).map_err(value_err)
}

#[pymodule]
fn ferrers_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySidedPartition>()?;
    m.add_class::<PyBiMonomial>()?;
    m.add_class::<PyMonomialBiIdeal>()?;
    m.add_class::<PyHilbertTable>()?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_sizes, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_sizes, m)?)?;
    m.add_function(wrap_pyfunction!(t_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(quick_filters, m)?)?;
    m.add_function(wrap_pyfunction!(growth_bound_ok, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_osequence_ok, m)?)?;
    m.add_function(wrap_pyfunction!(is_ferrers, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_to_witness, m)?)?;
    m.add_function(wrap_pyfunction!(realize_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_realizable, m)?)?;
    Ok(())
}
