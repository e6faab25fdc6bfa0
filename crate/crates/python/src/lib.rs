//! Python bindings. Words cross the boundary as compact strings (`"aB"`),
//! group elements as `(inf, [simple names])`.

use garside::disks::{self, Strategy};
use garside::reversing::{self, SearchOptions};
use garside::valuation;
use garside::{ContextSpec, GarsideContext, GarsideError, Word};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: GarsideError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(text: &str) -> PyResult<Word> {
    text.parse().map_err(err)
}

#[pyclass(name = "RemovablePair", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyPair {
    word: String,
    i: usize,
    j: usize,
    sigma: usize,
    tau: usize,
    e: i8,
    verified: bool,
}

#[pymethods]
impl PyPair {
    fn __repr__(&self) -> String {
        format!("RemovablePair(word={:?}, i={}, j={})", self.word, self.i, self.j)
    }
}

impl From<disks::RemovablePair> for PyPair {
    fn from(p: disks::RemovablePair) -> Self {
        PyPair {
            word: p.word.to_string(),
            i: p.i,
            j: p.j,
            sigma: p.sigma,
            tau: p.tau,
            e: p.e,
            verified: p.verified,
        }
    }
}

#[pyclass(name = "Context", frozen)]
struct PyContext {
    inner: GarsideContext,
}

impl PyContext {
    fn word(&self, text: &str) -> PyResult<Word> {
        let w = parse(text)?;
        w.check_atoms(self.inner.atom_count()).map_err(err)?;
        Ok(w)
    }
}

#[pymethods]
impl PyContext {
    /// Builds a context from `braid:N`, `dihedral:M` or `table:FILE`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let inner = spec.parse::<ContextSpec>().and_then(|s| s.build()).map_err(err)?;
        Ok(PyContext { inner })
    }

    #[staticmethod]
    fn braid(n: usize) -> PyResult<Self> {
        Ok(PyContext { inner: GarsideContext::braid(n).map_err(err)? })
    }

    #[staticmethod]
    fn dihedral(m: usize) -> PyResult<Self> {
        Ok(PyContext { inner: GarsideContext::dihedral(m).map_err(err)? })
    }

    #[staticmethod]
    fn exotic() -> PyResult<Self> {
        Ok(PyContext { inner: GarsideContext::exotic().map_err(err)? })
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind().to_string()
    }

    #[getter]
    fn atom_count(&self) -> usize {
        self.inner.atom_count()
    }

    #[getter]
    fn simple_count(&self) -> usize {
        self.inner.simple_count()
    }

    /// Greedy normal form of a positive word, as simple names.
    fn normalize(&self, word: &str) -> PyResult<Vec<String>> {
        let x = self.inner.normalize(&self.word(word)?).map_err(err)?;
        Ok(x.factors().iter().map(|&s| self.inner.simple_name(s)).collect())
    }

    fn group_element(&self, word: &str) -> PyResult<(i64, Vec<String>)> {
        let x = self.inner.group_element(&self.word(word)?).map_err(err)?;
        Ok((x.inf(), x.body().iter().map(|&s| self.inner.simple_name(s)).collect()))
    }

    fn equivalent(&self, first: &str, second: &str) -> PyResult<bool> {
        self.inner.equivalent(&self.word(first)?, &self.word(second)?).map_err(err)
    }

    fn is_trivial(&self, word: &str) -> PyResult<bool> {
        self.inner.is_trivial(&self.word(word)?).map_err(err)
    }

    /// Whether the simple spelled by a positive word is pure.
    fn is_pure(&self, word: &str) -> PyResult<bool> {
        let x = self.inner.normalize(&self.word(word)?).map_err(err)?;
        match x.factors() {
            [s] => Ok(self.inner.is_pure(*s, None)),
            [] => Ok(self.inner.is_pure(self.inner.identity(), None)),
            _ => Err(PyValueError::new_err(format!("{word:?} is not simple"))),
        }
    }

    fn valuation_sequence(&self, word: &str) -> PyResult<Vec<i64>> {
        let x = self.inner.group_element(&self.word(word)?).map_err(err)?;
        self.inner.valuation_sequence(&x).map_err(err)
    }

    fn type_of(&self, word: &str) -> PyResult<String> {
        let x = self.inner.group_element(&self.word(word)?).map_err(err)?;
        Ok(self.inner.type_of(&x).map_err(err)?.to_string())
    }

    fn find_removable_pairs(&self, word: &str) -> PyResult<Vec<PyPair>> {
        let pairs = disks::find_removable_pairs(&self.inner, &self.word(word)?).map_err(err)?;
        Ok(pairs.into_iter().map(PyPair::from).collect())
    }

    fn is_removable_pair(&self, word: &str, i: usize, j: usize) -> PyResult<bool> {
        disks::is_removable_pair(&self.inner, &self.word(word)?, i, j).map_err(err)
    }

    /// Returns `(trace, residual)`.
    #[pyo3(signature = (word, strategy = "leftmost"))]
    fn unbraid(&self, word: &str, strategy: &str) -> PyResult<(Vec<PyPair>, String)> {
        let strategy: Strategy = strategy.parse().map_err(err)?;
        let out = disks::unbraid(&self.inner, &self.word(word)?, strategy).map_err(err)?;
        Ok((out.trace.into_iter().map(PyPair::from).collect(), out.residual.to_string()))
    }

    fn find_pair_dihedral(&self, word: &str) -> PyResult<PyPair> {
        Ok(disks::find_pair_dihedral(&self.inner, &self.word(word)?).map_err(err)?.into())
    }

    fn find_pair_simple_fraction(&self, u: &str, v: &str) -> PyResult<PyPair> {
        let p = disks::find_pair_simple_fraction(&self.inner, &self.word(u)?, &self.word(v)?).map_err(err)?;
        Ok(p.into())
    }

    /// Returns `(v_prime, u_prime)` with `u⁻¹v = v'u'⁻¹`.
    fn reverse(&self, u: &str, v: &str) -> PyResult<(String, String)> {
        let r = reversing::reverse(&self.inner, &self.word(u)?, &self.word(v)?).map_err(err)?;
        Ok((r.v_prime.to_string(), r.u_prime.to_string()))
    }

    fn seed_word(&self, u: &str, v: &str) -> PyResult<String> {
        Ok(reversing::seed_word(&self.inner, &self.word(u)?, &self.word(v)?).map_err(err)?.to_string())
    }

    fn random_trivial_word(&self, ops: usize, seed: u64) -> String {
        reversing::random_trivial_word(&self.inner, ops, seed).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Context({:?})", self.inner.kind().to_string())
    }
}

#[pyfunction]
fn ordered_bell(n: usize) -> PyResult<u64> {
    valuation::ordered_bell(n).map_err(err)
}

#[pyfunction]
fn enumerate_order_types(n: usize) -> PyResult<Vec<String>> {
    Ok(valuation::enumerate_order_types(n).map_err(err)?.iter().map(|t| t.to_string()).collect())
}

/// Returns the report as JSON lines.
#[pyfunction]
#[pyo3(signature = (strands, length, jobs = 0, dedupe_symmetry = false))]
fn search_counterexamples(py: Python<'_>, strands: usize, length: usize, jobs: usize, dedupe_symmetry: bool) -> PyResult<String> {
    let options = SearchOptions { jobs, dedupe_symmetry, ..SearchOptions::default() };
    let report = py.detach(|| reversing::search_counterexamples(strands, length, &options)).map_err(err)?;
    Ok(report.to_json_lines())
}

#[pymodule]
#[pyo3(name = "garside")]
fn garside_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyContext>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(ordered_bell, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_order_types, m)?)?;
    m.add_function(wrap_pyfunction!(search_counterexamples, m)?)?;
    Ok(())
}
