//! Python bindings. Structured results cross the boundary as JSON strings;
//! rationals are `"p/q"` strings throughout.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use admissible::format::{parse_arrangement, parse_local_system, ArrangementFile};
use admissible::{aomoto, corpus, Arrangement, LocalSystem, ResidueVector};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(value_error)
}

#[pyclass(name = "Arrangement", module = "admissible_py", frozen)]
pub struct PyArrangement {
    inner: Arrangement,
}

#[pymethods]
impl PyArrangement {
    /// `{"lines": [...]}` as accepted by the command line tool.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_arrangement(text)
            .map(|inner| PyArrangement { inner })
            .map_err(value_error)
    }

    #[staticmethod]
    fn corpus(name: &str) -> PyResult<Self> {
        corpus::arrangement(name)
            .map(|inner| PyArrangement { inner })
            .map_err(value_error)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&ArrangementFile::from_arrangement(&self.inner))
    }

    #[getter]
    fn num_lines(&self) -> usize {
        self.inner.num_lines()
    }

    /// `(coordinates, incident lines)` for every point of multiplicity ≥ 3.
    fn multiple_points(&self) -> Vec<(Vec<String>, Vec<usize>)> {
        self.inner
            .triple_points()
            .into_iter()
            .map(|p| {
                (
                    p.point.coords().iter().map(ToString::to_string).collect(),
                    p.incident,
                )
            })
            .collect()
    }

    /// `(k, minimal covers, has a concurrent minimal cover)`.
    fn classify(&self) -> (usize, Vec<Vec<usize>>, bool) {
        let c = admissible::classify(&self.inner);
        (c.k, c.minimal_covers, c.concurrent_flag)
    }

    /// The verdict as JSON.
    #[pyo3(signature = (system, bound = admissible::admissibility::DEFAULT_SEARCH_BOUND))]
    fn decide(&self, system: &PyLocalSystem, bound: u32) -> PyResult<String> {
        let v = admissible::decide(&self.inner, &system.inner, bound).map_err(value_error)?;
        to_json(&v)
    }

    /// Whether `residues` (a JSON list of `{"re", "im"}`) satisfies the
    /// admissibility conditions for `system`.
    fn verify(&self, residues: &str, system: &PyLocalSystem) -> PyResult<bool> {
        let alpha: ResidueVector = serde_json::from_str(residues).map_err(value_error)?;
        admissible::verify(&self.inner, &alpha, &system.inner)
            .map(|r| r.is_ok())
            .map_err(value_error)
    }

    /// `(h0, h1, h2)` of the Aomoto complex for a JSON residue vector.
    fn aomoto(&self, residues: &str, base: usize) -> PyResult<(usize, usize, usize)> {
        if base >= self.inner.num_lines() {
            return Err(PyIndexError::new_err(format!("no line {base}")));
        }
        let alpha: ResidueVector = serde_json::from_str(residues).map_err(value_error)?;
        let d = aomoto::aomoto_dims(&self.inner, &alpha, base).map_err(value_error)?;
        Ok((d.h0, d.h1, d.h2))
    }

    fn __len__(&self) -> usize {
        self.inner.num_lines()
    }

    fn __repr__(&self) -> String {
        format!("Arrangement({} lines)", self.inner.num_lines())
    }
}

#[pyclass(name = "LocalSystem", module = "admissible_py", frozen)]
pub struct PyLocalSystem {
    inner: LocalSystem,
}

#[pymethods]
impl PyLocalSystem {
    /// `{"classes": [{"re": "p/q", "im": "p/q"}, ...]}`
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_local_system(text)
            .map(|inner| PyLocalSystem { inner })
            .map_err(value_error)
    }

    #[staticmethod]
    fn corpus(entry: &str, name: &str) -> PyResult<Self> {
        let e = corpus::get(entry).map_err(value_error)?;
        e.system(name)
            .map(|inner| PyLocalSystem { inner })
            .ok_or_else(|| value_error(format!("no system `{name}` in `{entry}`")))
    }

    /// Classes as `"a+bi"` strings, real parts in `[0, 1)`.
    fn classes(&self) -> Vec<String> {
        self.inner.classes().iter().map(ToString::to_string).collect()
    }

    /// The standard lift at `base` as a JSON residue list.
    fn standard_lift(&self, base: usize) -> PyResult<String> {
        let lift = admissible::standard_lift(&self.inner, base).map_err(value_error)?;
        to_json(&lift)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("LocalSystem([{}])", self.classes().join(", "))
    }
}

#[pyfunction]
fn corpus_names() -> Vec<&'static str> {
    corpus::list()
}

/// Adds the classes and functions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyArrangement>()?;
    m.add_class::<PyLocalSystem>()?;
    m.add_function(wrap_pyfunction!(corpus_names, m)?)?;
    Ok(())
}

#[pymodule]
fn admissible_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
