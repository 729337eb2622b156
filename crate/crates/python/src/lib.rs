//! Python bindings: `import hompbw`.
//!
//! Elements cross the boundary as strings in the same syntax the command line accepts
//! (`"2*f⊗e - h"`), or as `(letters, "p/q")` term lists. Reports come back as plain dicts.

use std::path::PathBuf;

use hompbw::oracle::{full_verification, negative_control_on};
use hompbw::{fixtures, AlgebraFile, Error, Session, Strategy, TensorElement, Word};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn terms(t: &TensorElement) -> Vec<(Vec<usize>, String)> {
    t.iter().map(|(w, c)| (w.letters().to_vec(), c.to_string())).collect()
}

/// An involutive Hom-Lie algebra loaded into the normal-form engine.
#[pyclass(name = "Algebra", module = "hompbw", frozen)]
struct PyAlgebra {
    session: Session,
}

#[pymethods]
impl PyAlgebra {
    /// Reads the JSON algebra format; `unchecked` skips the axiom gate.
    #[staticmethod]
    #[pyo3(signature = (text, unchecked = false))]
    fn from_json(text: &str, unchecked: bool) -> PyResult<Self> {
        let file = AlgebraFile::from_json(text).map_err(py_err)?;
        Ok(Self { session: Session::new(file, unchecked).map_err(py_err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (path, unchecked = false))]
    fn load(path: PathBuf, unchecked: bool) -> PyResult<Self> {
        Ok(Self { session: Session::load(&path, unchecked).map_err(py_err)? })
    }

    /// One of `sl2`, `twisted-sl2`, `abelian-swap`, `twisted-gl2`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let (_, g) = fixtures::valid_fixtures()
            .into_iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))?;
        let names: Vec<String> = match g.dim() {
            3 => fixtures::SL2_NAMES.iter().map(|s| s.to_string()).collect(),
            4 => ["f", "h", "e", "z"].iter().map(|s| s.to_string()).collect(),
            d => (1..=d).map(|i| format!("y{i}")).collect(),
        };
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let file = AlgebraFile::from_algebra(&g, &refs);
        Ok(Self { session: Session::new(file, false).map_err(py_err)? })
    }

    /// The algebra in the JSON file format.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.session.file).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.session.ctx.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.session.file.basis_names.clone()
    }

    /// Names used when printing engine elements.
    #[getter]
    fn names(&self) -> Vec<String> {
        self.session.names()
    }

    #[getter]
    fn mu(&self) -> i8 {
        self.session.ctx.mu().as_i8()
    }

    #[getter]
    fn sigma(&self) -> Vec<usize> {
        self.session.ctx.sigma().to_vec()
    }

    /// Axiom checks as a list of `{"axiom", "pass", "witness"}` dicts.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.session.ctx.algebra().check_axioms().checks)
    }

    /// The adapted basis: vectors in original coordinates, sigma, mu and eigenspace sizes.
    fn adapted<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.session.ctx.adapted().summary())
    }

    /// Normal form in U of an expression.
    fn normal_form(&self, expr: &str) -> PyResult<String> {
        let t = self.session.normal_form(expr).map_err(py_err)?;
        Ok(self.session.render(&t))
    }

    /// Normal form as `(letters, coefficient)` pairs in engine coordinates.
    fn normal_form_terms(&self, expr: &str) -> PyResult<Vec<(Vec<usize>, String)>> {
        Ok(terms(&self.session.normal_form(expr).map_err(py_err)?))
    }

    /// The reduction `L` on the tensor algebra, without the phi conjugation.
    #[pyo3(signature = (expr, strategy = "leftmost"))]
    fn reduce(&self, expr: &str, strategy: &str) -> PyResult<String> {
        let strategy = match strategy {
            "leftmost" => Strategy::Leftmost,
            "rightmost" => Strategy::Rightmost,
            other => return Err(PyValueError::new_err(format!("unknown strategy `{other}`"))),
        };
        let t = self.session.parse(expr).map_err(py_err)?;
        let r = self.session.ctx.normal_form_with(&t, strategy).map_err(py_err)?;
        Ok(self.session.render(&r))
    }

    /// One rewrite of the inversion at 0-based positions `s, s+1` of a word.
    fn reduce_step(&self, letters: Vec<usize>, s: usize) -> PyResult<String> {
        let w = Word::new(letters).map_err(py_err)?;
        let r = self.session.ctx.reduce_step(&w, s).map_err(py_err)?;
        Ok(self.session.render(&r))
    }

    /// Product in U; `product` is `"hom"` for the twisted product or `"tensor"` for concatenation.
    #[pyo3(signature = (left, right, product = "hom"))]
    fn multiply(&self, left: &str, right: &str, product: &str) -> PyResult<String> {
        let twisted = match product {
            "hom" => true,
            "tensor" => false,
            other => return Err(PyValueError::new_err(format!("unknown product `{other}`"))),
        };
        let t = self.session.multiply(left, right, twisted).map_err(py_err)?;
        Ok(self.session.render(&t))
    }

    fn phi(&self, expr: &str) -> PyResult<String> {
        let t = self.session.parse(expr).map_err(py_err)?;
        Ok(self.session.render(&self.session.ctx.phi(&t).map_err(py_err)?))
    }

    /// The twisting map of U applied to an element in normal form.
    fn alpha(&self, expr: &str) -> PyResult<String> {
        let t = self.session.normal_form(expr).map_err(py_err)?;
        Ok(self.session.render(&self.session.ctx.u_alpha(&t).map_err(py_err)?))
    }

    /// Rewrites an engine-coordinate expression in the file's basis names.
    fn to_original(&self, expr: &str) -> PyResult<String> {
        let t = self.session.parse(expr).map_err(py_err)?;
        self.session.render_original(&t).map_err(py_err)
    }

    /// Runs the oracle checks up to `max_degree`; returns a list of report dicts.
    #[pyo3(signature = (max_degree = 4, samples = 100, seed = 0))]
    fn verify<'py>(&self, py: Python<'py>, max_degree: usize, samples: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let ctx = &self.session.ctx;
        let reports = py.detach(|| full_verification(ctx, max_degree, samples, seed)).map_err(py_err)?;
        to_py(py, &reports)
    }

    /// Direct-sum and confluence checks on the algebra as given, whether or not it passes the gate.
    #[pyo3(signature = (max_degree = 3))]
    fn negative_control<'py>(&self, py: Python<'py>, max_degree: usize) -> PyResult<Bound<'py, PyAny>> {
        let g = self.session.file.build_unchecked().map_err(py_err)?;
        let (report, parts) = py.detach(|| negative_control_on(&g, max_degree)).map_err(py_err)?;
        to_py(py, &(report, parts))
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, basis={:?}, mu={})", self.dim(), self.basis_names(), self.mu())
    }
}

/// Whether a word (list of basis indices) is weakly decreasing.
#[pyfunction]
fn is_pbw_word(letters: Vec<usize>) -> bool {
    hompbw::is_pbw_word(&letters)
}

/// Number of inversions of a word.
#[pyfunction]
fn index_of(letters: Vec<usize>) -> usize {
    hompbw::index_of(&letters)
}

#[pymodule]
#[pyo3(name = "hompbw")]
fn hompbw_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(is_pbw_word, m)?)?;
    m.add_function(wrap_pyfunction!(index_of, m)?)?;
    Ok(())
}
