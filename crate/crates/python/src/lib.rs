//! Python bindings for `trunc_pascal`.
//!
//! `Triangle(t)` carries every per-`t` operation; `Polynomial` wraps the
//! factorial-basis polynomials; the remaining Pascal and Lucas helpers are
//! module functions. Large values come back as Python ints.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use trunc_pascal::lattice::{count_touching_capped, enumerate_admissible_capped, DEFAULT_ENUMERATION_CAP};
use trunc_pascal::parity::predicted_odd_count;
use trunc_pascal::tableaux::enumerate_tableaux_capped;
use trunc_pascal::{
    ColumnarTableau, Error, FactorialBasisPoly, NEPath, OddCountMethod, TriangleSpec,
};

create_exception!(trunc_pascal_py, TruncPascalError, PyValueError);

fn to_py(e: Error) -> PyErr {
    TruncPascalError::new_err(e.to_string())
}

fn cap(force: bool) -> Option<u64> {
    if force {
        None
    } else {
        Some(DEFAULT_ENUMERATION_CAP)
    }
}

fn parse_path(path: &str) -> PyResult<NEPath> {
    path.parse().map_err(to_py)
}

/// The truncated array for one value of `t`.
#[pyclass(name = "Triangle", module = "trunc_pascal_py", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyTriangle {
    spec: TriangleSpec,
}

#[pymethods]
impl PyTriangle {
    #[new]
    fn new(t: i64) -> PyResult<Self> {
        Ok(PyTriangle {
            spec: TriangleSpec::new(t).map_err(to_py)?,
        })
    }

    #[getter]
    fn t(&self) -> u32 {
        self.spec.t()
    }

    /// Last column that can be nonzero on row `n`.
    fn boundary(&self, n: i64) -> PyResult<i64> {
        self.spec.boundary(n).map_err(to_py)
    }

    /// `a_t(n, k)`; zero outside the triangle.
    fn entry(&self, n: i64, k: i64) -> BigInt {
        trunc_pascal::entry(self.spec, n, k)
    }

    /// `C(n, k) - C(n, k - t)`, unclamped.
    fn closed_form(&self, n: i64, k: i64) -> BigInt {
        trunc_pascal::closed_form(self.spec, n, k)
    }

    /// Row `n` with `n + 1` entries.
    fn row(&self, n: i64) -> PyResult<Vec<BigInt>> {
        Ok(trunc_pascal::row(self.spec, n).map_err(to_py)?.entries)
    }

    /// Rows `0..count`.
    fn rows(&self, count: usize) -> Vec<Vec<BigInt>> {
        self.spec.rows().take(count).map(|r| r.entries).collect()
    }

    /// Admissible `(n, k)`-paths as strings of `N` and `E`.
    #[pyo3(signature = (n, k, force = false))]
    fn paths(&self, n: i64, k: i64, force: bool) -> PyResult<Vec<String>> {
        let paths = enumerate_admissible_capped(self.spec, n, k, cap(force)).map_err(to_py)?;
        Ok(paths.iter().map(|p| p.to_string()).collect())
    }

    /// Admissible single-column tableaux with entries from `1..=n`, sorted.
    #[pyo3(signature = (n, k, force = false))]
    fn tableaux(&self, n: i64, k: i64, force: bool) -> PyResult<Vec<Vec<u32>>> {
        let tabs = enumerate_tableaux_capped(self.spec, n, k, cap(force)).map_err(to_py)?;
        Ok(tabs.into_iter().map(|t| t.entries().to_vec()).collect())
    }

    /// Number of `(n, k)`-paths that meet the barrier, by brute force.
    #[pyo3(signature = (n, k, force = false))]
    fn count_touching(&self, n: i64, k: i64, force: bool) -> PyResult<BigInt> {
        count_touching_capped(self.spec, n, k, cap(force)).map_err(to_py)
    }

    fn is_admissible_path(&self, path: &str) -> PyResult<bool> {
        Ok(parse_path(path)?.is_admissible(self.spec))
    }

    fn is_admissible_tableau(&self, n: u32, entries: Vec<u32>) -> PyResult<bool> {
        Ok(ColumnarTableau::new(n, entries).map_err(to_py)?.is_admissible(self.spec))
    }

    /// Path to tableau: the entries are `x_i + y_i` over the east steps.
    fn phi(&self, path: &str) -> PyResult<Vec<u32>> {
        let tab = trunc_pascal::phi(&parse_path(path)?, self.spec).map_err(to_py)?;
        Ok(tab.entries().to_vec())
    }

    /// Tableau to path of length `n`.
    fn psi(&self, n: u32, entries: Vec<u32>) -> PyResult<String> {
        let tab = ColumnarTableau::new(n, entries).map_err(to_py)?;
        Ok(trunc_pascal::psi(&tab, self.spec).map_err(to_py)?.to_string())
    }

    /// `D^{-N}(x[t-1])`.
    fn inverse_power(&self, exponent: i64) -> PyResult<PyPolynomial> {
        let poly = trunc_pascal::inverse_power_expansion(self.spec, exponent).map_err(to_py)?;
        Ok(PyPolynomial { poly })
    }

    /// Coefficients of `D^{-N}(x[t-1])` with the alternating signs removed, lowest column first.
    fn extract_d(&self, exponent: i64) -> PyResult<Vec<BigInt>> {
        trunc_pascal::extract_d(self.spec, exponent).map_err(to_py)
    }

    /// Parity of `a_t(n, k)`.
    fn parity(&self, n: i64, k: i64) -> PyResult<bool> {
        trunc_pascal::truncated_parity(self.spec, n, k).map_err(to_py)
    }

    /// Odd entries on row `n`; `method` is `"exact"` or `"lucas"`.
    #[pyo3(signature = (n, method = "exact"))]
    fn odd_count(&self, n: i64, method: &str) -> PyResult<BigInt> {
        let method: OddCountMethod = method.parse().map_err(to_py)?;
        trunc_pascal::truncated_row_odd_count(self.spec, n, method).map_err(to_py)
    }

    /// `2^(d(n + t) - 1)`, the count every row has when `t` is a power of two.
    fn predicted_odd_count(&self, n: u64) -> BigInt {
        predicted_odd_count(self.spec, n)
    }

    /// Parity bitmap of rows `0..rows` as nested lists of bools.
    fn bitmap(&self, rows: i64) -> PyResult<Vec<Vec<bool>>> {
        Ok(trunc_pascal::parity_bitmap(self.spec, rows).map_err(to_py)?.rows().to_vec())
    }

    /// Same bitmap as plain PBM text.
    fn pbm(&self, rows: i64) -> PyResult<String> {
        Ok(trunc_pascal::parity_bitmap(self.spec, rows).map_err(to_py)?.to_pbm())
    }

    fn __repr__(&self) -> String {
        format!("Triangle(t={})", self.spec.t())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.spec == other.spec
    }

    fn __hash__(&self) -> u64 {
        self.spec.t() as u64
    }
}

/// Polynomial in the factorial basis `x[j] = x^j / j!`.
#[pyclass(name = "Polynomial", module = "trunc_pascal_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    poly: FactorialBasisPoly,
}

#[pymethods]
impl PyPolynomial {
    /// Build from `{j: coefficient}`; an empty mapping is the zero polynomial.
    #[new]
    #[pyo3(signature = (terms = None))]
    fn new(terms: Option<BTreeMap<usize, BigInt>>) -> Self {
        PyPolynomial {
            poly: FactorialBasisPoly::from_terms(terms.unwrap_or_default()),
        }
    }

    /// Parse text such as `"2 * x[4] - x[1]"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPolynomial {
            poly: text.parse().map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn basis(j: usize) -> Self {
        PyPolynomial {
            poly: FactorialBasisPoly::basis(j),
        }
    }

    fn coeff(&self, j: usize) -> BigInt {
        self.poly.coeff(j)
    }

    fn terms(&self) -> BTreeMap<usize, BigInt> {
        self.poly.terms().map(|(j, c)| (j, c.clone())).collect()
    }

    fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// True when there is no constant term, the image of `D^{-1}`.
    fn in_domain(&self) -> bool {
        self.poly.in_domain()
    }

    /// `y' + y''`.
    fn apply_d(&self) -> PyResult<Self> {
        Ok(PyPolynomial {
            poly: self.poly.apply_d().map_err(to_py)?,
        })
    }

    fn apply_d_inverse(&self) -> Self {
        PyPolynomial {
            poly: self.poly.apply_d_inverse(),
        }
    }

    fn __str__(&self) -> String {
        self.poly.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial.parse({:?})", self.poly.to_string())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
#[pyfunction]
fn binomial(n: i64, k: i64) -> BigInt {
    trunc_pascal::binomial(n, k)
}

/// `C(n, k) mod p` by Lucas's theorem.
#[pyfunction]
fn binom_mod_p(n: u64, k: u64, p: u64) -> PyResult<u64> {
    trunc_pascal::binom_mod_p(n, k, p).map_err(to_py)
}

/// Base-`p` digits of `m`, least significant first.
#[pyfunction]
fn digits(m: u64, p: u64) -> PyResult<Vec<u64>> {
    Ok(trunc_pascal::digits(m, p).map_err(to_py)?.digits)
}

#[pyfunction]
fn is_odd_binomial(n: u64, k: u64) -> bool {
    trunc_pascal::is_odd_binomial(n, k)
}

#[pyfunction]
fn pascal_row_odd_count(n: u64) -> BigInt {
    trunc_pascal::pascal_row_odd_count(n)
}

#[pyfunction]
fn vandermonde_check(m: u64, l: u64, j: u64) -> PyResult<bool> {
    trunc_pascal::vandermonde_check(m, l, j).map_err(to_py)
}

/// Run the cross-checks and return the report as a dict.
#[pyfunction]
#[pyo3(signature = (t_max = 6, n_max = 14, parity_only = false))]
fn verify<'py>(py: Python<'py>, t_max: u32, n_max: i64, parity_only: bool) -> PyResult<Bound<'py, PyAny>> {
    let report = py
        .detach(|| trunc_pascal::verify(t_max, n_max, parity_only))
        .map_err(to_py)?;
    py.import("json")?.call_method1("loads", (report.to_json(),))
}

#[pymodule]
fn trunc_pascal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TruncPascalError", m.py().get_type::<TruncPascalError>())?;
    m.add_class::<PyTriangle>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(binom_mod_p, m)?)?;
    m.add_function(wrap_pyfunction!(digits, m)?)?;
    m.add_function(wrap_pyfunction!(is_odd_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(pascal_row_odd_count, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
