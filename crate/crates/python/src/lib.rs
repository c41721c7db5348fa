//! Python bindings for `splitroots`.
//!
//! Roots are Python `complex` values; split residuals are `(real, imag)`
//! tuples. Parse failures raise `ParseError`, degrees outside 1-4 raise
//! `UnsupportedDegreeError` (both subclasses of `ValueError`).

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use splitroots::{
    oracle::OracleConfig, split, Complex, DepressedCubic as CoreCubic,
    DepressedQuartic as CoreQuartic, RealPolynomial as CorePolynomial, RootSet as CoreRootSet,
    SolveError,
};

create_exception!(pysplitroots, ParseError, PyValueError);
create_exception!(pysplitroots, UnsupportedDegreeError, PyValueError);

fn to_py(z: Complex) -> Complex64 {
    Complex64::new(z.re, z.im)
}

fn from_py(z: Complex64) -> Complex {
    Complex::new(z.re, z.im)
}

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solve_error(e: SolveError) -> PyErr {
    match e {
        SolveError::UnsupportedDegree { .. } => UnsupportedDegreeError::new_err(e.to_string()),
        _ => value_error(e),
    }
}

#[pyclass(name = "RealPolynomial", frozen, from_py_object)]
#[derive(Clone)]
struct RealPolynomial {
    inner: CorePolynomial,
}

#[pymethods]
impl RealPolynomial {
    /// Coefficients lowest degree first; trailing zeros are dropped.
    #[new]
    fn new(coefficients: Vec<f64>) -> PyResult<Self> {
        CorePolynomial::new(coefficients)
            .map(|inner| RealPolynomial { inner })
            .map_err(value_error)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_polynomial(text)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn coefficients(&self) -> Vec<f64> {
        self.inner.coefficients().to_vec()
    }

    fn monic(&self) -> Self {
        RealPolynomial {
            inner: self.inner.monic(),
        }
    }

    fn evaluate(&self, z: Complex64) -> Complex64 {
        to_py(self.inner.evaluate(from_py(z)))
    }

    fn derivative(&self) -> Option<Self> {
        self.inner
            .derivative()
            .map(|inner| RealPolynomial { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RealPolynomial({:?})", self.inner.coefficients())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "RootSet", frozen)]
struct RootSet {
    inner: CoreRootSet,
}

#[pymethods]
impl RootSet {
    #[getter]
    fn roots(&self) -> Vec<Complex64> {
        self.inner.roots.iter().copied().map(to_py).collect()
    }

    #[getter]
    fn residuals(&self) -> Vec<f64> {
        self.inner.residuals.clone()
    }

    #[getter]
    fn branch_tags(&self) -> Vec<String> {
        self.inner
            .branch_tags
            .iter()
            .map(|t| t.to_string())
            .collect()
    }

    fn max_residual(&self) -> f64 {
        self.inner.max_residual()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("RootSet({:?})", self.inner.roots)
    }
}

impl From<CoreRootSet> for RootSet {
    fn from(inner: CoreRootSet) -> Self {
        RootSet { inner }
    }
}

#[pyclass(name = "DepressedCubic", frozen, skip_from_py_object)]
#[derive(Clone)]
struct DepressedCubic {
    inner: CoreCubic,
}

#[pymethods]
impl DepressedCubic {
    #[new]
    #[pyo3(signature = (a, b, shift=0.0))]
    fn new(a: f64, b: f64, shift: f64) -> Self {
        DepressedCubic {
            inner: CoreCubic::new(a, b).with_shift(shift),
        }
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> f64 {
        self.inner.b
    }

    #[getter]
    fn shift(&self) -> f64 {
        self.inner.shift
    }

    /// The monic cubic this was depressed from.
    fn expand(&self) -> RealPolynomial {
        RealPolynomial {
            inner: self.inner.expand(),
        }
    }

    fn solve(&self) -> RootSet {
        split::solve_depressed_cubic(&self.inner).into()
    }

    fn __repr__(&self) -> String {
        let d = &self.inner;
        format!("DepressedCubic(a={}, b={}, shift={})", d.a, d.b, d.shift)
    }
}

#[pyclass(name = "DepressedQuartic", frozen, skip_from_py_object)]
#[derive(Clone)]
struct DepressedQuartic {
    inner: CoreQuartic,
}

#[pymethods]
impl DepressedQuartic {
    #[new]
    #[pyo3(signature = (a, b, c, shift=0.0))]
    fn new(a: f64, b: f64, c: f64, shift: f64) -> Self {
        DepressedQuartic {
            inner: CoreQuartic::new(a, b, c).with_shift(shift),
        }
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> f64 {
        self.inner.b
    }

    #[getter]
    fn c(&self) -> f64 {
        self.inner.c
    }

    #[getter]
    fn shift(&self) -> f64 {
        self.inner.shift
    }

    fn expand(&self) -> RealPolynomial {
        RealPolynomial {
            inner: self.inner.expand(),
        }
    }

    fn solve(&self) -> RootSet {
        split::solve_depressed_quartic(&self.inner).into()
    }

    /// `[1, a/2, a^2/16 - c/4, -b^2/64]`, highest degree first.
    fn resolvent(&self) -> [f64; 4] {
        split::quartic_resolvent(&self.inner)
    }

    fn __repr__(&self) -> String {
        let d = &self.inner;
        format!(
            "DepressedQuartic(a={}, b={}, c={}, shift={})",
            d.a, d.b, d.c, d.shift
        )
    }
}

#[pyclass(name = "OracleResult", frozen, get_all)]
struct OracleResult {
    roots: Vec<Complex64>,
    iterations_used: usize,
    converged: bool,
    cluster_radii: Vec<f64>,
}

#[pyfunction]
fn parse_polynomial(text: &str) -> PyResult<RealPolynomial> {
    splitroots::parse_polynomial(text)
        .map(|inner| RealPolynomial { inner })
        .map_err(|e| ParseError::new_err((e.to_string(), e.position, e.kind.to_string())))
}

/// Roots of a polynomial of degree 1-4, or of the parsed text.
#[pyfunction]
fn solve(py: Python<'_>, p: &Bound<'_, PyAny>) -> PyResult<RootSet> {
    let poly = if let Ok(text) = p.extract::<String>() {
        parse_polynomial(&text)?.inner
    } else {
        p.extract::<RealPolynomial>()?.inner
    };
    py.detach(|| split::solve(&poly))
        .map(Into::into)
        .map_err(solve_error)
}

#[pyfunction]
fn solve_quadratic(a: f64, b: f64) -> PyResult<RootSet> {
    split::solve_quadratic(a, b)
        .map(Into::into)
        .map_err(solve_error)
}

#[pyfunction]
fn depress_cubic(p: &RealPolynomial) -> PyResult<DepressedCubic> {
    let inner = splitroots::depress_cubic(&p.inner).map_err(value_error)?;
    Ok(DepressedCubic { inner })
}

#[pyfunction]
fn depress_quartic(p: &RealPolynomial) -> PyResult<DepressedQuartic> {
    let inner = splitroots::depress_quartic(&p.inner).map_err(value_error)?;
    Ok(DepressedQuartic { inner })
}

#[pyfunction]
fn quadratic_split_residual(a: f64, b: f64, x: f64, y: f64) -> (f64, f64) {
    let r = split::quadratic_split_residual(a, b, x, y);
    (r.real_part, r.imag_part)
}

#[pyfunction]
fn cubic_naive_split_residual(a: f64, b: f64, x: f64, y: f64) -> (f64, f64) {
    let r = split::cubic_naive_split_residual(a, b, x, y);
    (r.real_part, r.imag_part)
}

#[pyfunction]
fn cubic_omega_split_residual(a: f64, b: f64, x: f64, y: f64) -> (f64, f64) {
    let r = split::cubic_omega_split_residual(a, b, x, y);
    (r.real_part, r.imag_part)
}

#[pyfunction]
fn quartic_split_residual(a: f64, b: f64, c: f64, x: f64, y: f64) -> (f64, f64) {
    let r = split::quartic_split_residual(a, b, c, x, y);
    (r.real_part, r.imag_part)
}

/// `(8, 2a, -b)`: coefficients of `c3 x^3 + c1 x + c0`.
#[pyfunction]
fn naive_cubic_reduction(a: f64, b: f64) -> (f64, f64, f64) {
    let r = split::naive_cubic_reduction(a, b);
    (r.c3, r.c1, r.c0)
}

/// `(x, y)` with `z = x + omega y`, `omega = (1 + i sqrt 3)/2`.
#[pyfunction]
fn omega_decompose(z: Complex64) -> (f64, f64) {
    split::SplitAnsatz::OMEGA.decompose(from_py(z))
}

#[pyfunction]
#[pyo3(signature = (p, max_iterations=200, convergence_tolerance=1e-13, cluster_radius_factor=1e-7))]
fn find_roots(
    py: Python<'_>,
    p: &RealPolynomial,
    max_iterations: usize,
    convergence_tolerance: f64,
    cluster_radius_factor: f64,
) -> PyResult<OracleResult> {
    let cfg = OracleConfig {
        max_iterations,
        convergence_tolerance,
        cluster_radius_factor,
    };
    let inner = p.inner.clone();
    let res = py
        .detach(|| splitroots::find_roots(&inner, &cfg))
        .map_err(value_error)?;
    Ok(OracleResult {
        roots: res.roots.into_iter().map(to_py).collect(),
        iterations_used: res.iterations_used,
        converged: res.converged,
        cluster_radii: res.cluster_radii,
    })
}

/// Optimal bijective pairing: list of `(computed_index, reference_index, distance)`.
#[pyfunction]
fn pair_roots(
    computed: Vec<Complex64>,
    reference: Vec<Complex64>,
) -> PyResult<Vec<(usize, usize, f64)>> {
    let c: Vec<Complex> = computed.into_iter().map(from_py).collect();
    let r: Vec<Complex> = reference.into_iter().map(from_py).collect();
    splitroots::pair_roots(&c, &r).map_err(value_error)
}

#[pymodule]
fn pysplitroots(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add(
        "UnsupportedDegreeError",
        m.py().get_type::<UnsupportedDegreeError>(),
    )?;
    m.add_class::<RealPolynomial>()?;
    m.add_class::<RootSet>()?;
    m.add_class::<DepressedCubic>()?;
    m.add_class::<DepressedQuartic>()?;
    m.add_class::<OracleResult>()?;
    m.add_function(wrap_pyfunction!(parse_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(depress_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(depress_quartic, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_split_residual, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_naive_split_residual, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_omega_split_residual, m)?)?;
    m.add_function(wrap_pyfunction!(quartic_split_residual, m)?)?;
    m.add_function(wrap_pyfunction!(naive_cubic_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(omega_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(find_roots, m)?)?;
    m.add_function(wrap_pyfunction!(pair_roots, m)?)?;
    Ok(())
}
