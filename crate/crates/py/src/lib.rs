//! Python module `sixvertex`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sixvertex_core as core;
use sixvertex_core::Signature;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::Numerical(_) | core::Error::Budget(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn sig(parts: Vec<i64>) -> PyResult<Signature> {
    Signature::new(parts).map_err(err)
}

fn cplx(xs: &[f64]) -> Vec<Complex64> {
    core::symfunc::real_spectral(xs)
}

/// Model parameters; validates v^-1 > u > s = q^-1/2 > 1.
#[pyclass(name = "ModelParams", frozen, from_py_object)]
#[derive(Clone)]
struct PyParams {
    inner: core::ModelParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (q, u, v, us=None, vs=None))]
    fn new(q: f64, u: f64, v: f64, us: Option<Vec<f64>>, vs: Option<Vec<f64>>) -> PyResult<Self> {
        let mut p = core::ModelParams::new(q, u, v).map_err(err)?;
        if let Some(us) = us {
            p = p.with_row_parameters(us).map_err(err)?;
        }
        if let Some(vs) = vs {
            p = p.with_column_parameters(vs).map_err(err)?;
        }
        Ok(PyParams { inner: p })
    }

    #[getter]
    fn q(&self) -> f64 {
        self.inner.q
    }
    #[getter]
    fn u(&self) -> f64 {
        self.inner.u
    }
    #[getter]
    fn v(&self) -> f64 {
        self.inner.v
    }
    #[getter]
    fn s(&self) -> f64 {
        self.inner.s()
    }

    /// Absolute six-vertex weights at spectral parameter u (default: the row u).
    #[pyo3(signature = (u=None))]
    fn six_vertex_weights(&self, u: Option<f64>) -> [f64; 6] {
        core::weights::six_vertex_weights(&self.inner, u.unwrap_or(self.inner.u))
    }

    /// (a, b, c, d).
    fn constants(&self) -> PyResult<(f64, f64, f64, f64)> {
        let c = core::asymptotics::AsymptoticConstants::new(&self.inner).map_err(err)?;
        Ok((c.a, c.b, c.c, c.d))
    }

    fn partition_z(&self, k: usize, m: usize) -> PyResult<f64> {
        core::measure::partition_z(&self.inner, k, m).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("ModelParams(q={}, u={}, v={})", self.inner.q, self.inner.u, self.inner.v)
    }
}

/// F_{λ/μ}(u_1..u_n) at spin (q, s); s defaults to q^-1/2.
#[pyfunction]
#[pyo3(signature = (lam, us, q, s=None, mu=None))]
fn f_eval(lam: Vec<i64>, us: Vec<f64>, q: f64, s: Option<f64>, mu: Option<Vec<i64>>) -> PyResult<Complex64> {
    let spin = core::SpinParams::new(q, s.unwrap_or(q.powf(-0.5))).map_err(err)?;
    let mu = sig(mu.unwrap_or_default())?;
    core::symfunc::f_eval(&sig(lam)?, &mu, &cplx(&us), &spin).map_err(err)
}

#[pyfunction]
fn f_direct(lam: Vec<i64>, vs: Vec<f64>, params: &PyParams) -> PyResult<f64> {
    Ok(core::boundary::f_direct(&sig(lam)?, &cplx(&vs), &params.inner).re)
}

/// f(λ; v) on the circle |z| = radius (default: midpoint of (s, 1/max v)).
#[pyfunction]
#[pyo3(signature = (lam, vs, params, radius=None, tol=1e-12))]
fn f_contour(lam: Vec<i64>, vs: Vec<f64>, params: &PyParams, radius: Option<f64>, tol: f64) -> PyResult<f64> {
    let v = cplx(&vs);
    let s = params.inner.s();
    let c = match radius {
        Some(r) => core::boundary::CircleContour::new(r, s, &v),
        None => core::boundary::CircleContour::midpoint(s, &v),
    }
    .map_err(err)?;
    Ok(core::boundary::f_contour(&sig(lam)?, &v, &params.inner, c, tol).map_err(err)?.value.re)
}

/// Exact count of path collections from the empty signature to λ.
#[pyfunction]
fn count_collections(lam: Vec<i64>) -> PyResult<BigUint> {
    core::paths::count_collections_formula(&sig(lam)?).map_err(err)
}

/// Exact law of the top row λ^k after M columns.
#[pyclass(name = "TopRowPmf", frozen)]
struct PyPmf {
    inner: core::measure::TopRowPmf,
}

#[pymethods]
impl PyPmf {
    #[getter]
    fn mass(&self) -> f64 {
        self.inner.mass
    }
    #[getter]
    fn truncation(&self) -> i64 {
        self.inner.truncation
    }
    #[getter]
    fn tail_estimate(&self) -> f64 {
        self.inner.tail_estimate
    }
    /// [(parts, probability)] in lexicographic order.
    fn entries(&self) -> Vec<(Vec<i64>, f64)> {
        self.inner.entries.iter().map(|(m, p)| (m.parts().to_vec(), *p)).collect()
    }
    fn probability(&self, mu: Vec<i64>) -> PyResult<f64> {
        Ok(self.inner.probability(&sig(mu)?))
    }
    fn __len__(&self) -> usize {
        self.inner.entries.len()
    }
}

#[pyfunction]
#[pyo3(signature = (k, m, params, tol=1e-8))]
fn top_row_pmf(py: Python<'_>, k: usize, m: usize, params: &PyParams, tol: f64) -> PyResult<PyPmf> {
    let p = params.inner.clone();
    let inner = py.detach(move || core::measure::top_row_pmf(k, m, &p, tol)).map_err(err)?;
    Ok(PyPmf { inner })
}

/// Samples whole patterns: top row from the pmf, lower rows from the Gibbs
/// conditional. Each pattern is a list of rows, row j of length j.
#[pyfunction]
#[pyo3(signature = (pmf, params, count, seed=1))]
fn sample_patterns(pmf: &PyPmf, params: &PyParams, count: usize, seed: u64) -> PyResult<Vec<Vec<Vec<i64>>>> {
    let sampler = core::measure::TopRowSampler::new(&pmf.inner);
    let mut cache = HashMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pat = core::measure::sample_pattern(&sampler, &mut cache, &params.inner, &mut rng).map_err(err)?;
            Ok(pat.rows().iter().map(|r| r.parts().to_vec()).collect())
        })
        .collect()
}

/// All half-strict Gelfand-Tsetlin patterns with top row λ.
#[pyfunction]
fn gt_patterns(lam: Vec<i64>) -> PyResult<Vec<Vec<Vec<i64>>>> {
    let pats = core::measure::gt_patterns(&sig(lam)?).map_err(err)?;
    Ok(pats.iter().map(|p| p.rows().iter().map(|r| r.parts().to_vec()).collect()).collect())
}

/// The path collection of a pattern as a JSON document.
#[pyfunction]
fn pattern_paths_json(rows: Vec<Vec<i64>>) -> PyResult<String> {
    let rows = rows.into_iter().map(sig).collect::<PyResult<Vec<_>>>()?;
    let pat = core::measure::HalfStrictGTPattern::new(rows).map_err(err)?;
    let pc = pat.to_paths().map_err(err)?;
    serde_json::to_string(&pc).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Eigenvalues of the 1..k corners of `count` GUE matrices, rows ascending.
#[pyfunction]
#[pyo3(signature = (k, count, seed=1))]
fn gue_corners(py: Python<'_>, k: usize, count: usize, seed: u64) -> Vec<Vec<Vec<f64>>> {
    py.detach(|| core::gue::sample_gue_corners_batch(k, count, seed)).into_iter().map(|c| c.rows).collect()
}

#[pyfunction]
fn hermite_density(x: Vec<f64>) -> f64 {
    core::gue::hermite_density(&x)
}

/// d^k M^{k/2} B_M and its limit at the scaled point x.
#[pyfunction]
#[pyo3(signature = (x, m, params, tol=1e-10))]
fn b_m(x: Vec<f64>, m: usize, params: &PyParams, tol: f64) -> PyResult<(f64, f64)> {
    let r = core::asymptotics::b_m_contour(&x, m, &params.inner, tol).map_err(err)?;
    Ok((r.value, r.limit))
}

/// A_M and its limit at the scaled point x.
#[pyfunction]
fn a_m(x: Vec<f64>, m: usize, params: &PyParams) -> PyResult<(f64, f64)> {
    let r = core::asymptotics::a_m_scaled(&x, m, &params.inner).map_err(err)?;
    Ok((r.value, r.limit))
}

/// KS distances of rescaled rows against GUE corners: [(M, coordinate, KS)].
#[pyfunction]
#[pyo3(signature = (k, m_grid, params, n_samples=1000, seed=1, tol=1e-8))]
fn compare_gue(
    py: Python<'_>,
    k: usize,
    m_grid: Vec<usize>,
    params: &PyParams,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> PyResult<Vec<(usize, String, f64)>> {
    let p = params.inner.clone();
    let r = py
        .detach(move || core::gue::compare_theorem_main(k, &m_grid, &p, n_samples, seed, tol))
        .map_err(err)?;
    Ok(r.rows.into_iter().map(|row| (row.m, row.coordinate, row.ks)).collect())
}

#[pymodule]
fn sixvertex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyPmf>()?;
    m.add_function(wrap_pyfunction!(f_eval, m)?)?;
    m.add_function(wrap_pyfunction!(f_direct, m)?)?;
    m.add_function(wrap_pyfunction!(f_contour, m)?)?;
    m.add_function(wrap_pyfunction!(count_collections, m)?)?;
    m.add_function(wrap_pyfunction!(top_row_pmf, m)?)?;
    m.add_function(wrap_pyfunction!(sample_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(gt_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(pattern_paths_json, m)?)?;
    m.add_function(wrap_pyfunction!(gue_corners, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_density, m)?)?;
    m.add_function(wrap_pyfunction!(b_m, m)?)?;
    m.add_function(wrap_pyfunction!(a_m, m)?)?;
    m.add_function(wrap_pyfunction!(compare_gue, m)?)?;
    Ok(())
}
