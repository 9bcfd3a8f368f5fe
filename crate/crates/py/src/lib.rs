//! Python bindings, imported as `annular_nc`.

use annular_nc::annular::{self, VerificationReport, VerifyOptions};
use annular_nc::noncross::{self, check_compatible, find_crossing_pattern};
use annular_nc::partitions;
use annular_nc::signed_perm::le_b;
use annular_nc::{AnnulusConfig, SignedPartition, SignedPermutation};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: annular_nc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_python<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn config(p: usize, q: usize) -> PyResult<AnnulusConfig> {
    AnnulusConfig::new(p, q).map_err(err)
}

/// An element of the hyperoctahedral group `B_n`.
#[pyclass(name = "SignedPermutation", module = "annular_nc", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PySignedPermutation(SignedPermutation);

#[pymethods]
impl PySignedPermutation {
    /// Parse cycle notation such as `"(1,2,3,5)(4,-6)"`; mirror cycles are
    /// added automatically.
    #[new]
    fn new(cycles: &str, n: usize) -> PyResult<Self> {
        SignedPermutation::parse(cycles, n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(SignedPermutation::identity(n))
    }

    /// From the images of `1..n`.
    #[staticmethod]
    fn from_images(images: Vec<i32>) -> PyResult<Self> {
        SignedPermutation::from_images(images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Self).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn images(&self) -> Vec<i32> {
        self.0.images().to_vec()
    }

    fn __call__(&self, x: i32) -> PyResult<i32> {
        if x == 0 || x.unsigned_abs() as usize > self.0.n() {
            return Err(PyValueError::new_err(format!("{x} is not a point of the ground set")));
        }
        Ok(self.0.apply(x))
    }

    fn cycles(&self) -> Vec<Vec<i32>> {
        self.0.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Orbits as sets, in canonical order.
    fn orbits(&self) -> Vec<Vec<i32>> {
        self.0.orbits().as_sets()
    }

    fn length(&self) -> usize {
        self.0.length_b()
    }

    fn is_in_d(&self) -> bool {
        self.0.is_in_d()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `self ∘ other`: apply `other` first.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.compose(other)
    }

    /// Absolute order `self ≤ other`.
    fn le(&self, other: &Self) -> PyResult<bool> {
        le_b(&self.0, &other.0).map_err(err)
    }

    fn double_bracket(&self) -> String {
        self.0.double_bracket()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("permutations serialise")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedPermutation('{}', {})", self.0, self.0.n())
    }
}

/// A partition of `{±1, …, ±n}`.
#[pyclass(name = "SignedPartition", module = "annular_nc", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PySignedPartition(SignedPartition);

#[pymethods]
impl PySignedPartition {
    #[new]
    fn new(n: usize, blocks: Vec<Vec<i32>>) -> PyResult<Self> {
        SignedPartition::new(n, blocks).map(Self).map_err(err)
    }

    #[staticmethod]
    fn singletons(n: usize) -> Self {
        Self(SignedPartition::singletons(n))
    }

    #[staticmethod]
    fn single_block(n: usize) -> Self {
        Self(SignedPartition::single_block(n))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Self).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<i32>> {
        self.0.blocks().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn zero_blocks(&self) -> Vec<Vec<i32>> {
        self.0.zero_blocks().into_iter().map(<[i32]>::to_vec).collect()
    }

    /// Refinement order `self ≤ other`.
    fn le(&self, other: &Self) -> PyResult<bool> {
        self.0.le_refinement(&other.0).map_err(err)
    }

    fn meet(&self, other: &Self) -> PyResult<Self> {
        self.0.meet(&other.0).map(Self).map_err(err)
    }

    fn __and__(&self, other: &Self) -> PyResult<Self> {
        self.meet(other)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("partitions serialise")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedPartition({}, {:?})", self.0.n(), self.0.blocks())
    }
}

fn perms(v: Vec<SignedPermutation>) -> Vec<PySignedPermutation> {
    v.into_iter().map(PySignedPermutation).collect()
}

fn parts(v: Vec<SignedPartition>) -> Vec<PySignedPartition> {
    v.into_iter().map(PySignedPartition).collect()
}

fn report<'py>(py: Python<'py>, r: annular_nc::Result<VerificationReport>) -> PyResult<Bound<'py, PyAny>> {
    to_python(py, &r.map_err(err)?)
}

fn options(bound: usize) -> PyResult<VerifyOptions> {
    VerifyOptions::new(bound).map_err(err)
}

/// `Ω(τ)`: the orbits of `τ`.
#[pyfunction]
fn omega(tau: &PySignedPermutation) -> PySignedPartition {
    PySignedPartition(partitions::omega(&tau.0))
}

/// `Ω̃(τ)`: the orbits of `τ` with the zero-blocks merged.
#[pyfunction]
fn omega_tilde(tau: &PySignedPermutation) -> PySignedPartition {
    PySignedPartition(partitions::omega_tilde(&tau.0))
}

/// Genus of `τ` against the annular reference permutation of `(p, q)`.
#[pyfunction]
fn genus(tau: &PySignedPermutation, p: usize, q: usize) -> PyResult<usize> {
    noncross::genus(&tau.0.to_ground(), config(p, q)?.gamma()).map_err(err)
}

#[pyfunction]
fn is_noncrossing(tau: &PySignedPermutation, p: usize, q: usize) -> PyResult<bool> {
    noncross::is_noncrossing(&tau.0.to_ground(), config(p, q)?.gamma()).map_err(err)
}

/// First compatibility failure or least crossing pattern, as a dict, or `None`.
#[pyfunction]
fn crossing_witness<'py>(py: Python<'py>, tau: &PySignedPermutation, p: usize, q: usize) -> PyResult<Bound<'py, PyAny>> {
    let cfg = config(p, q)?;
    let g = tau.0.to_ground();
    let witness = match check_compatible(&g, cfg.gamma()).map_err(err)? {
        Some(w) => Some(w),
        None => find_crossing_pattern(&g, cfg.gamma()).map_err(err)?,
    };
    to_python(py, &witness)
}

/// The reference permutation of the `(p, q)` annulus.
#[pyfunction]
fn gamma(p: usize, q: usize) -> PyResult<PySignedPermutation> {
    Ok(PySignedPermutation(config(p, q)?.gamma_signed().clone()))
}

#[pyfunction]
fn build_snc_b(p: usize, q: usize) -> PyResult<Vec<PySignedPermutation>> {
    annular::build_snc_b(p, q).map(perms).map_err(err)
}

#[pyfunction]
fn build_ncb(p: usize, q: usize) -> PyResult<Vec<PySignedPartition>> {
    annular::build_ncb(p, q).map(parts).map_err(err)
}

#[pyfunction]
fn build_snc_d(p: usize, q: usize) -> PyResult<Vec<PySignedPermutation>> {
    annular::build_snc_d(p, q).map(perms).map_err(err)
}

#[pyfunction]
fn build_ncd(p: usize, q: usize) -> PyResult<Vec<PySignedPartition>> {
    annular::build_ncd(p, q).map(parts).map_err(err)
}

#[pyfunction]
fn orbit_family(p: usize, q: usize) -> PyResult<Vec<Vec<i32>>> {
    annular::orbit_family(p, q).map_err(err)
}

#[pyfunction]
fn is_in_ncb(pi: &PySignedPartition, p: usize, q: usize) -> PyResult<bool> {
    partitions::is_in_ncb(&pi.0, &config(p, q)?).map_err(err)
}

/// The permutation whose orbits are the blocks of `nu`, cycled canonically.
#[pyfunction]
fn tau_from_partition(nu: &PySignedPartition, p: usize, q: usize) -> PyResult<PySignedPermutation> {
    partitions::tau_from_partition(&nu.0, &config(p, q)?).map(PySignedPermutation).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (p, q, bound = annular::DEFAULT_BOUND))]
fn verify_theorem1(py: Python<'_>, p: usize, q: usize, bound: usize) -> PyResult<Bound<'_, PyAny>> {
    let opts = options(bound)?;
    report(py, py.detach(|| annular::verify_theorem1(p, q, &opts)))
}

#[pyfunction]
#[pyo3(signature = (p, q, bound = annular::DEFAULT_BOUND))]
fn verify_theorem2(py: Python<'_>, p: usize, q: usize, bound: usize) -> PyResult<Bound<'_, PyAny>> {
    let opts = options(bound)?;
    report(py, py.detach(|| annular::verify_theorem2(p, q, &opts)))
}

#[pyfunction]
fn verify_theorem3(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    report(py, py.detach(|| annular::verify_theorem3(n)))
}

#[pyfunction]
#[pyo3(signature = (p, q, bound = annular::DEFAULT_BOUND))]
fn verify_type_d(py: Python<'_>, p: usize, q: usize, bound: usize) -> PyResult<Bound<'_, PyAny>> {
    let opts = options(bound)?;
    report(py, py.detach(|| annular::verify_type_d(p, q, &opts)))
}

#[pyfunction]
#[pyo3(signature = (p = 2, q = 2))]
fn counterexample(py: Python<'_>, p: usize, q: usize) -> PyResult<Bound<'_, PyAny>> {
    report(py, py.detach(|| annular::counterexample_ncb(p, q)))
}

#[pymodule(name = "annular_nc")]
mod python_module {
    #[pymodule_export]
    use super::{
        build_ncb, build_ncd, build_snc_b, build_snc_d, counterexample, crossing_witness, gamma,
        genus, is_in_ncb, is_noncrossing, omega, omega_tilde, orbit_family, tau_from_partition,
        verify_theorem1, verify_theorem2, verify_theorem3, verify_type_d, PySignedPartition,
        PySignedPermutation,
    };
}
