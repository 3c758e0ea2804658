//! Python bindings for `tribq`.
//!
//! Integers cross the boundary as Python `int` (arbitrary size). Reports
//! come back as dictionaries decoded from the library's JSON.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tribq::audit::{self, AuditProfile, AuditReport, Bounds};
use tribq::binet::{binet_quaternion, binet_scalar, policy_precision};
use tribq::matrices::{det2, phi};
use tribq::quat::{qinv, seq_quaternion};
use tribq::series::{builtin_series, SeriesName};
use tribq::{matrices, seqcore, Error, QuatSeqKind, SequenceKind};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero(_) => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn from_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Quaternion with integer components.
#[pyclass(name = "Quaternion", module = "tribq_py", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyQuaternion(tribq::Quaternion);

#[pymethods]
impl PyQuaternion {
    #[new]
    #[pyo3(signature = (a0=BigInt::from(0), a1=BigInt::from(0), a2=BigInt::from(0), a3=BigInt::from(0)))]
    fn new(a0: BigInt, a1: BigInt, a2: BigInt, a3: BigInt) -> Self {
        PyQuaternion(tribq::Quaternion::from_components([a0, a1, a2, a3]))
    }

    #[getter]
    fn a0(&self) -> BigInt {
        self.0.a0.clone()
    }

    #[getter]
    fn a1(&self) -> BigInt {
        self.0.a1.clone()
    }

    #[getter]
    fn a2(&self) -> BigInt {
        self.0.a2.clone()
    }

    #[getter]
    fn a3(&self) -> BigInt {
        self.0.a3.clone()
    }

    fn components(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let [a, b, c, d] = self.0.clone().into_components();
        (a, b, c, d)
    }

    fn conj(&self) -> Self {
        PyQuaternion(self.0.conj())
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    /// `(numerator, denominator)` with `q * numerator = denominator`.
    fn inverse(&self) -> PyResult<(PyQuaternion, BigInt)> {
        let inv = qinv(&self.0).map_err(to_py)?;
        Ok((PyQuaternion(inv.numerator), inv.denominator))
    }

    /// Product through the complex-pair formula; equals `self * other`.
    fn cd_mul(&self, other: &PyQuaternion) -> Self {
        PyQuaternion(tribq::quat::cd_mul(&self.0, &other.0))
    }

    /// The 2x2 complex matrix, entries as `(re, im)` pairs.
    fn matrix(&self) -> Vec<Vec<(BigInt, BigInt)>> {
        phi(&self.0)
            .0
            .iter()
            .map(|row| row.iter().map(|z| (z.re.clone(), z.im.clone())).collect())
            .collect()
    }

    fn det(&self) -> (BigInt, BigInt) {
        let d = det2(&phi(&self.0));
        (d.re, d.im)
    }

    fn __add__(&self, other: &PyQuaternion) -> Self {
        PyQuaternion(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyQuaternion) -> Self {
        PyQuaternion(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(q) = other.cast::<PyQuaternion>() {
            return Ok(PyQuaternion(&self.0 * &q.get().0));
        }
        if let Ok(s) = other.extract::<BigInt>() {
            return Ok(PyQuaternion(self.0.scale(&s)));
        }
        Err(PyTypeError::new_err("can only multiply by a Quaternion or an int"))
    }

    fn __rmul__(&self, other: BigInt) -> Self {
        PyQuaternion(self.0.scale(&other))
    }

    fn __neg__(&self) -> Self {
        PyQuaternion(-self.0.clone())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.components().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Quaternion({}, {}, {}, {})", self.0.a0, self.0.a1, self.0.a2, self.0.a3)
    }
}

fn seq_kind(kind: &str) -> PyResult<SequenceKind> {
    kind.parse().map_err(to_py)
}

fn quat_kind(kind: &str) -> PyResult<QuatSeqKind> {
    kind.parse().map_err(to_py)
}

/// Value of the scalar sequence `kind` (T, K, R, U, C or S) at `n`.
#[pyfunction]
fn sequence(kind: &str, n: i64) -> PyResult<BigInt> {
    seqcore::derived_scalar(seq_kind(kind)?, n).map_err(to_py)
}

#[pyfunction]
fn tribonacci(n: i64) -> BigInt {
    seqcore::tribonacci(n)
}

#[pyfunction]
fn tribonacci_lucas(n: i64) -> BigInt {
    seqcore::tribonacci_lucas(n)
}

/// Sequence quaternion: Q, Qtilde, Rtilde, Utilde or Cunder.
#[pyfunction]
fn quaternion(kind: &str, n: i64) -> PyResult<PyQuaternion> {
    seq_quaternion(quat_kind(kind)?, n).map(PyQuaternion).map_err(to_py)
}

/// Companion-matrix evaluation of T or K.
#[pyfunction]
fn fast_seq(kind: &str, n: i64) -> PyResult<BigInt> {
    matrices::fast_seq(seq_kind(kind)?, n).map_err(to_py)
}

/// Closed-form evaluation. Returns `rounded`, `residue_log2` and
/// `precision_bits`; `rounded` is an int for T/K and a Quaternion for Q/Qtilde.
#[pyfunction]
#[pyo3(signature = (kind, n, precision_bits=None))]
fn binet<'py>(py: Python<'py>, kind: &str, n: i64, precision_bits: Option<u32>) -> PyResult<Bound<'py, PyDict>> {
    let p = precision_bits.unwrap_or_else(|| policy_precision(n));
    let d = PyDict::new(py);
    if let Ok(k) = kind.parse::<SequenceKind>() {
        let b = binet_scalar(k, n, p).map_err(to_py)?;
        d.set_item("rounded", b.rounded)?;
        d.set_item("residue_log2", b.residue.log2_approx())?;
    } else {
        let b = binet_quaternion(quat_kind(kind)?, n, p).map_err(to_py)?;
        d.set_item("rounded", PyQuaternion(b.rounded))?;
        d.set_item("residue_log2", b.residue.log2_approx())?;
    }
    d.set_item("precision_bits", p)?;
    Ok(d)
}

/// First `count` coefficients of f, h, G or normT.
#[pyfunction]
fn series(py: Python<'_>, name: &str, count: usize) -> PyResult<Vec<Py<PyAny>>> {
    let name: SeriesName = name.parse().map_err(to_py)?;
    let coeffs = builtin_series(name).expand(count).map_err(to_py)?;
    coeffs
        .into_iter()
        .map(|c| {
            if c.im().is_zero() {
                Ok(c.a0.into_pyobject(py)?.into_any().unbind())
            } else {
                Ok(Py::new(py, PyQuaternion(c))?.into_any())
            }
        })
        .collect()
}

/// Catalog entries as dictionaries.
#[pyfunction]
fn catalog<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    audit::catalog()
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("id", c.id)?;
            d.set_item("vars", c.vars.to_vec())?;
            d.set_item("domain", c.domain())?;
            d.set_item("description", c.description)?;
            Ok(d)
        })
        .collect()
}

/// Checks one identity; `bounds` maps each variable to `(lo, hi)`.
#[pyfunction]
#[pyo3(signature = (id, bounds, max_stored=Some(16)))]
fn check_identity<'py>(
    py: Python<'py>,
    id: &str,
    bounds: BTreeMap<String, (i64, i64)>,
    max_stored: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let b: Bounds = bounds;
    let report = audit::check_identity_with(id, &b, audit::CheckOptions { max_stored }).map_err(to_py)?;
    from_json(py, &serde_json::to_string(&report).expect("report serializes"))
}

/// Full audit as the JSON text the CLI writes.
#[pyfunction]
#[pyo3(signature = (max_n=200, max_m=50, negative_floor=-25, ids=None, reproducible=false))]
fn run_audit_json(
    max_n: i64,
    max_m: i64,
    negative_floor: i64,
    ids: Option<Vec<String>>,
    reproducible: bool,
) -> PyResult<String> {
    let profile = AuditProfile {
        max_n,
        max_m,
        negative_floor,
    };
    let results = audit::run_audit(&profile, ids.as_deref()).map_err(to_py)?;
    Ok(AuditReport::new(profile, results, reproducible).to_json())
}

#[pymodule]
fn tribq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuaternion>()?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(tribonacci, m)?)?;
    m.add_function(wrap_pyfunction!(tribonacci_lucas, m)?)?;
    m.add_function(wrap_pyfunction!(quaternion, m)?)?;
    m.add_function(wrap_pyfunction!(fast_seq, m)?)?;
    m.add_function(wrap_pyfunction!(binet, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(run_audit_json, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing() {
        assert!(seq_kind("T").is_ok());
        assert!(quat_kind("qtilde").is_ok());
    }

    #[test]
    fn quaternion_wrapper() {
        let q = PyQuaternion::new(1.into(), 2.into(), 3.into(), 4.into());
        assert_eq!(q.norm(), BigInt::from(30));
        assert_eq!(q.__repr__(), "Quaternion(1, 2, 3, 4)");
        assert_eq!(q.det(), (BigInt::from(30), BigInt::from(0)));
        assert_eq!(q.cd_mul(&q).0, &q.0 * &q.0);
    }
}
