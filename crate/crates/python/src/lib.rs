//! Python bindings for resonaut.
//!
//! Exposes system specs, cyclotomic numbers, the binomial ideals, normal
//! forms and first integrals. Polynomials cross the boundary as text in the
//! same syntax the CLI prints.

// pyo3 0.22 macros expand to PyErr conversions clippy flags
#![allow(clippy::useless_conversion)]

use std::collections::HashMap;

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use resonaut::error::Error;
use resonaut::exactnum::{Cyclotomic, Field, Rational};
use resonaut::groebner::Ideal;
use resonaut::invariants::{
    check_saturation_theorems, equivariant_ideal, reversibility_ideal_ir, sibirsky_ideal, spec_hilbert_basis,
    two_dim_crosschecks, zeta_reversible_ideal, EquivariantRoute, ZetaRoute,
};
use resonaut::multipoly::Polynomial;
use resonaut::normalform::{normal_form, truncated_first_integral, FirstIntegral};
use resonaut::resonant::{a_matrices, involution, l_matrix, m_matrix, weight, ParameterPoint, SystemSpec};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Element of ℚ(ζ_n) for prime n.
#[pyclass(name = "Cyclotomic", module = "resonaut", frozen)]
#[derive(Clone)]
struct PyCyclotomic(Cyclotomic);

#[pymethods]
impl PyCyclotomic {
    /// Parses text such as "1/2 - zeta^2"; integers are accepted too.
    #[new]
    #[pyo3(signature = (order, value = None))]
    fn new(order: u32, value: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let text = match value {
            None => "0".to_string(),
            Some(v) if v.extract::<i64>().is_ok() => v.extract::<i64>()?.to_string(),
            Some(v) => v.extract::<String>()?,
        };
        Cyclotomic::parse(order, &text).map(Self).map_err(py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (order, power = 1))]
    fn zeta(order: u32, power: i64) -> PyResult<Self> {
        Cyclotomic::zeta_pow(order, power).map(Self).map_err(py_err)
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    /// Rational coefficients of 1, ζ, …, ζ^{n−2}, as strings.
    fn coefficients(&self) -> Vec<String> {
        self.0.coeffs().iter().map(|c| c.to_string()).collect()
    }

    fn inverse(&self) -> PyResult<Self> {
        if self.0.is_zero() {
            return Err(PyZeroDivisionError::new_err("zero has no inverse"));
        }
        self.0.inv().map(Self).map_err(py_err)
    }

    fn to_complex(&self) -> (f64, f64) {
        self.0.to_complex()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_add(&o.0).map(Self).map_err(py_err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_sub(&o.0).map(Self).map_err(py_err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_mul(&o.0).map(Self).map_err(py_err)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        if o.0.is_zero() {
            return Err(PyZeroDivisionError::new_err("division by zero"));
        }
        self.0.try_div(&o.0).map(Self).map_err(py_err)
    }

    fn __neg__(&self) -> Self {
        Self(self.0.neg())
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Self {
        Self(self.0.pow(e))
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cyclotomic({}, '{}')", self.0.order(), self.0)
    }
}

#[derive(Clone)]
enum AnyIdeal {
    Q(Ideal<Rational>),
    Cyc(Ideal<Cyclotomic>),
}

/// Polynomial ideal over ℚ or ℚ(ζ) in the parameter ring of a spec.
#[pyclass(name = "Ideal", module = "resonaut", frozen)]
struct PyIdeal(AnyIdeal);

fn basis_strings<F: Field>(i: &Ideal<F>) -> PyResult<Vec<String>> {
    let gb = i.canonical_basis().map_err(py_err)?;
    Ok(gb.elements().iter().map(|p| p.to_string()).collect())
}

fn contains_text<F: Field>(i: &Ideal<F>, text: &str) -> PyResult<bool> {
    let f = Polynomial::parse(i.ring(), text).map_err(py_err)?;
    i.contains(&f).map_err(py_err)
}

#[pymethods]
impl PyIdeal {
    /// "Q" or "Q(zeta_n)".
    #[getter]
    fn field(&self) -> String {
        match &self.0 {
            AnyIdeal::Q(_) => "Q".into(),
            AnyIdeal::Cyc(i) => format!("Q(zeta_{})", i.ring().desc()),
        }
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        match &self.0 {
            AnyIdeal::Q(i) => i.ring().vars().to_vec(),
            AnyIdeal::Cyc(i) => i.ring().vars().to_vec(),
        }
    }

    fn generators(&self) -> Vec<String> {
        match &self.0 {
            AnyIdeal::Q(i) => i.gens().iter().map(|p| p.to_string()).collect(),
            AnyIdeal::Cyc(i) => i.gens().iter().map(|p| p.to_string()).collect(),
        }
    }

    /// Reduced deglex Gröbner basis.
    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        match &self.0 {
            AnyIdeal::Q(i) => basis_strings(i),
            AnyIdeal::Cyc(i) => basis_strings(i),
        }
    }

    fn contains(&self, polynomial: &str) -> PyResult<bool> {
        match &self.0 {
            AnyIdeal::Q(i) => contains_text(i, polynomial),
            AnyIdeal::Cyc(i) => contains_text(i, polynomial),
        }
    }

    fn __eq__(&self, o: &Self) -> PyResult<bool> {
        match (&self.0, &o.0) {
            (AnyIdeal::Q(a), AnyIdeal::Q(b)) => a.equals(b).map_err(py_err),
            (AnyIdeal::Cyc(a), AnyIdeal::Cyc(b)) => a.equals(b).map_err(py_err),
            _ => Ok(false),
        }
    }

    fn __len__(&self) -> usize {
        match &self.0 {
            AnyIdeal::Q(i) => i.gens().len(),
            AnyIdeal::Cyc(i) => i.gens().len(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Ideal(field={}, generators={})", self.field(), self.__len__())
    }
}

fn point_from_dict(spec: &SystemSpec, point: &Bound<'_, PyDict>) -> PyResult<ParameterPoint> {
    let mut out = ParameterPoint::new();
    for (k, v) in point.iter() {
        let name: String = k.extract()?;
        let value = if let Ok(c) = v.extract::<PyCyclotomic>() {
            c.0
        } else if let Ok(i) = v.extract::<i64>() {
            Cyclotomic::from_rational(spec.n(), Rational::from_int(i)).map_err(py_err)?
        } else {
            Cyclotomic::parse(spec.n(), &v.extract::<String>()?).map_err(py_err)?
        };
        out.insert(name, value);
    }
    Ok(out)
}

/// A 1:ζ:…:ζ^{n−1} resonant family: prime n and its exponent list.
#[pyclass(name = "Spec", module = "resonaut", frozen)]
struct PySpec(SystemSpec);

#[pymethods]
impl PySpec {
    #[new]
    fn new(n: u32, exponents: Vec<Vec<i64>>) -> PyResult<Self> {
        SystemSpec::new(n, exponents).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        SystemSpec::from_json(text).map(Self).map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn exponents(&self) -> Vec<Vec<i64>> {
        self.0.exponents().to_vec()
    }

    fn parameter_vars(&self) -> Vec<String> {
        self.0.parameter_vars()
    }

    /// Integer matrices keyed "L", "M", "A" and "A_hat", as row lists.
    fn matrices(&self) -> HashMap<&'static str, Vec<Vec<i64>>> {
        let (a, a_hat) = a_matrices(&self.0);
        HashMap::from([
            ("L", l_matrix(&self.0).to_rows()),
            ("M", m_matrix(&self.0).to_rows()),
            ("A", a.to_rows()),
            ("A_hat", a_hat.to_rows()),
        ])
    }

    fn hilbert_basis(&self, py: Python<'_>) -> PyResult<Vec<Vec<u32>>> {
        let spec = &self.0;
        let h = py.allow_threads(|| spec_hilbert_basis(spec)).map_err(py_err)?;
        Ok(h.vectors)
    }

    fn involution(&self, nu: Vec<u32>) -> PyResult<Vec<u32>> {
        involution(&self.0, &nu).map_err(py_err)
    }

    fn weight(&self, nu: Vec<u32>) -> PyResult<PyCyclotomic> {
        weight(&self.0, &nu).map(PyCyclotomic).map_err(py_err)
    }

    fn sibirsky_ideal(&self, py: Python<'_>) -> PyResult<PyIdeal> {
        let spec = &self.0;
        let i = py.allow_threads(|| sibirsky_ideal(spec)).map_err(py_err)?;
        Ok(PyIdeal(AnyIdeal::Q(i)))
    }

    fn reversibility_ideal(&self, py: Python<'_>) -> PyResult<PyIdeal> {
        let spec = &self.0;
        let i = py.allow_threads(|| reversibility_ideal_ir(spec)).map_err(py_err)?;
        Ok(PyIdeal(AnyIdeal::Cyc(i)))
    }

    /// `route` is "toric" or "elimination".
    #[pyo3(signature = (route = "toric"))]
    fn equivariant_ideal(&self, py: Python<'_>, route: &str) -> PyResult<PyIdeal> {
        let route = match route {
            "toric" => EquivariantRoute::Toric,
            "elimination" => EquivariantRoute::Elimination,
            other => return Err(PyValueError::new_err(format!("unknown route {:?}", other))),
        };
        let spec = &self.0;
        let i = py.allow_threads(|| equivariant_ideal(spec, route)).map_err(py_err)?;
        Ok(PyIdeal(AnyIdeal::Q(i)))
    }

    /// `route` is "zeta-toric" or "elimination".
    #[pyo3(signature = (route = "zeta-toric"))]
    fn zeta_reversible_ideal(&self, py: Python<'_>, route: &str) -> PyResult<PyIdeal> {
        let route = match route {
            "zeta-toric" => ZetaRoute::ZetaToric,
            "elimination" => ZetaRoute::Elimination,
            other => return Err(PyValueError::new_err(format!("unknown route {:?}", other))),
        };
        let spec = &self.0;
        let i = py.allow_threads(|| zeta_reversible_ideal(spec, route)).map_err(py_err)?;
        Ok(PyIdeal(AnyIdeal::Cyc(i)))
    }

    /// True when both saturation identities hold for this spec.
    fn check_saturation(&self, py: Python<'_>) -> PyResult<bool> {
        let spec = &self.0;
        let r = py.allow_threads(|| check_saturation_theorems(spec)).map_err(py_err)?;
        Ok(r.all_equal())
    }

    /// Planar cross-checks; only defined for n = 2.
    fn crosscheck_2d(&self, py: Python<'_>) -> PyResult<bool> {
        let spec = &self.0;
        let r = py.allow_threads(|| two_dim_crosschecks(spec)).map_err(py_err)?;
        Ok(r.passed())
    }

    /// Resonant coefficients as (coordinate, power, polynomial) with
    /// 1-based coordinates.
    fn normal_form(&self, py: Python<'_>, order: u32) -> PyResult<Vec<(usize, u32, String)>> {
        let spec = &self.0;
        let nf = py.allow_threads(|| normal_form(spec, order)).map_err(py_err)?;
        Ok(nf
            .coefficients
            .iter()
            .map(|c| (c.coordinate + 1, c.power, c.coefficient.to_string()))
            .collect())
    }

    /// Truncated first integral at an exact point. Values may be ints,
    /// strings or Cyclotomic numbers.
    fn first_integral<'py>(&self, py: Python<'py>, point: &Bound<'py, PyDict>, order: u32) -> PyResult<Bound<'py, PyDict>> {
        let p = point_from_dict(&self.0, point)?;
        let spec = &self.0;
        let fi = py.allow_threads(|| truncated_first_integral(spec, &p, order)).map_err(py_err)?;
        let out = PyDict::new_bound(py);
        match fi {
            FirstIntegral::Solved { order, coefficients } => {
                out.set_item("status", "solved")?;
                out.set_item("order", order)?;
                let terms: Vec<(Vec<u32>, PyObject)> =
                    coefficients.into_iter().map(|(m, c)| (m, PyCyclotomic(c).into_py(py))).collect();
                out.set_item("coefficients", terms)?;
            }
            FirstIntegral::Obstructed { degree, monomial, residual } => {
                out.set_item("status", "obstructed")?;
                out.set_item("degree", degree)?;
                out.set_item("monomial", monomial)?;
                out.set_item("residual", PyCyclotomic(residual).into_py(py))?;
            }
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Spec({})", self.0.to_json())
    }
}

#[pymodule]
#[pyo3(name = "resonaut")]
fn resonaut_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    resonaut::cli::configure_threads();
    m.add_class::<PyCyclotomic>()?;
    m.add_class::<PySpec>()?;
    m.add_class::<PyIdeal>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
