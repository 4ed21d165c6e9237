//! Poincaré–Dulac normal forms of the family with symbolic parameters, their
//! certification against the invariant subalgebra, and truncated first
//! integrals at exact parameter points.

mod field;
mod integral;

pub use field::{is_resonant, lambda_dot, ParametricVectorField, Series};
pub use integral::{truncated_first_integral, FirstIntegral};

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::groebner::{subalgebra_member, Membership};
use crate::invariants::spec_hilbert_basis;
use crate::multipoly::{mono_degree, Polynomial, Ring};
use crate::resonant::{l_map, SystemSpec};

/// Coefficient q_{k,i} of the resonant term x_k·(x₁⋯xₙ)^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResonantCoefficient {
    /// 0-based coordinate.
    pub coordinate: usize,
    pub power: u32,
    pub coefficient: Polynomial<Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub n: u32,
    pub order: u32,
    pub ring: Arc<Ring<Cyclotomic>>,
    /// Ordered by power, then coordinate.
    pub coefficients: Vec<ResonantCoefficient>,
}

#[derive(Serialize)]
struct CoefficientJson {
    coordinate: usize,
    power: u32,
    monomial: Vec<u32>,
    coefficient: String,
}

impl NormalFormResult {
    pub fn get(&self, coordinate: usize, power: u32) -> Option<&Polynomial<Cyclotomic>> {
        self.coefficients
            .iter()
            .find(|c| c.coordinate == coordinate && c.power == power)
            .map(|c| &c.coefficient)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cs: Vec<CoefficientJson> = self
            .coefficients
            .iter()
            .map(|c| CoefficientJson {
                coordinate: c.coordinate + 1,
                power: c.power,
                monomial: resonant_exponent(self.n, c.coordinate, c.power),
                coefficient: c.coefficient.to_string(),
            })
            .collect();
        serde_json::json!({ "n": self.n, "order": self.order, "coefficients": cs })
    }
}

/// (i, …, i) + e_k.
pub fn resonant_exponent(n: u32, k: usize, i: u32) -> Vec<u32> {
    let mut v = vec![i; n as usize];
    v[k] += 1;
    v
}

/// Reads off q_{k,i} for n·i + 1 ≤ order from a normalized field.
pub fn resonant_coefficients(field: &ParametricVectorField) -> Result<NormalFormResult> {
    let n = field.n();
    for (k, comp) in field.components().iter().enumerate() {
        for m in comp.keys() {
            if mono_degree(m) >= 2 && !is_resonant(n, k, m) {
                return Err(Error::Structural(format!(
                    "non-resonant term {:?} left in component {}",
                    m,
                    k + 1
                )));
            }
        }
    }
    let mut coefficients = Vec::new();
    let mut i = 1;
    while n * i < field.order() {
        for k in 0..n as usize {
            coefficients.push(ResonantCoefficient {
                coordinate: k,
                power: i,
                coefficient: field.coeff(k, &resonant_exponent(n, k, i)),
            });
        }
        i += 1;
    }
    Ok(NormalFormResult {
        n,
        order: field.order(),
        ring: field.ring().clone(),
        coefficients,
    })
}

/// Normal form of the family up to total phase degree `order`.
pub fn normal_form(spec: &SystemSpec, order: u32) -> Result<NormalFormResult> {
    if order < 2 {
        return Err(Error::Precondition(format!("order must be at least 2, got {}", order)));
    }
    let field = ParametricVectorField::from_spec(spec, order)?.normalize();
    resonant_coefficients(&field)
}

/// Every parameter monomial [ν] of q_{k,i} satisfies 𝔏·ν = (i, …, i).
pub fn grading_holds(nf: &NormalFormResult, spec: &SystemSpec) -> Result<bool> {
    for c in &nf.coefficients {
        for (nu, _) in c.coefficient.terms() {
            if l_map(spec, nu)?.iter().any(|&x| x != c.power as i64) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every q_{k,i} lies in ℚ(ζ)[[ν] : ν ∈ H].
pub fn nf_invariance_check(nf: &NormalFormResult, spec: &SystemSpec) -> Result<bool> {
    let h = spec_hilbert_basis(spec)?;
    let gens: Vec<Polynomial<Cyclotomic>> = h
        .vectors
        .iter()
        .map(|nu| Polynomial::monomial(&nf.ring, nu.clone(), Cyclotomic::from_rational_unchecked(nf.n, crate::Rational::one())))
        .collect();
    for c in &nf.coefficients {
        if c.coefficient.is_zero() {
            continue;
        }
        if let Membership::No = subalgebra_member(&c.coefficient, &gens)? {
            return Ok(false);
        }
    }
    Ok(true)
}
