use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::multipoly::{mono_degree, Monomial};
use crate::normalform::field::lambda_dot;
use crate::resonant::{ParameterPoint, SystemSpec};

/// Outcome of solving ∇Ψ·F ≡ 0 up to a degree with Ψ = x₁⋯xₙ + h.o.t.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FirstIntegral {
    /// Coefficients of Ψ by exponent, ascending.
    Solved {
        order: u32,
        #[serde(serialize_with = "ser_terms")]
        coefficients: Vec<(Monomial, Cyclotomic)>,
    },
    /// The resonant monomial Φ^i = (x₁⋯xₙ)^i at `degree` carries a nonzero
    /// residual, so no Ψ exists at that degree.
    Obstructed {
        degree: u32,
        monomial: Monomial,
        #[serde(serialize_with = "ser_cyclo")]
        residual: Cyclotomic,
    },
}

fn ser_cyclo<S: serde::Serializer>(c: &Cyclotomic, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

fn ser_terms<S: serde::Serializer>(t: &[(Monomial, Cyclotomic)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for (m, c) in t {
        seq.serialize_element(&(m, c.to_string()))?;
    }
    seq.end()
}

impl FirstIntegral {
    pub fn is_solved(&self) -> bool {
        matches!(self, FirstIntegral::Solved { .. })
    }
}

type Terms = BTreeMap<Monomial, Cyclotomic>;

fn accumulate(t: &mut Terms, m: Monomial, c: Cyclotomic) -> Result<()> {
    match t.get_mut(&m) {
        Some(v) => {
            *v = v.try_add(&c)?;
            if v.is_zero() {
                t.remove(&m);
            }
        }
        None if !c.is_zero() => {
            t.insert(m, c);
        }
        None => {}
    }
    Ok(())
}

/// Solves for Ψ degree by degree through `order` at an exact parameter
/// point. At degree m, (λ·β)ψ_β = −R_β where R collects ∇Ψ_d·F_{m−d+1}
/// over lower degrees d; λ·β vanishes only on β = (i, …, i).
pub fn truncated_first_integral(spec: &SystemSpec, point: &ParameterPoint, order: u32) -> Result<FirstIntegral> {
    let n = spec.nu();
    if order < spec.n() {
        return Err(Error::Precondition(format!("order must be at least n = {}", n)));
    }
    let names = spec.parameter_vars();
    // nonlinear part of component j, by phase exponent
    let mut field: Vec<Terms> = vec![Terms::new(); n];
    for k in 0..spec.ell() {
        for (j, comp) in field.iter_mut().enumerate() {
            let name = &names[k * n + j];
            let v = point.get(name).ok_or_else(|| Error::MissingAssignment(name.clone()))?;
            if v.order() != spec.n() {
                return Err(Error::OrderMismatch(spec.n(), v.order()));
            }
            let q = spec.param_exponent(k, j);
            let m: Monomial = q.iter().enumerate().map(|(i, &e)| (e + (i == j) as i64) as u32).collect();
            accumulate(comp, m, v.clone())?;
        }
    }
    let mut psi: Vec<Terms> = vec![Terms::new(); order as usize + 1];
    psi[n].insert(vec![1; n], Cyclotomic::one(spec.n())?);
    for m in n + 1..=order as usize {
        let mut r = Terms::new();
        for d in n..m {
            for (beta, c) in &psi[d] {
                for (i, comp) in field.iter().enumerate() {
                    if beta[i] == 0 {
                        continue;
                    }
                    let f = c.scale(&crate::Rational::from_int(beta[i] as i64));
                    for (gamma, g) in comp.iter().filter(|(g, _)| mono_degree(g) as usize == m - d + 1) {
                        let mut e = beta.clone();
                        e[i] -= 1;
                        for (a, b) in e.iter_mut().zip(gamma) {
                            *a += b;
                        }
                        accumulate(&mut r, e, f.try_mul(g)?)?;
                    }
                }
            }
        }
        for (beta, rv) in r {
            let div = lambda_dot(spec.n(), &beta);
            if div.is_zero() {
                return Ok(FirstIntegral::Obstructed {
                    degree: m as u32,
                    monomial: beta,
                    residual: rv,
                });
            }
            psi[m].insert(beta, rv.neg().try_div(&div)?);
        }
    }
    let mut coefficients: Vec<(Monomial, Cyclotomic)> = psi.into_iter().flatten().collect();
    coefficients.sort_by(|a, b| mono_degree(&a.0).cmp(&mono_degree(&b.0)).then_with(|| b.0.cmp(&a.0)));
    Ok(FirstIntegral::Solved { order, coefficients })
}
