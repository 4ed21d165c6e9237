use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Field, Rational};
use crate::multipoly::{mono_degree, mono_mul, Monomial, Polynomial, Ring};
use crate::resonant::SystemSpec;

/// Truncated power series in the phase variables with parameter-polynomial
/// coefficients, keyed by phase exponent.
pub type Series = BTreeMap<Monomial, Polynomial<Cyclotomic>>;

/// λ·α = Σ α_i ζ^i for the linear part diag(1, ζ, …, ζ^{n−1}).
pub fn lambda_dot(n: u32, alpha: &[u32]) -> Cyclotomic {
    let mut acc = Cyclotomic::zero_unchecked(n);
    for (i, &a) in alpha.iter().enumerate() {
        if a > 0 {
            let z = Cyclotomic::zeta_pow_unchecked(n, i as i64);
            acc = acc.add(&z.scale(&Rational::from_int(a as i64)));
        }
    }
    acc
}

/// Whether x^α in component `k` (0-based) is resonant, i.e. λ·α − λ_k = 0.
/// For this linear part that means α = (i, …, i) + e_k with i ≥ 1.
pub fn is_resonant(n: u32, k: usize, alpha: &[u32]) -> bool {
    lambda_dot(n, alpha)
        .sub(&Cyclotomic::zeta_pow_unchecked(n, k as i64))
        .is_zero()
}

fn add_term(s: &mut Series, m: Monomial, c: Polynomial<Cyclotomic>) {
    if c.is_zero() {
        return;
    }
    match s.get_mut(&m) {
        Some(v) => {
            let sum = v.add_raw(&c);
            if sum.is_zero() {
                s.remove(&m);
            } else {
                *v = sum;
            }
        }
        None => {
            s.insert(m, c);
        }
    }
}

fn add_series(a: &mut Series, b: Series) {
    for (m, c) in b {
        add_term(a, m, c);
    }
}

fn mul_trunc(a: &Series, b: &Series, order: u32) -> Series {
    let mut out = Series::new();
    for (ma, ca) in a {
        let da = mono_degree(ma);
        for (mb, cb) in b {
            if da + mono_degree(mb) <= order as u64 {
                add_term(&mut out, mono_mul(ma, mb), ca.mul_raw(cb));
            }
        }
    }
    out
}

fn derivative(s: &Series, i: usize) -> Series {
    let mut out = Series::new();
    for (m, c) in s {
        if m[i] > 0 {
            let mut d = m.clone();
            d[i] -= 1;
            let f = Cyclotomic::from_rational_unchecked(*c.ring().desc(), Rational::from_int(m[i] as i64));
            add_term(&mut out, d, c.scale(&f));
        }
    }
    out
}

/// ẋ = Λx + f(x) with Λ = diag(1, ζ, …, ζ^{n−1}), truncated at a total phase
/// degree. Components hold the full field including the linear part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricVectorField {
    n: u32,
    order: u32,
    ring: Arc<Ring<Cyclotomic>>,
    components: Vec<Series>,
}

impl ParametricVectorField {
    /// Builds the field from nonlinear parts; terms of degree < 2 or above
    /// `order` are rejected and dropped respectively.
    pub fn new(ring: &Arc<Ring<Cyclotomic>>, order: u32, nonlinear: Vec<Series>) -> Result<Self> {
        let n = *ring.desc();
        if nonlinear.len() != n as usize {
            return Err(Error::LengthMismatch {
                expected: n as usize,
                got: nonlinear.len(),
            });
        }
        let mut components = Vec::with_capacity(n as usize);
        for (k, comp) in nonlinear.into_iter().enumerate() {
            let mut s = Series::new();
            let mut e = vec![0u32; n as usize];
            e[k] = 1;
            s.insert(e, Polynomial::constant(ring, Cyclotomic::zeta_pow_unchecked(n, k as i64)));
            for (m, c) in comp {
                if m.len() != n as usize {
                    return Err(Error::LengthMismatch {
                        expected: n as usize,
                        got: m.len(),
                    });
                }
                if c.ring().vars() != ring.vars() {
                    return Err(Error::RingMismatch);
                }
                let d = mono_degree(&m);
                if d < 2 {
                    return Err(Error::Precondition(format!("nonlinear term of degree {}", d)));
                }
                if d <= order as u64 {
                    add_term(&mut s, m, c);
                }
            }
            components.push(s);
        }
        Ok(ParametricVectorField {
            n,
            order,
            ring: ring.clone(),
            components,
        })
    }

    /// ẋ_j = ζ^j x_j + x_j Σ_k a^{(j)}_{T^j p^(k)} x^{T^j p^(k)}.
    pub fn from_spec(spec: &SystemSpec, order: u32) -> Result<Self> {
        let ring = spec.cyclotomic_ring();
        let n = spec.nu();
        let mut nonlinear = vec![Series::new(); n];
        for k in 0..spec.ell() {
            for (j, comp) in nonlinear.iter_mut().enumerate() {
                let q = spec.param_exponent(k, j);
                let mut m: Monomial = Vec::with_capacity(n);
                for (i, &e) in q.iter().enumerate() {
                    m.push((e + (i == j) as i64) as u32);
                }
                add_term(comp, m, Polynomial::var_at(&ring, k * n + j));
            }
        }
        Self::new(&ring, order, nonlinear)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn ring(&self) -> &Arc<Ring<Cyclotomic>> {
        &self.ring
    }

    /// Full components, linear part included.
    pub fn components(&self) -> &[Series] {
        &self.components
    }

    /// Coefficient of x^α in component k.
    pub fn coeff(&self, k: usize, alpha: &[u32]) -> Polynomial<Cyclotomic> {
        self.components[k]
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    /// All nonlinear terms that are not resonant, as (component, exponent).
    pub fn nonresonant_terms(&self) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (k, comp) in self.components.iter().enumerate() {
            for m in comp.keys() {
                if mono_degree(m) >= 2 && !is_resonant(self.n, k, m) {
                    out.push((k, m.clone()));
                }
            }
        }
        out
    }

    /// Near-identity change x = y + h(y), h homogeneous of degree ≥ 2:
    /// the new field is (I + Dh)^{-1} F(y + h) truncated at the order.
    fn transform(&self, h: &[Series]) -> Self {
        let n = self.n as usize;
        let order = self.order;
        let subs: Vec<Series> = (0..n)
            .map(|i| {
                let mut s = h[i].clone();
                let mut e = vec![0u32; n];
                e[i] = 1;
                add_term(&mut s, e, Polynomial::one(&self.ring));
                s
            })
            .collect();
        let mut max_exp = vec![0u32; n];
        for comp in &self.components {
            for m in comp.keys() {
                for (i, &e) in m.iter().enumerate() {
                    max_exp[i] = max_exp[i].max(e);
                }
            }
        }
        let powers: Vec<Vec<Series>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut p = vec![BTreeMap::from([(vec![0u32; n], Polynomial::one(&self.ring))])];
                for e in 1..=max_exp[i] as usize {
                    let next = mul_trunc(&p[e - 1], &subs[i], order);
                    p.push(next);
                }
                p
            })
            .collect();
        let composed: Vec<Series> = self
            .components
            .par_iter()
            .map(|comp| {
                let mut out = Series::new();
                for (m, c) in comp {
                    let mut acc: Series = BTreeMap::from([(vec![0u32; n], c.clone())]);
                    for (i, &e) in m.iter().enumerate() {
                        if e > 0 {
                            acc = mul_trunc(&acc, &powers[i][e as usize], order);
                        }
                    }
                    add_series(&mut out, acc);
                }
                out
            })
            .collect();
        let dh: Vec<Vec<Series>> = h.iter().map(|hk| (0..n).map(|i| derivative(hk, i)).collect()).collect();
        let mut result = composed.clone();
        let mut term = composed;
        loop {
            let next: Vec<Series> = (0..n)
                .into_par_iter()
                .map(|k| {
                    let mut out = Series::new();
                    for i in 0..n {
                        for (m, c) in mul_trunc(&dh[k][i], &term[i], order) {
                            add_term(&mut out, m, c.neg());
                        }
                    }
                    out
                })
                .collect();
            if next.iter().all(|s| s.is_empty()) {
                break;
            }
            for (r, t) in result.iter_mut().zip(&next) {
                add_series(r, t.clone());
            }
            term = next;
        }
        ParametricVectorField {
            n: self.n,
            order,
            ring: self.ring.clone(),
            components: result,
        }
    }

    /// Poincaré–Dulac normalization, degree by degree from 2 to the order.
    /// Each non-resonant g·x^α in component k is removed with
    /// h = g / (λ·α − λ_k); resonant components of h are zero.
    pub fn normalize(&self) -> Self {
        let mut field = self.clone();
        let n = self.n;
        for d in 2..=self.order as u64 {
            let h: Vec<Series> = field
                .components
                .par_iter()
                .enumerate()
                .map(|(k, comp)| {
                    let mut hk = Series::new();
                    for (m, g) in comp.iter().filter(|(m, _)| mono_degree(m) == d) {
                        let div = lambda_dot(n, m).sub(&Cyclotomic::zeta_pow_unchecked(n, k as i64));
                        if let Ok(inv) = div.inv() {
                            hk.insert(m.clone(), g.scale(&inv));
                        }
                    }
                    hk
                })
                .collect();
            if h.iter().any(|s| !s.is_empty()) {
                field = field.transform(&h);
            }
        }
        field
    }
}
