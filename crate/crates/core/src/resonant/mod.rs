//! The family model: spec validation, parameter naming, the integer
//! matrices of the family, the block involution, Σ, the weight w and the
//! pointwise reversibility condition.

mod spec;

pub use spec::{param_name, shift, validate_spec, RawSpec, SystemSpec};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};
use crate::intmat::IntMatrix;
use crate::multipoly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Exact parameter values by name.
pub type ParameterPoint = HashMap<String, Cyclotomic>;

impl SystemSpec {
    /// Parameter ring over ℚ with the canonical deglex order.
    pub fn rational_ring(&self) -> Arc<Ring<Rational>> {
        Ring::new(&self.parameter_vars(), MonomialOrder::deglex(), ()).expect("parameter names are valid")
    }

    /// Parameter ring over ℚ(ζ_n) with the canonical deglex order.
    pub fn cyclotomic_ring(&self) -> Arc<Ring<Cyclotomic>> {
        Ring::new(&self.parameter_vars(), MonomialOrder::deglex(), self.n()).expect("parameter names are valid")
    }

    /// Monomial [ν] = ∏ a^ν over ℚ.
    pub fn monomial(&self, ring: &Arc<Ring<Rational>>, nu: &[u32]) -> Polynomial<Rational> {
        Polynomial::monomial(ring, nu.to_vec(), Rational::one())
    }
}

fn check_len(spec: &SystemSpec, len: usize) -> Result<()> {
    if len != spec.nparams() {
        return Err(Error::LengthMismatch {
            expected: spec.nparams(),
            got: len,
        });
    }
    Ok(())
}

/// 𝔏: n × nℓ, column (k, j) is T^j p^(k).
pub fn l_matrix(spec: &SystemSpec) -> IntMatrix {
    let (n, l) = (spec.nu(), spec.ell());
    let mut m = IntMatrix::zeros(n, n * l);
    for k in 0..l {
        for j in 0..n {
            let q = spec.param_exponent(k, j);
            for i in 0..n {
                m.set(i, k * n + j, q[i]);
            }
        }
    }
    m
}

/// L(ν) = 𝔏·ν.
pub fn l_map(spec: &SystemSpec, nu: &[u32]) -> Result<Vec<i64>> {
    check_len(spec, nu.len())?;
    let v: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
    l_matrix(spec).mul_vec(&v)
}

/// 𝔐: rows L^i − L^{i+1} for i = 1..n−1.
pub fn m_matrix(spec: &SystemSpec) -> IntMatrix {
    let l = l_matrix(spec);
    let (n, c) = (spec.nu(), spec.nparams());
    let mut m = IntMatrix::zeros(n - 1, c);
    for i in 0..n - 1 {
        for j in 0..c {
            m.set(i, j, l.get(i, j) - l.get(i + 1, j));
        }
    }
    m
}

/// ℓ × nℓ block-indicator rows.
fn block_rows(spec: &SystemSpec) -> IntMatrix {
    let (n, l) = (spec.nu(), spec.ell());
    let mut o = IntMatrix::zeros(l, n * l);
    for k in 0..l {
        for j in 0..n {
            o.set(k, k * n + j, 1);
        }
    }
    o
}

/// (𝔄, 𝔄̂): 𝔐 resp. the rows L^i − L^n, each stacked over the block
/// indicators. Both are (n−1+ℓ) × nℓ.
pub fn a_matrices(spec: &SystemSpec) -> (IntMatrix, IntMatrix) {
    let l = l_matrix(spec);
    let (n, c) = (spec.nu(), spec.nparams());
    let o = block_rows(spec);
    let a = m_matrix(spec).vstack(&o).expect("same width");
    let mut top = IntMatrix::zeros(n - 1, c);
    for i in 0..n - 1 {
        for j in 0..c {
            top.set(i, j, l.get(i, j) - l.get(n - 1, j));
        }
    }
    let a_hat = top.vstack(&o).expect("same width");
    (a, a_hat)
}

/// ν̂: within each block of n entries, (ν_1, …, ν_n) ↦ (ν_n, ν_1, …, ν_{n−1}).
pub fn involution<T: Copy>(spec: &SystemSpec, nu: &[T]) -> Result<Vec<T>> {
    check_len(spec, nu.len())?;
    let n = spec.nu();
    let mut out = Vec::with_capacity(nu.len());
    for block in nu.chunks(n) {
        out.push(block[n - 1]);
        out.extend_from_slice(&block[..n - 1]);
    }
    Ok(out)
}

/// Σ(ν) = Σ_i L^i(ν) ζ^{i−1}.
pub fn sigma(spec: &SystemSpec, nu: &[u32]) -> Result<Cyclotomic> {
    let l = l_map(spec, nu)?;
    let coeffs: Vec<Rational> = l.iter().map(|&x| Rational::from_int(x)).collect();
    Cyclotomic::from_coeffs(spec.n(), &coeffs)
}

/// Exponent e with w(ν) = ζ^e: Σ_i (i−1)·(sum of coordinate-i entries over blocks).
pub fn weight_exponent(spec: &SystemSpec, nu: &[i64]) -> Result<i64> {
    check_len(spec, nu.len())?;
    let n = spec.nu();
    let e: i64 = nu.iter().enumerate().map(|(c, &v)| (c % n) as i64 * v).sum();
    Ok(e.rem_euclid(n as i64))
}

/// w(ν) as an element of ℚ(ζ).
pub fn weight(spec: &SystemSpec, nu: &[u32]) -> Result<Cyclotomic> {
    let v: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
    Cyclotomic::zeta_pow(spec.n(), weight_exponent(spec, &v)?)
}

fn laurent_value(alphas: &[Cyclotomic], q: &[i64]) -> Result<Cyclotomic> {
    let n = alphas[0].order();
    let mut acc = Cyclotomic::one(n)?;
    for (a, &e) in alphas.iter().zip(q) {
        if e > 0 {
            acc = acc.try_mul(&a.pow(e as u32))?;
        } else if e < 0 {
            acc = acc.try_mul(&a.inv()?.pow((-e) as u32))?;
        }
    }
    Ok(acc)
}

/// Residuals ζ^{zp}·a^{(i)}_q·α^q − a^{(i+1)}_{Tq} of the reversibility
/// equations, one per parameter.
pub fn cond_rev_residuals(
    spec: &SystemSpec,
    point: &ParameterPoint,
    alphas: &[Cyclotomic],
    zeta_power: i64,
) -> Result<Vec<Cyclotomic>> {
    let n = spec.nu();
    if alphas.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: alphas.len(),
        });
    }
    let mut prod = Cyclotomic::one(spec.n())?;
    for a in alphas {
        prod = prod.try_mul(a)?;
    }
    if !prod.is_one() {
        return Err(Error::Precondition("alphas must multiply to 1".into()));
    }
    let names = spec.parameter_vars();
    let get = |name: &String| {
        point
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingAssignment(name.clone()))
    };
    let z = Cyclotomic::zeta_pow(spec.n(), zeta_power)?;
    let mut out = Vec::with_capacity(spec.nparams());
    for k in 0..spec.ell() {
        for j in 0..n {
            let q = spec.param_exponent(k, j);
            let here = get(&names[k * n + j])?;
            let next = get(&names[k * n + (j + 1) % n])?;
            let lhs = z.try_mul(&here)?.try_mul(&laurent_value(alphas, &q)?)?;
            out.push(lhs.try_sub(&next)?);
        }
    }
    Ok(out)
}

/// True when every reversibility equation holds exactly (ζ-power 0 is
/// equivariance).
pub fn check_cond_rev(spec: &SystemSpec, point: &ParameterPoint, alphas: &[Cyclotomic], zeta_power: i64) -> Result<bool> {
    Ok(cond_rev_residuals(spec, point, alphas, zeta_power)?
        .iter()
        .all(|r| r.is_zero()))
}

/// Point of the reversible family a^{(j)}_{T^{j−1}p^{(k)}} = ζ^{zp·j} y_k t^{T^{j−1}p^{(k)}}
/// together with the matching α_m = t_{m+1}/t_m.
pub fn reversible_point(
    spec: &SystemSpec,
    ys: &[Cyclotomic],
    ts: &[Cyclotomic],
    zeta_power: i64,
) -> Result<(ParameterPoint, Vec<Cyclotomic>)> {
    let n = spec.nu();
    if ys.len() != spec.ell() || ts.len() != n {
        return Err(Error::LengthMismatch {
            expected: spec.ell() + n,
            got: ys.len() + ts.len(),
        });
    }
    let names = spec.parameter_vars();
    let mut point = ParameterPoint::new();
    for k in 0..spec.ell() {
        for j in 0..n {
            let q = spec.param_exponent(k, j);
            let zp = Cyclotomic::zeta_pow(spec.n(), zeta_power * (j as i64 + 1))?;
            let v = zp.try_mul(&ys[k])?.try_mul(&laurent_value(ts, &q)?)?;
            point.insert(names[k * n + j].clone(), v);
        }
    }
    let mut alphas = Vec::with_capacity(n);
    for m in 0..n {
        alphas.push(ts[(m + 1) % n].try_div(&ts[m])?);
    }
    Ok((point, alphas))
}

/// Integer vector with nonnegative entries to a monomial exponent.
pub fn to_monomial(v: &[i64]) -> Result<Monomial> {
    v.iter()
        .map(|&x| u32::try_from(x).map_err(|_| Error::Precondition(format!("negative exponent {}", x))))
        .collect()
}
