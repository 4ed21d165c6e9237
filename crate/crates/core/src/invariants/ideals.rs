use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Field, Rational};
use crate::groebner::{toric_kernel, Ideal, MonomialImage};
use crate::invariants::hilbert::{hilbert_basis, HilbertBasis};
use crate::multipoly::{mono_degree, Monomial, Polynomial, Ring};
use crate::resonant::{a_matrices, involution, m_matrix, weight_exponent, SystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquivariantRoute {
    Elimination,
    Toric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaRoute {
    Elimination,
    ZetaToric,
}

/// Hilbert basis of the invariant monoid ker 𝔐 ∩ ℕ₀^{nℓ}.
pub fn spec_hilbert_basis(spec: &SystemSpec) -> Result<HilbertBasis> {
    hilbert_basis(&m_matrix(spec))
}

/// Binomials c·[ν] − [ν̂] for ν in the Hilbert basis with ν ≠ ν̂, made
/// monic and deduplicated.
fn conjugation_binomials<F: Field>(
    spec: &SystemSpec,
    ring: &Arc<Ring<F>>,
    h: &HilbertBasis,
    coeff: impl Fn(&Monomial) -> F,
) -> Result<Vec<Polynomial<F>>> {
    let mut out: Vec<Polynomial<F>> = Vec::new();
    for nu in &h.vectors {
        let hat = involution(spec, nu)?;
        if &hat == nu {
            continue;
        }
        let b = Polynomial::monomial(ring, nu.clone(), coeff(nu))
            .sub_raw(&Polynomial::monomial(ring, hat, ring.one()))
            .monic();
        if !b.is_zero() && !out.contains(&b) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Sibirsky ideal ⟨[ν] − [ν̂] : ν ∈ H, ν ≠ ν̂⟩ over ℚ.
///
/// Every non-self-conjugate basis element contributes its binomial, so each
/// orbit {ν, ν̂, …} yields n binomials; a single binomial per orbit would
/// not generate the ideal when n > 2.
pub fn sibirsky_ideal(spec: &SystemSpec) -> Result<Ideal<Rational>> {
    let h = spec_hilbert_basis(spec)?;
    sibirsky_from_basis(spec, &h)
}

pub fn sibirsky_from_basis(spec: &SystemSpec, h: &HilbertBasis) -> Result<Ideal<Rational>> {
    let ring = spec.rational_ring();
    let gens = conjugation_binomials(spec, &ring, h, |_| Rational::one())?;
    Ideal::new(&ring, gens)
}

/// I_R = ⟨ζ^{|ν|}[ν] − [ν̂] : ν ∈ H, ν ≠ ν̂⟩ over ℚ(ζ).
pub fn reversibility_ideal_ir(spec: &SystemSpec) -> Result<Ideal<Cyclotomic>> {
    let h = spec_hilbert_basis(spec)?;
    reversibility_from_basis(spec, &h)
}

pub fn reversibility_from_basis(spec: &SystemSpec, h: &HilbertBasis) -> Result<Ideal<Cyclotomic>> {
    let ring = spec.cyclotomic_ring();
    let n = spec.n();
    let gens = conjugation_binomials(spec, &ring, h, |nu| {
        Cyclotomic::zeta_pow(n, mono_degree(nu) as i64).expect("prime order")
    })?;
    Ideal::new(&ring, gens)
}

fn split(beta: &[i64]) -> (Monomial, Monomial) {
    let plus = beta.iter().map(|&b| b.max(0) as u32).collect();
    let minus = beta.iter().map(|&b| (-b).max(0) as u32).collect();
    (plus, minus)
}

fn all_vars_product<F: Field>(ring: &Arc<Ring<F>>) -> Polynomial<F> {
    Polynomial::monomial(ring, vec![1; ring.nvars()], ring.one())
}

/// Lattice ideal of the lattice spanned by `basis`:
/// ⟨x^{β⁺} − x^{β⁻}⟩ saturated by the product of all variables.
pub fn lattice_ideal<F: Field>(basis: &[Vec<i64>], ring: &Arc<Ring<F>>) -> Result<Ideal<F>> {
    let mut gens = Vec::new();
    for b in basis {
        if b.len() != ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: ring.nvars(),
                got: b.len(),
            });
        }
        let (p, m) = split(b);
        gens.push(Polynomial::monomial(ring, p, ring.one()).sub_raw(&Polynomial::monomial(ring, m, ring.one())));
    }
    Ideal::new(ring, gens)?.saturate(&all_vars_product(ring))
}

fn alpha_names(spec: &SystemSpec) -> Vec<String> {
    (1..=spec.nu()).map(|i| format!("alpha{}", i)).collect()
}

/// I^(E) / I^(ζ) generators: ζ^{zp}·a_q·α^q − a_{Tq}, with α_m^{-1}
/// written as ∏_{i≠m} α_i, plus α_1⋯α_n − 1.
fn alpha_system<F: Field>(spec: &SystemSpec, desc: F::Desc, zeta_power: i64) -> Result<Ideal<F>> {
    let n = spec.nu();
    let mut vars = alpha_names(spec);
    vars.extend(spec.parameter_vars());
    let ring = Ring::<F>::new(&vars, crate::multipoly::MonomialOrder::deglex(), desc)?;
    let unit = match F::zeta(ring.desc()) {
        Some(z) => {
            let mut u = ring.one();
            for _ in 0..zeta_power.rem_euclid(spec.n() as i64) {
                u = u.mul(&z);
            }
            u
        }
        None if zeta_power == 0 => ring.one(),
        None => return Err(Error::Precondition("ζ-power needs a cyclotomic field".into())),
    };
    let mut gens = Vec::new();
    for k in 0..spec.ell() {
        for j in 0..n {
            let q = spec.param_exponent(k, j);
            let mut mono = vec![0u32; ring.nvars()];
            for (m, &e) in q.iter().enumerate() {
                if e >= 0 {
                    mono[m] += e as u32;
                } else {
                    for (i, slot) in mono.iter_mut().enumerate().take(n) {
                        if i != m {
                            *slot += (-e) as u32;
                        }
                    }
                }
            }
            mono[n + k * n + j] += 1;
            let next = Polynomial::var_at(&ring, n + k * n + (j + 1) % n);
            gens.push(Polynomial::monomial(&ring, mono, unit.clone()).sub_raw(&next));
        }
    }
    let mut prod = vec![0u32; ring.nvars()];
    for slot in prod.iter_mut().take(n) {
        *slot = 1;
    }
    gens.push(Polynomial::monomial(&ring, prod, ring.one()).sub_raw(&Polynomial::one(&ring)));
    Ideal::new(&ring, gens)
}

/// Map a^{(j)}_q ↦ unit_j · y_k · ∏_{m<n} t_m^{q_m − q_n}, the family of
/// reversible points with t_n eliminated through t_1⋯t_n = 1.
fn parametrization_images<F: Field>(spec: &SystemSpec, ring: &Arc<Ring<F>>, zeta_power: i64) -> Result<Vec<MonomialImage<F>>> {
    let n = spec.nu();
    let (l, d) = (spec.ell(), n - 1);
    let mut imgs = Vec::new();
    for k in 0..l {
        for j in 0..n {
            let q = spec.param_exponent(k, j);
            let mut exps = vec![0i64; l + d];
            exps[k] = 1;
            for m in 0..d {
                exps[l + m] = q[m] - q[n - 1];
            }
            let unit = if zeta_power == 0 {
                ring.one()
            } else {
                let z = F::zeta(ring.desc()).ok_or_else(|| Error::Precondition("ζ-power needs a cyclotomic field".into()))?;
                let mut u = ring.one();
                for _ in 0..(zeta_power * (j as i64 + 1)).rem_euclid(spec.n() as i64) {
                    u = u.mul(&z);
                }
                u
            };
            imgs.push(MonomialImage { unit, exps });
        }
    }
    Ok(imgs)
}

fn aux_names(spec: &SystemSpec) -> Vec<String> {
    let mut aux: Vec<String> = (1..=spec.ell()).map(|k| format!("y{}", k)).collect();
    aux.extend((1..spec.nu()).map(|m| format!("t{}", m)));
    aux
}

/// Ideal of the Zariski closure of the equivariant systems, over ℚ.
pub fn equivariant_ideal(spec: &SystemSpec, route: EquivariantRoute) -> Result<Ideal<Rational>> {
    match route {
        EquivariantRoute::Elimination => {
            let sys = alpha_system::<Rational>(spec, (), 0)?;
            let out = sys.eliminate(&alpha_names(spec))?;
            out.with_ring(&spec.rational_ring())
        }
        EquivariantRoute::Toric => {
            let ring = spec.rational_ring();
            let imgs = parametrization_images(spec, &ring, 0)?;
            toric_kernel(&ring, &aux_names(spec), &imgs)
        }
    }
}

/// Ideal of the Zariski closure of the ζ-reversible systems, over ℚ(ζ).
pub fn zeta_reversible_ideal(spec: &SystemSpec, route: ZetaRoute) -> Result<Ideal<Cyclotomic>> {
    let ring = spec.cyclotomic_ring();
    match route {
        ZetaRoute::Elimination => {
            let sys = alpha_system::<Cyclotomic>(spec, spec.n(), 1)?;
            sys.eliminate(&alpha_names(spec))?.with_ring(&ring)
        }
        ZetaRoute::ZetaToric => {
            let (a, _) = a_matrices(spec);
            let basis = a.integer_kernel()?;
            let n = spec.n();
            let mut gens = Vec::new();
            for b in &basis {
                let (p, m) = split(b);
                let wp = weight_exponent(spec, &p.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
                let wm = weight_exponent(spec, &m.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
                let f = Polynomial::monomial(&ring, p, Cyclotomic::zeta_pow(n, wm)?)
                    .sub_raw(&Polynomial::monomial(&ring, m, Cyclotomic::zeta_pow(n, wp)?));
                gens.push(f);
            }
            Ideal::new(&ring, gens)?.saturate(&all_vars_product(&ring))
        }
    }
}

/// Kernel of the ζ-twisted parametrization; a third description of the
/// ζ-reversible ideal used for cross-checks.
pub fn zeta_parametrization_kernel(spec: &SystemSpec) -> Result<Ideal<Cyclotomic>> {
    let ring = spec.cyclotomic_ring();
    let imgs = parametrization_images(spec, &ring, 1)?;
    toric_kernel(&ring, &aux_names(spec), &imgs)
}

/// Product of all parameters.
pub fn parameter_product<F: Field>(ring: &Arc<Ring<F>>) -> Polynomial<F> {
    all_vars_product(ring)
}
