use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::groebner::{toric_kernel, Ideal, MonomialImage};
use crate::invariants::ideals::{lattice_ideal, sibirsky_from_basis, spec_hilbert_basis};
use crate::invariants::saturation::{compare, IdealComparison};
use crate::resonant::{involution, SystemSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoDimReport {
    pub spec: String,
    /// I_S against the kernel 𝓘 of the reversibility map.
    pub sibirsky_vs_kernel: IdealComparison,
    /// I_S against the lattice ideal of {ν − ν̂ : ν ∈ H}.
    pub sibirsky_vs_lattice: IdealComparison,
    /// Every binomial of the reduced Sibirsky basis has monomials with
    /// disjoint supports.
    pub disjoint_supports: bool,
}

impl TwoDimReport {
    pub fn passed(&self) -> bool {
        self.sibirsky_vs_kernel.equal && self.sibirsky_vs_lattice.equal && self.disjoint_supports
    }
}

/// Kernel of a_{pq} ↦ y_k t^{q−p}, b_{qp} ↦ y_k t^{p−q}.
pub fn reversibility_kernel_2d(spec: &SystemSpec) -> Result<Ideal<Rational>> {
    if spec.n() != 2 {
        return Err(Error::Precondition("two-dimensional checks need n = 2".into()));
    }
    let ring = spec.rational_ring();
    let l = spec.ell();
    let mut imgs = Vec::new();
    for k in 0..l {
        let p = &spec.exponents()[k];
        let d = p[1] - p[0];
        for sign in [1, -1] {
            let mut exps = vec![0i64; l + 1];
            exps[k] = 1;
            exps[l] = sign * d;
            imgs.push(MonomialImage {
                unit: Rational::one(),
                exps,
            });
        }
    }
    let mut aux: Vec<String> = (1..=l).map(|k| format!("y{}", k)).collect();
    aux.push("t".into());
    toric_kernel(&ring, &aux, &imgs)
}

pub fn two_dim_crosschecks(spec: &SystemSpec) -> Result<TwoDimReport> {
    if spec.n() != 2 {
        return Err(Error::Precondition("two-dimensional checks need n = 2".into()));
    }
    let h = spec_hilbert_basis(spec)?;
    let is = sibirsky_from_basis(spec, &h)?;
    let kernel = reversibility_kernel_2d(spec)?;
    let mut lattice = Vec::new();
    for nu in &h.vectors {
        let hat = involution(spec, nu)?;
        let d: Vec<i64> = nu.iter().zip(&hat).map(|(&a, &b)| a as i64 - b as i64).collect();
        if d.iter().any(|&x| x != 0) {
            lattice.push(d);
        }
    }
    let il = lattice_ideal(&lattice, is.ring())?;
    let gb = is.canonical_basis()?;
    let disjoint_supports = gb.elements().iter().all(|g| {
        g.terms().len() != 2 || {
            let (a, b) = (&g.terms()[0].0, &g.terms()[1].0);
            a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
        }
    });
    Ok(TwoDimReport {
        spec: spec.to_json(),
        sibirsky_vs_kernel: compare(&is, &kernel)?,
        sibirsky_vs_lattice: compare(&is, &il)?,
        disjoint_supports,
    })
}
