use serde::Serialize;

use crate::error::Result;
use crate::exactnum::Field;
use crate::groebner::Ideal;
use crate::invariants::ideals::{
    equivariant_ideal, parameter_product, reversibility_ideal_ir, sibirsky_ideal, zeta_reversible_ideal,
    EquivariantRoute, ZetaRoute,
};
use crate::resonant::SystemSpec;

/// One side-by-side comparison of two ideals through their reduced bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealComparison {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub spec: String,
    /// I_S : 𝖺^∞ against the equivariant ideal.
    pub sibirsky_vs_equivariant: IdealComparison,
    /// I_R : 𝖺^∞ against the ζ-reversible ideal.
    pub reversibility_vs_zeta: IdealComparison,
}

impl SaturationReport {
    pub fn all_equal(&self) -> bool {
        self.sibirsky_vs_equivariant.equal && self.reversibility_vs_zeta.equal
    }
}

pub fn compare<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<IdealComparison> {
    let ga = a.canonical_basis()?;
    let gb = b.canonical_basis()?;
    let left: Vec<String> = ga.elements().iter().map(|p| p.to_string()).collect();
    let right: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    let equal = left == right;
    Ok(IdealComparison { left, right, equal })
}

/// Saturates I_S and I_R by the product of all parameters and compares with
/// the equivariant and ζ-reversible ideals.
pub fn check_saturation_theorems(spec: &SystemSpec) -> Result<SaturationReport> {
    let is = sibirsky_ideal(spec)?;
    let prod = parameter_product(is.ring());
    let is_sat = is.saturate(&prod)?;
    let ie = equivariant_ideal(spec, EquivariantRoute::Toric)?;

    let ir = reversibility_ideal_ir(spec)?;
    let prod_z = parameter_product(ir.ring());
    let ir_sat = ir.saturate(&prod_z)?;
    let iz = zeta_reversible_ideal(spec, ZetaRoute::ZetaToric)?;

    Ok(SaturationReport {
        spec: spec.to_json(),
        sibirsky_vs_equivariant: compare(&is_sat, &ie)?,
        reversibility_vs_zeta: compare(&ir_sat, &iz)?,
    })
}
