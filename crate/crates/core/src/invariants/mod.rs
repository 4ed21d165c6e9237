//! Invariant monoids and the binomial ideals attached to a family.

mod hilbert;
mod ideals;
mod saturation;
mod twodim;

pub use hilbert::{hilbert_basis, lawrence_lift, HilbertBasis};
pub use ideals::{
    equivariant_ideal, lattice_ideal, parameter_product, reversibility_from_basis, reversibility_ideal_ir,
    sibirsky_from_basis, sibirsky_ideal, spec_hilbert_basis, zeta_parametrization_kernel, zeta_reversible_ideal,
    EquivariantRoute, ZetaRoute,
};
pub use saturation::{check_saturation_theorems, compare, IdealComparison, SaturationReport};
pub use twodim::{reversibility_kernel_2d, two_dim_crosschecks, TwoDimReport};
