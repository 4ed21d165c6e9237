//! Exact computer algebra for resonant polynomial ODE families with linear
//! part diag(1, ζ, …, ζ^{n−1}).
//!
//! The crate builds invariant monoids and their Hilbert bases, the Sibirsky,
//! equivariant and ζ-reversibility ideals, checks the saturation identities
//! that relate them, and computes Poincaré–Dulac normal forms with
//! coefficients certified to lie in the invariant subalgebra.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod groebner;
pub mod intmat;
pub mod invariants;
pub mod multipoly;
pub mod normalform;
pub mod resonant;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, Field, Rational};
