//! Sparse exact multivariate polynomials with configurable monomial orders.
//!
//! Text form: terms in descending order joined by `+`/`-`, coefficients in
//! front of the monomial (`2/3*a^2*b`, `zeta*c001`, `(1 + zeta)*a100`),
//! exponents with `^`. Parsing accepts any arithmetic expression built from
//! numbers, variables, `zeta`, parentheses, `+ - * ^` and division by
//! numbers.

mod order;
mod poly;
mod ring;

pub use order::{MonomialOrder, OrderKind};
pub use poly::{mono_degree, mono_div, mono_divides, mono_lcm, mono_mul, Polynomial};
#[allow(unused_imports)]
pub(crate) use poly::monomial_text;
pub use ring::Ring;

/// Exponent vector of a monomial, one entry per ring variable.
pub type Monomial = Vec<u32>;
