//! Exact coefficient fields: ℚ and the cyclotomic fields ℚ(ζ) for prime order.

mod cyclotomic;
pub mod expr;
mod rational;

pub use cyclotomic::{is_prime, Cyclotomic};
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::Result;

/// Coefficient field used by polynomials.
///
/// Elements of a field carry no context themselves beyond what `Desc`
/// fixes: `()` for ℚ, the root-of-unity order for ℚ(ζ).
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    type Desc: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn zero(d: &Self::Desc) -> Self;
    fn one(d: &Self::Desc) -> Self;
    fn from_rational(d: &Self::Desc, r: Rational) -> Self;
    /// The primitive root ζ when the field has one.
    fn zeta(d: &Self::Desc) -> Option<Self>;
    /// Human-readable field name, e.g. `QQ` or `QQ(zeta_3)`.
    fn describe(d: &Self::Desc) -> String;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// Splits the value for printing inside a polynomial term: the sign, and
    /// the text of the absolute value with a flag telling whether it is a
    /// sum that needs parentheses. Units print as `"1"`.
    fn term_parts(&self) -> (bool, String, bool);

    fn to_cyclotomic(&self, order: u32) -> Result<Cyclotomic>;
}

impl Field for Rational {
    type Desc = ();

    fn zero(_: &()) -> Self {
        Rational::zero()
    }
    fn one(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational(_: &(), r: Rational) -> Self {
        r
    }
    fn zeta(_: &()) -> Option<Self> {
        None
    }
    fn describe(_: &()) -> String {
        "QQ".into()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        Rational::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational::mul(self, o)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Rational::inv(self)
    }
    fn term_parts(&self) -> (bool, String, bool) {
        (self.is_negative(), self.abs().to_string(), false)
    }
    fn to_cyclotomic(&self, order: u32) -> Result<Cyclotomic> {
        Cyclotomic::from_rational(order, self.clone())
    }
}

impl Field for Cyclotomic {
    type Desc = u32;

    fn zero(d: &u32) -> Self {
        Cyclotomic::zero_unchecked(*d)
    }
    fn one(d: &u32) -> Self {
        Cyclotomic::from_rational_unchecked(*d, Rational::one())
    }
    fn from_rational(d: &u32, r: Rational) -> Self {
        Cyclotomic::from_rational_unchecked(*d, r)
    }
    fn zeta(d: &u32) -> Option<Self> {
        Some(Cyclotomic::zeta_pow_unchecked(*d, 1))
    }
    fn describe(d: &u32) -> String {
        format!("QQ(zeta_{})", d)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
    // coefficients of one polynomial always share the ring's order
    fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("cyclotomic orders agree within a ring")
    }
    fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("cyclotomic orders agree within a ring")
    }
    fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("cyclotomic orders agree within a ring")
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Cyclotomic::inv(self)
    }
    fn term_parts(&self) -> (bool, String, bool) {
        match self.as_signed_monomial() {
            Some((neg, q, k)) => (neg, cyclotomic::monomial_text(&q, k), false),
            None => (false, self.to_string(), true),
        }
    }
    fn to_cyclotomic(&self, order: u32) -> Result<Cyclotomic> {
        if order != self.order() {
            return Err(crate::error::Error::OrderMismatch(self.order(), order));
        }
        Ok(self.clone())
    }
}
