use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// everything else falls back to big integers. Both representations are
/// normalized so that equal values always compare and hash equal.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(BigInt, BigInt),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_i128(v as i128, 1)
    }

    /// Builds `num/den`, reducing to lowest terms.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_big(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let neg = (num < 0) != (den < 0);
        let (un, ud) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd_u128(un, ud);
        let (un, ud) = (un / g, ud / g);
        if un <= i64::MAX as u128 && ud <= i64::MAX as u128 {
            let n = un as i64;
            Rational(Repr::Small(if neg { -n } else { n }, ud as i64))
        } else {
            let n = BigInt::from(un);
            Rational(Repr::Big(if neg { -n } else { n }, BigInt::from(ud)))
        }
    }

    fn normalize_big(num: BigInt, den: BigInt) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            // i64::MIN is kept big so that negation stays inline-safe
            (Some(a), Some(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(n, d)),
        }
    }

    fn big_parts(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(n, d) => (n.clone(), d.clone()),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.big_parts().0
    }

    pub fn denom(&self) -> BigInt {
        self.big_parts().1
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(_, d) => d.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(n, _) => n.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Self::normalize_big(-BigInt::from(*n), BigInt::from(*d)),
            },
            Repr::Big(n, d) => Self::normalize_big(-n.clone(), d.clone()),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Self::from_i128(a + c, b);
                }
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Self::from_i128(s, z),
                        None => self.add_big(o),
                    },
                    _ => self.add_big(o),
                }
            }
            _ => self.add_big(o),
        }
    }

    fn add_big(&self, o: &Self) -> Self {
        let (a, b) = self.big_parts();
        let (c, d) = o.big_parts();
        Self::normalize_big(a * &d + c * &b, b * d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                // a*c and b*d fit in i128 since all inputs fit in i64
                Self::from_i128(a * c, b * d)
            }
            _ => {
                let (a, b) = self.big_parts();
                let (c, d) = o.big_parts();
                Self::normalize_big(a * c, b * d)
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(n, d) => Self::normalize_big(d.clone(), n.clone()),
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(n, d) => n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Returns the value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a, b), Repr::Big(c, d)) => a == c && b == d,
            // normalized forms never mix for equal values
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(n, d) => {
                1u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => {
                let (a, b) = self.big_parts();
                let (c, d) = other.big_parts();
                (a * d).cmp(&(c * b))
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(n, d) if d.is_one() => write!(f, "{}", n),
            Repr::Big(n, d) => write!(f, "{}/{}", n, d),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional leading sign.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{}`", s));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Self::from_bigints(num, den)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn lowest_terms_and_sign() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(0, 7), Rational::zero());
        assert_eq!(q(-6, -3).to_string(), "2");
        assert_eq!(q(3, 9).to_string(), "1/3");
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let big = Rational::from_int(i64::MAX);
        let s = big.add(&big);
        assert_eq!(s.to_string(), "18446744073709551614");
        assert_eq!(s.sub(&big), big);
        let p = big.mul(&big).div(&big).unwrap();
        assert_eq!(p, big);
        let m = Rational::from_int(i64::MIN).neg();
        assert_eq!(m.to_string(), "9223372036854775808");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-5", "7/3", "-12/5"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(Rational::zero().inv(), Err(Error::DivisionByZero)));
    }
}
