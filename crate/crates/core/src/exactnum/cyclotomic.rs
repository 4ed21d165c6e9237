use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::expr::{parse_expr, ExprTarget};
use crate::exactnum::Rational;

/// Element of the cyclotomic field ℚ(ζ) for a primitive `order`-th root of
/// unity, `order` prime.
///
/// Stored in the power basis 1, ζ, …, ζ^{order−2}; the relation
/// 1 + ζ + … + ζ^{order−1} = 0 eliminates the top power.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_order(n: u32) -> Result<()> {
    if is_prime(n) {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("n must be prime, got {}", n)))
    }
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(Self::zero_unchecked(order))
    }

    pub(crate) fn zero_unchecked(order: u32) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); order as usize - 1],
        }
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Result<Self> {
        check_order(order)?;
        Ok(Self::from_rational_unchecked(order, r))
    }

    pub(crate) fn from_rational_unchecked(order: u32, r: Rational) -> Self {
        let mut z = Self::zero_unchecked(order);
        z.coeffs[0] = r;
        z
    }

    /// Builds an element from coefficients of 1, ζ, ζ², …; any length is
    /// accepted and reduced modulo the cyclotomic relation.
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Result<Self> {
        check_order(order)?;
        let n = order as usize;
        let mut acc = vec![Rational::zero(); n];
        for (i, c) in coeffs.iter().enumerate() {
            acc[i % n] = acc[i % n].add(c);
        }
        Ok(Self::fold(order, acc))
    }

    // reduces a length-n coefficient vector (powers 0..n) to the basis
    fn fold(order: u32, mut acc: Vec<Rational>) -> Self {
        let top = acc.pop().expect("order >= 2");
        if !top.is_zero() {
            for c in acc.iter_mut() {
                *c = c.sub(&top);
            }
        }
        Cyclotomic { order, coeffs: acc }
    }

    pub fn zeta(order: u32) -> Result<Self> {
        Self::zeta_pow(order, 1)
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self> {
        check_order(order)?;
        Ok(Self::zeta_pow_unchecked(order, k))
    }

    pub(crate) fn zeta_pow_unchecked(order: u32, k: i64) -> Self {
        let n = order as usize;
        let k = k.rem_euclid(order as i64) as usize;
        let mut acc = vec![Rational::zero(); n];
        acc[k] = Rational::one();
        Self::fold(order, acc)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational when it lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.order == o.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, o.order))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let n = self.order as usize;
        let mut acc = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                acc[k] = acc[k].add(&a.mul(b));
            }
        }
        Ok(Self::fold(self.order, acc))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inv()?)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::from_rational_unchecked(self.order, Rational::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial 1 + x + … + x^{n−1}.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order as usize;
        let phi = vec![Rational::one(); n];
        let a = trim(self.coeffs.clone());
        // invariant: s_i * a ≡ r_i (mod phi)
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while r1.len() != 1 {
            let (q, r) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd nontrivial: impossible for a nonzero element when phi is irreducible
                return Err(Error::Structural("cyclotomic inverse failed".into()));
            }
        }
        let c = r1[0].inv()?;
        let s: Vec<Rational> = s1.iter().map(|x| x.mul(&c)).collect();
        Self::from_coeffs(self.order, &s)
    }

    /// Complex embedding with ζ = exp(2πi/order).
    pub fn to_complex(&self) -> (f64, f64) {
        let th = 2.0 * std::f64::consts::PI / self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64();
            re += v * (th * k as f64).cos();
            im += v * (th * k as f64).sin();
        }
        (re, im)
    }

    /// Parses the text form, e.g. `"-1 - zeta"` or `"2/3 + 1/3*zeta^2"`.
    pub fn parse(order: u32, text: &str) -> Result<Self> {
        check_order(order)?;
        parse_expr(text, &CycloTarget(order))
    }

    /// When the element is `±q·ζ^k` for a positive rational q, returns the
    /// sign, q and k with k minimal. Used for compact printing.
    pub fn as_signed_monomial(&self) -> Option<(bool, Rational, u32)> {
        let nz: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect();
        if nz.len() == 1 {
            let c = &self.coeffs[nz[0]];
            return Some((c.is_negative(), c.abs(), nz[0] as u32));
        }
        // ζ^{n−1} = −(1 + ζ + … + ζ^{n−2}) has all coefficients equal
        if self.order > 2 && nz.len() == self.coeffs.len() {
            let c = &self.coeffs[0];
            if self.coeffs.iter().all(|x| x == c) {
                let q = c.neg();
                return Some((q.is_negative(), q.abs(), self.order - 1));
            }
        }
        None
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    trim((0..n)
        .map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z)))
        .collect())
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("trimmed divisor");
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1].mul(&lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&c.mul(bj));
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

struct CycloTarget(u32);

impl ExprTarget for CycloTarget {
    type Value = Cyclotomic;
    fn number(&self, r: Rational) -> Result<Cyclotomic> {
        Ok(Cyclotomic::from_rational_unchecked(self.0, r))
    }
    fn ident(&self, name: &str) -> Result<Cyclotomic> {
        if name == "zeta" {
            Ok(Cyclotomic::zeta_pow_unchecked(self.0, 1))
        } else {
            Err(Error::UnknownVariable(name.to_string()))
        }
    }
    fn add(&self, a: Cyclotomic, b: Cyclotomic) -> Result<Cyclotomic> {
        a.try_add(&b)
    }
    fn mul(&self, a: Cyclotomic, b: Cyclotomic) -> Result<Cyclotomic> {
        a.try_mul(&b)
    }
    fn neg(&self, a: Cyclotomic) -> Result<Cyclotomic> {
        Ok(a.neg())
    }
}

/// Text for `q·ζ^k` with q > 0: `"zeta"`, `"2*zeta^3"`, `"1/2"`.
pub(crate) fn monomial_text(q: &Rational, k: u32) -> String {
    let z = match k {
        0 => return q.to_string(),
        1 => "zeta".to_string(),
        _ => format!("zeta^{}", k),
    };
    if q.is_one() {
        z
    } else {
        format!("{}*{}", q, z)
    }
}

impl fmt::Display for Cyclotomic {
    /// Ascending powers of ζ, e.g. `-1 - zeta` or `2/3 + 1/3*zeta^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = monomial_text(&c.abs(), k as u32);
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{}", body)?,
                (true, true) => write!(f, "-{}", body)?,
                (false, false) => write!(f, " + {}", body)?,
                (false, true) => write!(f, " - {}", body)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

/// Parses `"<order>:<text>"`, the self-describing form used in JSON output.
impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (o, t) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `order:value`, got `{}`", s)))?;
        let o: u32 = o
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order `{}`", o)))?;
        Cyclotomic::parse(o, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u32, s: &str) -> Cyclotomic {
        Cyclotomic::parse(n, s).unwrap()
    }

    #[test]
    fn zeta_relations() {
        for n in [2u32, 3, 5, 7] {
            let z = Cyclotomic::zeta(n).unwrap();
            assert!(z.pow(n).is_one());
            let mut s = Cyclotomic::zero(n).unwrap();
            for k in 0..n {
                s = s.try_add(&z.pow(k)).unwrap();
            }
            assert!(s.is_zero());
        }
        assert_eq!(Cyclotomic::zeta(2).unwrap().to_string(), "-1");
        assert_eq!(Cyclotomic::zeta_pow(3, 2).unwrap().to_string(), "-1 - zeta");
        assert_eq!(Cyclotomic::zeta_pow(3, -1).unwrap(), c(3, "zeta^2"));
    }

    #[test]
    fn rejects_composite_order() {
        assert!(matches!(Cyclotomic::zero(4), Err(Error::InvalidSpec(_))));
        assert!(Cyclotomic::zeta(1).is_err());
    }

    #[test]
    fn order_mismatch() {
        let a = Cyclotomic::zeta(3).unwrap();
        let b = Cyclotomic::zeta(5).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::OrderMismatch(3, 5))));
    }

    #[test]
    fn inverse() {
        let a = c(5, "2 + zeta - 3*zeta^3");
        let b = a.inv().unwrap();
        assert!(a.try_mul(&b).unwrap().is_one());
        // 1 + ζ = −ζ² for n = 3
        assert_eq!(c(3, "1 + zeta").inv().unwrap(), c(3, "-zeta"));
        assert!(Cyclotomic::zero(3).unwrap().inv().is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "-1 - zeta", "2/3 + 1/3*zeta^2", "zeta^3", "-zeta", "5"] {
            assert_eq!(c(5, s).to_string(), s);
        }
        assert_eq!("3:1 + zeta".parse::<Cyclotomic>().unwrap(), c(3, "1 + zeta"));
    }

    #[test]
    fn complex_embedding() {
        let (re, im) = Cyclotomic::zeta(3).unwrap().to_complex();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn signed_monomial_detects_top_power() {
        let z2 = Cyclotomic::zeta_pow(3, 2).unwrap().neg();
        let (neg, q, k) = z2.as_signed_monomial().unwrap();
        assert!(neg && q.is_one() && k == 2);
        assert!(c(3, "1 + 2*zeta").as_signed_monomial().is_none());
    }
}
