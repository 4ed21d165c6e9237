use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::expr::{parse_expr, ExprTarget};
use crate::exactnum::{Cyclotomic, Field, Rational};
use crate::multipoly::{Monomial, Ring};

/// Sparse polynomial with terms kept in descending order of the ring's
/// monomial order and no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms && (Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a` divides `b`.
pub fn mono_div(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F) -> Self {
        Self::monomial(ring, vec![0; ring.nvars()], c)
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.len(), ring.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring<F>>, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Arc<Ring<F>>, i: usize) -> Self {
        let mut m = vec![0; ring.nvars()];
        m[i] = 1;
        Self::monomial(ring, m, ring.one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: &Arc<Ring<F>>, terms: Vec<(Monomial, F)>) -> Self {
        let mut map: HashMap<Monomial, F> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            match map.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(ring, map)
    }

    fn from_map(ring: &Arc<Ring<F>>, map: HashMap<Monomial, F>) -> Self {
        let mut terms: Vec<(Monomial, F)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms that are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, terms: Vec<(Monomial, F)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// `q·[m]` for a rational coefficient.
    pub fn from_rational_term(ring: &Arc<Ring<F>>, m: Monomial, q: Rational) -> Self {
        let c = F::from_rational(ring.desc(), q);
        Self::monomial(ring, m, c)
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| mono_degree(&t.0)).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.iter().all(|&e| e == 0))
    }

    /// Coefficient of the monomial `m`, zero when absent.
    pub fn coeff(&self, m: &[u32]) -> F {
        let ord = self.ring.order();
        match self.terms.binary_search_by(|t| ord.cmp(m, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    fn same_ring(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.add_raw(o))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.sub_raw(o))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.mul_raw(o))
    }

    pub(crate) fn add_raw(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub(crate) fn sub_raw(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        let conv = |c: &F| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), conv(&t.1))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn mul_raw(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.mul_term(m, c);
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.mul_term(m, c);
        }
        let mut map: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = mono_mul(m1, m2);
                let c = c1.mul(c2);
                match map.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, map)
    }

    /// Multiplies by `c·[m]`; monomial orders are multiplicative so the
    /// term order is preserved.
    pub fn mul_term(&self, m: &[u32], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mono_mul(mm, m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_raw(&base);
            }
        }
        acc
    }

    /// Scales so that the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<Ring<F>>) -> Result<Self> {
        if Arc::ptr_eq(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.desc() != target.desc() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = vec![0; target.nvars()];
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => nm[j] = e,
                    None => return Err(Error::UnknownVariable(self.ring.vars()[i].clone())),
                }
            }
            terms.push((nm, c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Maps coefficients into another field over a ring with the same
    /// variables.
    pub fn map_coeffs<G: Field>(&self, target: &Arc<Ring<G>>, f: impl Fn(&F) -> Result<G>) -> Result<Polynomial<G>> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    /// Exact evaluation at a point of ℚ(ζ_order)^vars.
    pub fn eval(&self, point: &HashMap<String, Cyclotomic>, order: u32) -> Result<Cyclotomic> {
        let vals: Vec<Option<&Cyclotomic>> = self.ring.vars().iter().map(|v| point.get(v)).collect();
        let mut acc = Cyclotomic::zero(order)?;
        for (m, c) in &self.terms {
            let mut t = c.to_cyclotomic(order)?;
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = vals[i].ok_or_else(|| Error::MissingAssignment(self.ring.vars()[i].clone()))?;
                t = t.try_mul(&v.pow(e))?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Parses the text grammar over `ring`.
    pub fn parse(ring: &Arc<Ring<F>>, text: &str) -> Result<Self> {
        parse_expr(text, &PolyTarget(ring))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn monomial_text(vars: &[String], m: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body, paren) = c.term_parts();
            let mono = monomial_text(self.ring.vars(), m);
            let coef = if paren { format!("({})", body) } else { body };
            let text = if mono.is_empty() {
                coef
            } else if coef == "1" {
                mono
            } else {
                format!("{}*{}", coef, mono)
            };
            match (idx == 0, neg) {
                (true, false) => write!(f, "{}", text)?,
                (true, true) => write!(f, "-{}", text)?,
                (false, false) => write!(f, " + {}", text)?,
                (false, true) => write!(f, " - {}", text)?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

struct PolyTarget<'a, F: Field>(&'a Arc<Ring<F>>);

impl<'a, F: Field> ExprTarget for PolyTarget<'a, F> {
    type Value = Polynomial<F>;
    fn number(&self, r: Rational) -> Result<Polynomial<F>> {
        Ok(Polynomial::constant(self.0, F::from_rational(self.0.desc(), r)))
    }
    fn ident(&self, name: &str) -> Result<Polynomial<F>> {
        if name == "zeta" {
            let z = F::zeta(self.0.desc()).ok_or_else(|| Error::UnknownVariable("zeta".into()))?;
            return Ok(Polynomial::constant(self.0, z));
        }
        Polynomial::var(self.0, name)
    }
    fn add(&self, a: Polynomial<F>, b: Polynomial<F>) -> Result<Polynomial<F>> {
        Ok(a.add_raw(&b))
    }
    fn mul(&self, a: Polynomial<F>, b: Polynomial<F>) -> Result<Polynomial<F>> {
        Ok(a.mul_raw(&b))
    }
    fn neg(&self, a: Polynomial<F>) -> Result<Polynomial<F>> {
        Ok(a.neg())
    }
}
