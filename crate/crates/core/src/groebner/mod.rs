//! Gröbner bases: reduction, Buchberger's algorithm, elimination,
//! saturation, ideal equality, subalgebra membership and kernels of
//! monomial maps.

mod engine;
mod subalgebra;
mod toric;

pub use subalgebra::{subalgebra_member, Membership};
pub use toric::{toric_kernel, MonomialImage};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::multipoly::{MonomialOrder, OrderKind, Polynomial, Ring};

use engine::Terms;

/// Finite generating set of an ideal in a fixed ring.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
}

/// Reduced Gröbner basis: monic, interreduced, ascending by leading monomial
/// in the order of `ring`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    elements: Vec<Polynomial<F>>,
}

fn terms_of<F: Field>(ps: &[Polynomial<F>]) -> Vec<Terms<F>> {
    ps.iter().map(|p| p.terms().to_vec()).collect()
}

fn fresh_name<F: Field>(ring: &Ring<F>, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = format!("{}{}", stem, k);
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    /// Parses each generator with the polynomial text grammar.
    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring<F>>, gens: &[S]) -> Result<Self> {
        let ps = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, ps)
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn groebner(&self) -> GroebnerBasis<F> {
        let ord = self.ring.order();
        let basis = engine::buchberger(ord, terms_of(&self.gens));
        GroebnerBasis {
            ring: self.ring.clone(),
            elements: basis
                .into_iter()
                .map(|t| Polynomial::from_sorted(&self.ring, t))
                .collect(),
        }
    }

    pub fn groebner_with(&self, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
        Ok(self.with_ring(&self.ring.with_order(order)?)?.groebner())
    }

    /// The same generators re-expressed in a ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<Ring<F>>) -> Result<Self> {
        let gens = self.gens.iter().map(|g| g.embed(ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Reduced basis under deglex in the ring's variable order.
    pub fn canonical_basis(&self) -> Result<GroebnerBasis<F>> {
        if *self.ring.order() == MonomialOrder::deglex() {
            return Ok(self.groebner());
        }
        self.groebner_with(MonomialOrder::deglex())
    }

    /// I ∩ k[keep], computed with a deglex block order that puts `drop`
    /// first.
    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S]) -> Result<Self> {
        let drop: Vec<&str> = drop.iter().map(|s| s.as_ref()).collect();
        for d in &drop {
            if self.ring.var_index(d).is_none() {
                return Err(Error::UnknownVariable(d.to_string()));
            }
        }
        let keep: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| !drop.contains(&v.as_str()))
            .cloned()
            .collect();
        let mut elim_vars: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| drop.contains(&v.as_str()))
            .cloned()
            .collect();
        let nd = elim_vars.len();
        elim_vars.extend(keep.iter().cloned());
        let elim_ring = self
            .ring
            .with_vars(&elim_vars, MonomialOrder::deglex_blocks(&[nd, keep.len()]))?;
        let gb = self.with_ring(&elim_ring)?.groebner();
        let keep_order = match self.ring.order() {
            MonomialOrder::Simple(k) => MonomialOrder::Simple(*k),
            MonomialOrder::Block(_) => MonomialOrder::Simple(OrderKind::DegLex),
        };
        let keep_ring = self.ring.with_vars(&keep, keep_order)?;
        let gens = gb
            .elements
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m[..nd].iter().all(|&e| e == 0)))
            .map(|g| g.embed(&keep_ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&keep_ring, gens)
    }

    /// I : f^∞ via a fresh variable u with u·f − 1, eliminating u.
    pub fn saturate(&self, f: &Polynomial<F>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Precondition("cannot saturate by zero".into()));
        }
        let f = f.embed(&self.ring)?;
        let u = fresh_name(&self.ring, "u");
        let mut vars = vec![u.clone()];
        vars.extend(self.ring.vars().iter().cloned());
        let big = self.ring.with_vars(&vars, MonomialOrder::deglex())?;
        let mut gens = self.gens.iter().map(|g| g.embed(&big)).collect::<Result<Vec<_>>>()?;
        let uf = Polynomial::var(&big, &u)?.mul_raw(&f.embed(&big)?);
        gens.push(uf.sub_raw(&Polynomial::one(&big)));
        let sat = Ideal::new(&big, gens)?.eliminate(&[u])?;
        // back to the original ring (and order)
        sat.with_ring(&self.ring)
    }

    /// Ideal membership test.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        let gb = self.groebner();
        Ok(gb.reduce(f)?.is_zero())
    }

    /// Equality of ideals via canonical reduced bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if self.ring.vars() != other.ring.vars() || self.ring.desc() != other.ring.desc() {
            return Err(Error::RingMismatch);
        }
        let a = self.canonical_basis()?;
        let b = other.canonical_basis()?;
        Ok(a.elements == b.elements)
    }

    pub fn add_gens(&self, more: &[Polynomial<F>]) -> Result<Self> {
        let mut gens = self.gens.clone();
        for g in more {
            gens.push(g.embed(&self.ring)?);
        }
        Ideal::new(&self.ring, gens)
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        reduce(f, &self.elements, self.ring.order())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Re-checks that all S-polynomials reduce to zero.
    pub fn verify_criterion(&self) -> bool {
        engine::satisfies_criterion(self.ring.order(), &terms_of(&self.elements))
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.elements.clone(),
        }
    }
}

/// Remainder of `f` on division by `basis` under `order`.
pub fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: &MonomialOrder) -> Result<Polynomial<F>> {
    let ring = if f.ring().order() == order {
        f.ring().clone()
    } else {
        f.ring().with_order(order.clone())?
    };
    let f = f.embed(&ring)?;
    let basis = basis.iter().map(|g| g.embed(&ring)).collect::<Result<Vec<_>>>()?;
    let terms = terms_of(&basis);
    let reducers: Vec<(&Terms<F>, u64)> = terms
        .iter()
        .filter(|t| !t.is_empty())
        .map(|t| (t, engine::divmask(&t[0].0)))
        .collect();
    let r = engine::reduce_terms(order, f.terms().to_vec(), &reducers);
    Ok(Polynomial::from_sorted(&ring, r))
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    ideal.groebner_with(order)
}

/// True when every generator set satisfies Buchberger's criterion as is.
pub fn is_groebner_basis<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let ring = first.ring().with_order(order.clone())?;
    let ps = gens.iter().map(|g| g.embed(&ring)).collect::<Result<Vec<_>>>()?;
    Ok(engine::satisfies_criterion(order, &terms_of(&ps)))
}

pub fn eliminate<F: Field, S: AsRef<str>>(ideal: &Ideal<F>, drop: &[S]) -> Result<Ideal<F>> {
    ideal.eliminate(drop)
}

pub fn saturate<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    ideal.saturate(f)
}

pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    a.equals(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn ring(vars: &[&str], ord: MonomialOrder) -> Arc<Ring<Rational>> {
        Ring::new(vars, ord, ()).unwrap()
    }

    fn p(r: &Arc<Ring<Rational>>, s: &str) -> Polynomial<Rational> {
        Polynomial::parse(r, s).unwrap()
    }

    fn texts(gb: &GroebnerBasis<Rational>) -> Vec<String> {
        gb.elements().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn reduce_examples() {
        let r = ring(&["a"], MonomialOrder::deglex());
        assert!(reduce(&p(&r, "a^2"), &[p(&r, "a")], &MonomialOrder::deglex()).unwrap().is_zero());
        let r2 = ring(&["a", "b"], MonomialOrder::lex());
        let f = reduce(&p(&r2, "a*b + b"), &[p(&r2, "a - 1")], &MonomialOrder::lex()).unwrap();
        assert_eq!(f.to_string(), "2*b");
        let g = reduce(&p(&r2, "a - b"), &[], &MonomialOrder::lex()).unwrap();
        assert_eq!(g.to_string(), "a - b");
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["a", "b", "c"], MonomialOrder::lex());
        let gb = Ideal::parse(&r, &["a - b", "b - c"]).unwrap().groebner();
        assert_eq!(texts(&gb), vec!["b - c", "a - c"]);
        let gb = Ideal::parse(&r, &["a^2", "a^3"]).unwrap().groebner();
        assert_eq!(texts(&gb), vec!["a^2"]);
        let r = ring(&["a11", "b11"], MonomialOrder::deglex());
        let gb = Ideal::parse(&r, &["a11 - b11"]).unwrap().groebner();
        assert_eq!(texts(&gb), vec!["a11 - b11"]);
    }

    #[test]
    fn cyclic3_basis_is_verified() {
        let r = ring(&["x", "y", "z"], MonomialOrder::degrevlex());
        let i = Ideal::parse(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]).unwrap();
        let gb = i.groebner();
        assert!(gb.verify_criterion());
        assert_eq!(texts(&gb), vec!["x + y + z", "y^2 + y*z + z^2", "z^3 - 1"]);
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["t", "a", "b"], MonomialOrder::deglex());
        let e = Ideal::parse(&r, &["a - t", "b - t"]).unwrap().eliminate(&["t"]).unwrap();
        let texts: Vec<String> = e.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["a - b"]);
        let r = ring(&["t", "s", "a", "b", "y"], MonomialOrder::deglex());
        let e = Ideal::parse(&r, &["a - t*y", "b - y", "t*s - 1"])
            .unwrap();
        // b − y involves neither t nor s, so it survives
        let e2 = e.eliminate(&["t", "s"]).unwrap();
        let texts: Vec<String> = e2.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["b - y"]);
        // with y eliminated too, a = t*y and b = y are independent
        assert!(e.eliminate(&["t", "s", "y"]).unwrap().is_zero());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"], MonomialOrder::deglex());
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let s = i.saturate(&p(&r, "x")).unwrap();
        assert!(s.equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        let j = Ideal::parse(&r, &["x"]).unwrap();
        assert!(j.saturate(&p(&r, "y")).unwrap().equals(&j).unwrap());
        assert!(i.saturate(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn equality_examples() {
        let r = ring(&["a", "b"], MonomialOrder::deglex());
        let i = Ideal::parse(&r, &["a - b"]).unwrap();
        assert!(i.equals(&Ideal::parse(&r, &["2*a - 2*b"]).unwrap()).unwrap());
        let a = Ideal::parse(&r, &["a"]).unwrap();
        assert!(!a.equals(&Ideal::parse(&r, &["a^2"]).unwrap()).unwrap());
    }
}
