use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::groebner::{fresh_name, Ideal};
use crate::multipoly::{MonomialOrder, Polynomial};

/// Outcome of a subalgebra membership test.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership<F: Field> {
    /// `f = rep(g_1, …, g_k)`; `rep` lives in a ring of tag variables
    /// `u0, u1, …` standing for the generators in order.
    Yes(Polynomial<F>),
    No,
}

impl<F: Field> Membership<F> {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }
}

/// Decides whether `f` lies in the algebra generated by `gens` over the
/// coefficient field, using tag variables u_i with g_i − u_i and a block
/// order that eliminates the original variables.
pub fn subalgebra_member<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<Membership<F>> {
    let ring = f.ring();
    for g in gens {
        if g.ring().vars() != ring.vars() {
            return Err(Error::RingMismatch);
        }
    }
    let n = ring.nvars();
    let mut tags = Vec::with_capacity(gens.len());
    let mut vars: Vec<String> = ring.vars().to_vec();
    for _ in gens {
        let probe = ring.with_vars(&vars, MonomialOrder::deglex())?;
        let t = fresh_name(&probe, "u");
        vars.push(t.clone());
        tags.push(t);
    }
    let big = ring.with_vars(&vars, MonomialOrder::deglex_blocks(&[n, gens.len()]))?;
    let mut rel = Vec::with_capacity(gens.len());
    for (g, t) in gens.iter().zip(&tags) {
        rel.push(g.embed(&big)?.sub_raw(&Polynomial::var(&big, t)?));
    }
    let gb = Ideal::new(&big, rel)?.groebner();
    let nf = gb.reduce(&f.embed(&big)?)?;
    if nf.terms().iter().any(|(m, _)| m[..n].iter().any(|&e| e > 0)) {
        return Ok(Membership::No);
    }
    let tag_ring = ring.with_vars(&tags, MonomialOrder::deglex())?;
    Ok(Membership::Yes(nf.embed(&tag_ring)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::multipoly::Ring;

    #[test]
    fn membership_examples() {
        let r = Ring::<Rational>::new(&["a", "b"], MonomialOrder::deglex(), ()).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let ab = p("a*b");
        match subalgebra_member(&ab, std::slice::from_ref(&ab)).unwrap() {
            Membership::Yes(rep) => assert_eq!(rep.to_string(), "u0"),
            Membership::No => panic!("a*b generates itself"),
        }
        assert_eq!(subalgebra_member(&p("a"), std::slice::from_ref(&ab)).unwrap(), Membership::No);
        match subalgebra_member(&p("a^2*b^2 + a*b"), &[ab]).unwrap() {
            Membership::Yes(rep) => assert_eq!(rep.to_string(), "u0^2 + u0"),
            Membership::No => panic!("expected membership"),
        }
    }
}
