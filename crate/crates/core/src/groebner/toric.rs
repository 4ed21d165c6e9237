use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::groebner::{fresh_name, Ideal};
use crate::multipoly::{MonomialOrder, Polynomial, Ring};

/// Image `unit · ∏ t_j^{exps_j}` of one source variable under a monomial
/// map into a Laurent ring.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialImage<F: Field> {
    pub unit: F,
    pub exps: Vec<i64>,
}

/// Kernel of the map sending the i-th variable of `source` to `images[i]`,
/// a unit times a Laurent monomial in the auxiliary variables `aux`.
///
/// Each auxiliary variable that appears with a negative exponent gets an
/// inverse partner s_j with t_j·s_j − 1; auxiliaries are then eliminated.
pub fn toric_kernel<F: Field, S: AsRef<str>>(
    source: &Arc<Ring<F>>,
    aux: &[S],
    images: &[MonomialImage<F>],
) -> Result<Ideal<F>> {
    if images.len() != source.nvars() {
        return Err(Error::LengthMismatch {
            expected: source.nvars(),
            got: images.len(),
        });
    }
    let aux: Vec<String> = aux.iter().map(|s| s.as_ref().to_string()).collect();
    for a in &aux {
        if source.var_index(a).is_some() {
            return Err(Error::InvalidSpec(format!("auxiliary `{}` clashes with a source variable", a)));
        }
    }
    for img in images {
        if img.unit.is_zero() {
            return Err(Error::Structural("monomial image with zero unit".into()));
        }
        if img.exps.len() != aux.len() {
            return Err(Error::LengthMismatch {
                expected: aux.len(),
                got: img.exps.len(),
            });
        }
    }
    let d = aux.len();
    let needs_partner: Vec<bool> = (0..d).map(|j| images.iter().any(|im| im.exps[j] < 0)).collect();

    let mut vars = aux.clone();
    let mut partner = vec![None; d];
    for j in 0..d {
        if needs_partner[j] {
            let probe = source.with_vars(
                &vars.iter().chain(source.vars()).cloned().collect::<Vec<_>>(),
                MonomialOrder::deglex(),
            )?;
            let s = fresh_name(&probe, &format!("{}_inv", aux[j]));
            partner[j] = Some(vars.len());
            vars.push(s);
        }
    }
    let na = vars.len();
    vars.extend(source.vars().iter().cloned());
    let big = source.with_vars(&vars, MonomialOrder::deglex_blocks(&[na, source.nvars()]))?;

    let mut gens = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut m = vec![0u32; big.nvars()];
        for j in 0..d {
            let e = img.exps[j];
            if e >= 0 {
                m[j] = e as u32;
            } else {
                m[partner[j].expect("partner exists for negative exponents")] = (-e) as u32;
            }
        }
        let x = Polynomial::var_at(&big, na + i);
        gens.push(x.sub_raw(&Polynomial::monomial(&big, m, img.unit.clone())));
    }
    for j in 0..d {
        if let Some(pj) = partner[j] {
            let mut m = vec![0u32; big.nvars()];
            m[j] = 1;
            m[pj] = 1;
            gens.push(Polynomial::monomial(&big, m, big.one()).sub_raw(&Polynomial::one(&big)));
        }
    }
    let elim: Vec<String> = vars[..na].to_vec();
    Ideal::new(&big, gens)?.eliminate(&elim)?.with_ring(source)
}
