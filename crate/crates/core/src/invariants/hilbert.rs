use serde::Serialize;

use crate::error::Result;
use crate::exactnum::Rational;
use crate::groebner::Ideal;
use crate::intmat::IntMatrix;
use crate::multipoly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Minimal generating set of {ν ∈ ℕ₀^m : M·ν = 0}, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    pub vectors: Vec<Monomial>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.vectors.binary_search_by(|x| x.as_slice().cmp(v)).is_ok()
    }
}

/// [[M, 0], [E, E]].
pub fn lawrence_lift(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut out = IntMatrix::zeros(r + c, 2 * c);
    for i in 0..r {
        for j in 0..c {
            out.set(i, j, m.get(i, j));
        }
    }
    for j in 0..c {
        out.set(r + j, j, 1);
        out.set(r + j, c + j, 1);
    }
    out
}

/// Hilbert basis of the monoid ker M ∩ ℕ₀^m.
///
/// Takes the reduced Gröbner basis of ⟨x_j − z_j·t^{M_j}⟩ under the block
/// order {t, s} ≻ {x} ≻ {z}; the Hilbert basis is the set of ν for which
/// x^ν − z^ν occurs in it. Negative powers go through a single partner s
/// with s·t_1⋯t_d − 1: column j becomes t^{M_j + c_j}·s^{c_j}, c_j the
/// largest negative entry in magnitude.
pub fn hilbert_basis(m: &IntMatrix) -> Result<HilbertBasis> {
    let (d, c) = (m.rows(), m.cols());
    let shifts: Vec<i64> = (0..c).map(|j| (0..d).map(|i| -m.get(i, j)).max().unwrap_or(0).max(0)).collect();
    let needs_partner = shifts.iter().any(|&x| x > 0);
    let mut vars: Vec<String> = (0..d).map(|i| format!("t{}", i)).collect();
    if needs_partner {
        vars.push("s".into());
    }
    let na = vars.len();
    vars.extend((0..c).map(|j| format!("x{}", j)));
    vars.extend((0..c).map(|j| format!("z{}", j)));
    let ring = Ring::<Rational>::new(&vars, MonomialOrder::deglex_blocks(&[na, c, c]), ())?;

    let mut gens = Vec::new();
    for j in 0..c {
        let mut mono = vec![0u32; ring.nvars()];
        mono[na + c + j] = 1;
        for i in 0..d {
            mono[i] = (m.get(i, j) + shifts[j]) as u32;
        }
        if needs_partner {
            mono[d] = shifts[j] as u32;
        }
        let x = Polynomial::var_at(&ring, na + j);
        gens.push(x.sub_raw(&Polynomial::monomial(&ring, mono, Rational::one())));
    }
    if needs_partner {
        let mono = (0..ring.nvars()).map(|i| (i <= d) as u32).collect();
        gens.push(Polynomial::monomial(&ring, mono, Rational::one()).sub_raw(&Polynomial::one(&ring)));
    }
    let gb = Ideal::new(&ring, gens)?.groebner();

    let mut vectors = Vec::new();
    for g in gb.elements() {
        if g.len() != 2 {
            continue;
        }
        let (m1, c1) = &g.terms()[0];
        let (m2, c2) = &g.terms()[1];
        if !c1.is_one() || *c2 != Rational::from_int(-1) {
            continue;
        }
        if m1[..na].iter().chain(&m2[..na]).any(|&e| e > 0) {
            continue;
        }
        let (x1, z1) = (&m1[na..na + c], &m1[na + c..]);
        let (x2, z2) = (&m2[na..na + c], &m2[na + c..]);
        if z1.iter().all(|&e| e == 0) && x2.iter().all(|&e| e == 0) && x1 == z2 {
            vectors.push(x1.to_vec());
        }
    }
    vectors.sort();
    vectors.dedup();
    Ok(HilbertBasis { vectors })
}
