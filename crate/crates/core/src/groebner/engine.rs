//! Buchberger's algorithm on raw term lists.
//!
//! Term lists are sorted in descending order of the supplied monomial order
//! and never contain zero coefficients. Pairs are pruned with the
//! Gebauer–Möller criteria and selected by the sugar strategy: smallest
//! sugar degree first, then the smaller lcm, then the pair's indices. Sugar
//! keeps block and lex orders from chasing high-degree pairs early.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::exactnum::Field;
use crate::multipoly::{mono_degree, mono_div, mono_divides, mono_lcm, mono_mul, Monomial, MonomialOrder};

pub(crate) type Terms<F> = Vec<(Monomial, F)>;

pub(crate) fn divmask(m: &[u32]) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

struct Elem<F> {
    terms: Terms<F>,
    mask: u64,
    sugar: u64,
    active: bool,
}

impl<F> Elem<F> {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

/// Field order gives the selection order: sugar, then the lcm's order key,
/// then the indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u64,
    key: Vec<i64>,
    j: usize,
    i: usize,
    lcm: Monomial,
    mask: u64,
}

/// `a − c·[m]·b`, dropping cancelled terms.
pub(crate) fn sub_mul<F: Field>(ord: &MonomialOrder, a: &[(Monomial, F)], c: &F, m: &[u32], b: &[(Monomial, F)]) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut shifted: Option<Monomial> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && shifted.is_none() {
            shifted = Some(mono_mul(&b[j].0, m));
        }
        let o = match (i < a.len(), &shifted) {
            (true, Some(s)) => ord.cmp(&a[i].0, s),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match o {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let s = shifted.take().unwrap();
                out.push((s, b[j].1.mul(c).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let s = shifted.take().unwrap();
                let v = a[i].1.sub(&b[j].1.mul(c));
                if !v.is_zero() {
                    out.push((s, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_monic<F: Field>(mut t: Terms<F>) -> Terms<F> {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for term in t.iter_mut() {
                term.1 = term.1.mul(&inv);
            }
        }
    }
    t
}

/// Full reduction of `f` by reducers given as (terms, divmask). Reducers
/// need not be monic.
pub(crate) fn reduce_terms<F: Field>(ord: &MonomialOrder, f: Terms<F>, reducers: &[(&Terms<F>, u64)]) -> Terms<F> {
    let mut cur = f;
    let mut pos = 0;
    let mut out: Terms<F> = Vec::new();
    while pos < cur.len() {
        let m = &cur[pos].0;
        let mm = divmask(m);
        let found = reducers
            .iter()
            .find(|(g, mask)| mask & !mm == 0 && mono_divides(&g[0].0, m));
        match found {
            Some((g, _)) => {
                let q = mono_div(m, &g[0].0);
                let lc = &g[0].1;
                let c = if lc.is_one() {
                    cur[pos].1.clone()
                } else {
                    cur[pos].1.mul(&lc.inv().expect("nonzero leading coefficient"))
                };
                cur = sub_mul(ord, &cur[pos + 1..], &c, &q, &g[1..]);
                pos = 0;
            }
            None => {
                out.push(cur[pos].clone());
                pos += 1;
            }
        }
    }
    out
}

struct Engine<'a, F: Field> {
    ord: &'a MonomialOrder,
    elems: Vec<Elem<F>>,
    pairs: BTreeSet<Pair>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn active_reducers(&self) -> Vec<(&Terms<F>, u64)> {
        self.elems
            .iter()
            .filter(|e| e.active)
            .map(|e| (&e.terms, e.mask))
            .collect()
    }

    fn reduce(&self, f: Terms<F>) -> Terms<F> {
        let reducers = self.active_reducers();
        reduce_terms(self.ord, f, &reducers)
    }

    fn spoly(&self, p: &Pair) -> Terms<F> {
        let (a, b) = (&self.elems[p.i].terms, &self.elems[p.j].terms);
        let ma = mono_div(&p.lcm, &a[0].0);
        let mb = mono_div(&p.lcm, &b[0].0);
        // elements are monic, so the leading coefficient is 1
        let one = a[0].1.clone();
        let a_shift: Terms<F> = a[1..].iter().map(|(m, c)| (mono_mul(m, &ma), c.clone())).collect();
        sub_mul(self.ord, &a_shift, &one, &mb, &b[1..])
    }

    /// Gebauer–Möller update after inserting element `h`.
    fn insert(&mut self, terms: Terms<F>, sugar: u64) {
        let h = self.elems.len();
        let hm = terms[0].0.clone();
        let hdeg = mono_degree(&hm);
        self.elems.push(Elem {
            mask: divmask(&hm),
            terms,
            sugar,
            active: true,
        });

        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for (g, e) in self.elems[..h].iter().enumerate() {
            if !e.active {
                continue;
            }
            let lcm = mono_lcm(e.lm(), &hm);
            let disjoint = e.lm().iter().zip(&hm).all(|(x, y)| *x == 0 || *y == 0);
            let d = mono_degree(&lcm);
            let sugar = (e.sugar + d - mono_degree(e.lm())).max(sugar + d - hdeg);
            let mask = divmask(&lcm);
            cands.push((Pair { sugar, key: Vec::new(), j: h, i: g, lcm, mask }, disjoint));
        }
        // criteria M and F: walking by lcm degree, a candidate whose lcm is a
        // multiple of an accepted one's is dropped
        cands.sort_by_cached_key(|(p, _)| mono_degree(&p.lcm));
        let divides = |q: &Pair, p: &Pair| q.mask & !p.mask == 0 && mono_divides(&q.lcm, &p.lcm);
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (p, disjoint) in cands {
            if !kept.iter().any(|(q, _)| divides(q, &p)) {
                kept.push((p, disjoint));
            }
        }

        let elems = &self.elems;
        let hmask = divmask(&hm);
        self.pairs.retain(|p| {
            if hmask & !p.mask != 0 || !mono_divides(&hm, &p.lcm) {
                return true;
            }
            let l1 = mono_lcm(elems[p.i].lm(), &hm);
            let l2 = mono_lcm(elems[p.j].lm(), &hm);
            l1 == p.lcm || l2 == p.lcm
        });
        let ord = self.ord;
        self.pairs.extend(kept.into_iter().filter(|(_, d)| !d).map(|(mut p, _)| {
            p.key = ord.sort_key(&p.lcm);
            p
        }));

        for g in 0..h {
            if self.elems[g].active && mono_divides(&hm, self.elems[g].lm()) {
                self.elems[g].active = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        self.pairs.pop_first()
    }
}

/// Reduced Gröbner basis of the given generators, sorted ascending by
/// leading monomial.
pub(crate) fn buchberger<F: Field>(ord: &MonomialOrder, gens: Vec<Terms<F>>) -> Vec<Terms<F>> {
    let mut gens: Vec<Terms<F>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| {
        ord.cmp(&a[0].0, &b[0].0)
            .then_with(|| a.len().cmp(&b.len()))
    });
    let mut eng = Engine {
        ord,
        elems: Vec::new(),
        pairs: BTreeSet::new(),
    };
    for g in gens {
        let sugar = g.iter().map(|(m, _)| mono_degree(m)).max().unwrap_or(0);
        let h = eng.reduce(g);
        if !h.is_empty() {
            eng.insert(make_monic(h), sugar);
        }
    }
    while let Some(p) = eng.pop_pair() {
        let s = eng.spoly(&p);
        let h = eng.reduce(s);
        if !h.is_empty() {
            eng.insert(make_monic(h), p.sugar);
        }
    }
    interreduce(ord, eng.elems.into_iter().filter(|e| e.active).map(|e| e.terms).collect())
}

/// Turns a Gröbner basis with pairwise non-dividing leading monomials into
/// the reduced one.
pub(crate) fn interreduce<F: Field>(ord: &MonomialOrder, basis: Vec<Terms<F>>) -> Vec<Terms<F>> {
    let masks: Vec<u64> = basis.iter().map(|g| divmask(&g[0].0)).collect();
    let mut out: Vec<Terms<F>> = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<(&Terms<F>, u64)> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(i, t)| (t, masks[i]))
            .collect();
        let mut r = vec![g[0].clone()];
        r.extend(reduce_terms(ord, g[1..].to_vec(), &others));
        out.push(make_monic(r));
    }
    out.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    out
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub(crate) fn satisfies_criterion<F: Field>(ord: &MonomialOrder, basis: &[Terms<F>]) -> bool {
    let basis: Vec<Terms<F>> = basis.iter().filter(|g| !g.is_empty()).cloned().map(make_monic).collect();
    let reducers: Vec<(&Terms<F>, u64)> = basis.iter().map(|g| (g, divmask(&g[0].0))).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis[i], &basis[j]);
            let lcm = mono_lcm(&a[0].0, &b[0].0);
            if a[0].0.iter().zip(&b[0].0).all(|(x, y)| *x == 0 || *y == 0) {
                continue;
            }
            let ma = mono_div(&lcm, &a[0].0);
            let mb = mono_div(&lcm, &b[0].0);
            let a_shift: Terms<F> = a[1..].iter().map(|(m, c)| (mono_mul(m, &ma), c.clone())).collect();
            let one = a[0].1.clone();
            let s = sub_mul(ord, &a_shift, &one, &mb, &b[1..]);
            if !reduce_terms(ord, s, &reducers).is_empty() {
                return false;
            }
        }
    }
    true
}
