mod common;

use std::cmp::Ordering;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use resonaut::exactnum::{Cyclotomic, Rational};
use resonaut::groebner::Ideal;
use resonaut::invariants::{reversibility_ideal_ir, sibirsky_from_basis, spec_hilbert_basis};
use resonaut::multipoly::{mono_mul, MonomialOrder, Polynomial, Ring};
use resonaut::normalform::{grading_holds, is_resonant, normal_form, truncated_first_integral};
use resonaut::resonant::{
    check_cond_rev, involution, l_map, m_matrix, reversible_point, sigma, weight, ParameterPoint, SystemSpec,
};

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn cyclo(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-30i64..30, 1i64..8), (n - 1) as usize).prop_map(move |cs| {
        let coeffs: Vec<Rational> = cs.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect();
        Cyclotomic::from_coeffs(n, &coeffs).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(800))]

    // 800 cases spread over four primes gives about 200 per prime
    #[test]
    fn cyclotomic_field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap().try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
        if !a.is_zero() {
            prop_assert!(a.try_mul(&a.inv().unwrap()).unwrap().is_one());
        }
        let text = a.to_string();
        let back = Cyclotomic::parse(a.order(), &text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }
}

fn small_poly(ring: Arc<Ring<Cyclotomic>>) -> impl Strategy<Value = Polynomial<Cyclotomic>> {
    let n = *ring.desc();
    prop::collection::vec((prop::collection::vec(0u32..3, ring.nvars()), cyclo(n)), 0..5)
        .prop_map(move |terms| Polynomial::from_terms(&ring, terms))
}

fn ring3() -> Arc<Ring<Cyclotomic>> {
    Ring::new(&["a", "b", "c"], MonomialOrder::deglex(), 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polynomial_ring_axioms(f in small_poly(ring3()), g in small_poly(ring3()), h in small_poly(ring3())) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.sub(&f).unwrap().is_zero());
        let back = Polynomial::parse(&ring3(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn monomial_orders_are_admissible(
        a in prop::collection::vec(0u32..4, 5),
        b in prop::collection::vec(0u32..4, 5),
        c in prop::collection::vec(0u32..4, 5),
    ) {
        let orders = [
            MonomialOrder::lex(),
            MonomialOrder::deglex(),
            MonomialOrder::degrevlex(),
            MonomialOrder::deglex_blocks(&[2, 3]),
            MonomialOrder::Block(vec![(resonaut::multipoly::OrderKind::DegRevLex, 3), (resonaut::multipoly::OrderKind::Lex, 2)]),
        ];
        for o in &orders {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&mono_mul(&a, &c), &mono_mul(&b, &c)), ab);
            prop_assert_ne!(o.cmp(&mono_mul(&a, &c), &a), Ordering::Less);
            prop_assert_eq!(o.sort_key(&a).cmp(&o.sort_key(&b)), ab);
        }
    }
}

fn ring_q() -> Arc<Ring<Rational>> {
    Ring::new(&["x", "y", "z"], MonomialOrder::deglex(), ()).unwrap()
}

fn small_qpoly() -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..5), 1..4).prop_map(|terms| {
        let ring = ring_q();
        Polynomial::from_terms(&ring, terms.into_iter().map(|(m, c)| (m, Rational::from_int(c))).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn ideal_membership_agrees_with_construction(
        gens in prop::collection::vec(small_qpoly(), 1..3),
        mults in prop::collection::vec(small_qpoly(), 2),
        extra in small_qpoly(),
    ) {
        let ideal = Ideal::new(&ring_q(), gens.clone()).unwrap();
        let mut comb = Polynomial::zero(&ring_q());
        for (g, m) in gens.iter().zip(&mults) {
            comb = comb.add(&g.mul(m).unwrap()).unwrap();
        }
        prop_assert!(ideal.contains(&comb).unwrap());
        let gb = ideal.groebner();
        prop_assert!(gb.verify_criterion());
        // the remainder of any polynomial is in normal form and differs by an ideal element
        let r = gb.reduce(&extra).unwrap();
        prop_assert!(ideal.contains(&extra.sub(&r).unwrap()).unwrap());
        prop_assert_eq!(gb.reduce(&r).unwrap(), r);
    }

    #[test]
    fn saturation_is_idempotent(gens in prop::collection::vec(small_qpoly(), 1..3)) {
        let ideal = Ideal::new(&ring_q(), gens).unwrap();
        let f = Polynomial::parse(&ring_q(), "x*y").unwrap();
        let once = ideal.saturate(&f).unwrap();
        let twice = once.saturate(&f).unwrap();
        prop_assert!(once.equals(&twice).unwrap());
        for g in ideal.gens() {
            prop_assert!(once.contains(g).unwrap());
        }
    }
}

/// Specs with nℓ ≤ 8 and degree ≤ 3.
fn small_spec() -> impl Strategy<Value = SystemSpec> {
    (any::<u64>(), prop::sample::select(vec![(2u32, 1usize), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1)]))
        .prop_map(|(seed, (n, ell))| random_spec(&mut ChaCha8Rng::seed_from_u64(seed), n, ell, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hilbert_basis_matches_brute_force(spec in small_spec()) {
        let m = m_matrix(&spec);
        let h = spec_hilbert_basis(&spec).unwrap();
        let small: Vec<Vec<u32>> = h.vectors.iter().filter(|v| v.iter().sum::<u32>() <= 6).cloned().collect();
        prop_assert_eq!(small, brute_irreducibles(&m, 6));
        for v in &h.vectors {
            prop_assert!(in_kernel(&m, v));
            prop_assert!(is_irreducible(&m, v));
            // closed under the involution
            prop_assert!(h.contains(&involution(&spec, v).unwrap()));
        }
        let is = sibirsky_from_basis(&spec, &h).unwrap();
        prop_assert!(is.canonical_basis().unwrap().verify_criterion());
    }

    #[test]
    fn monoid_membership_three_ways(spec in small_spec()) {
        let m = m_matrix(&spec);
        for v in all_vectors(spec.nparams(), 4) {
            let kernel = in_kernel(&m, &v);
            let sig = sigma(&spec, &v).unwrap().is_zero();
            let l = l_map(&spec, &v).unwrap();
            prop_assert_eq!(kernel, sig);
            prop_assert_eq!(kernel, l.iter().all(|&x| x == l[0]));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn weight_and_involution_identities(spec in small_spec(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let np = spec.nparams();
        let mu: Vec<u32> = (0..np).map(|_| rng.gen_range(0..4)).collect();
        let th: Vec<u32> = (0..np).map(|_| rng.gen_range(0..4)).collect();
        let sum: Vec<u32> = mu.iter().zip(&th).map(|(a, b)| a + b).collect();
        let hat = involution(&spec, &mu).unwrap();
        let deg: i64 = mu.iter().map(|&x| x as i64).sum();
        prop_assert_eq!(
            weight(&spec, &hat).unwrap(),
            Cyclotomic::zeta_pow(spec.n(), deg).unwrap().try_mul(&weight(&spec, &mu).unwrap()).unwrap()
        );
        prop_assert_eq!(
            weight(&spec, &sum).unwrap(),
            weight(&spec, &mu).unwrap().try_mul(&weight(&spec, &th).unwrap()).unwrap()
        );
        // the involution has order n and permutes L cyclically
        let mut v = mu.clone();
        for _ in 0..spec.n() {
            v = involution(&spec, &v).unwrap();
        }
        prop_assert_eq!(&v, &mu);
        let mut l = l_map(&spec, &mu).unwrap();
        l.rotate_right(1);
        prop_assert_eq!(l_map(&spec, &hat).unwrap(), l);
    }
}

fn reversible(spec: &SystemSpec, seed: u64) -> (ParameterPoint, Vec<Cyclotomic>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n();
    let ys: Vec<Cyclotomic> = (0..spec.ell()).map(|_| random_cyclotomic(&mut rng, n, false)).collect();
    let ts: Vec<Cyclotomic> = (0..spec.nu()).map(|_| random_cyclotomic(&mut rng, n, true)).collect();
    reversible_point(spec, &ys, &ts, 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reversible_points_are_integrable(spec in small_spec(), seed in any::<u64>()) {
        let (point, alphas) = reversible(&spec, seed);
        prop_assert!(check_cond_rev(&spec, &point, &alphas, 1).unwrap());
        let order = spec.n() + 3;
        let fi = truncated_first_integral(&spec, &point, order).unwrap();
        prop_assert!(fi.is_solved(), "{:?}", fi);
        // the I_R generators vanish at the point
        let ir = reversibility_ideal_ir(&spec).unwrap();
        for g in ir.gens() {
            prop_assert!(g.eval(&point, spec.n()).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_is_resonant_and_graded(spec in small_spec()) {
        let order = spec.n() + 2;
        let nf = normal_form(&spec, order).unwrap();
        prop_assert!(grading_holds(&nf, &spec).unwrap());
        for c in &nf.coefficients {
            let mut alpha = vec![c.power; spec.nu()];
            alpha[c.coordinate] += 1;
            prop_assert!(is_resonant(spec.n(), c.coordinate, &alpha));
        }
    }
}

#[test]
fn generic_points_fail_reversibility() {
    let spec = cubic();
    let point: ParameterPoint = spec
        .parameter_vars()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, Cyclotomic::from_rational(3, Rational::from_int(i as i64 + 1)).unwrap()))
        .collect();
    let one = Cyclotomic::one(3).unwrap();
    assert!(!check_cond_rev(&spec, &point, &[one.clone(), one.clone(), one], 1).unwrap());
}
