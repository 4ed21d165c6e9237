//! Acceptance run: one PASS/FAIL line per criterion, each against its time
//! limit. Exits non-zero when any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use resonaut::exactnum::Cyclotomic;
use resonaut::groebner::{is_groebner_basis, subalgebra_member, Ideal};
use resonaut::invariants::{
    check_saturation_theorems, equivariant_ideal, sibirsky_from_basis, sibirsky_ideal, spec_hilbert_basis, two_dim_crosschecks,
    zeta_reversible_ideal, EquivariantRoute, ZetaRoute,
};
use resonaut::multipoly::Polynomial;
use resonaut::normalform::{normal_form, truncated_first_integral};
use resonaut::resonant::{
    check_cond_rev, involution, l_map, m_matrix, reversible_point, sigma, weight, SystemSpec,
};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cubic_spec_path() -> String {
    format!("{}/data/cubic.json", env!("CARGO_MANIFEST_DIR"))
}

fn c1_matrix() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_resonaut"))
        .args(["matrices", &cubic_spec_path()])
        .output()
        .map_err(err)?;
    ensure(out.status.success(), "matrices exited with failure")?;
    let text = String::from_utf8(out.stdout).map_err(err)?;
    let want = format!(
        "M = [{}]",
        CUBIC_M
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect::<Vec<_>>()
            .join(", ")
    );
    ensure(text.lines().any(|l| l == want), format!("no line `{}` in output", want))?;
    ensure(m_matrix(&cubic()).to_rows() == CUBIC_M.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), "library matrix differs")
}

fn c2_hilbert() -> Check {
    let h = spec_hilbert_basis(&cubic()).map_err(err)?;
    let mut want: Vec<Vec<u32>> = CUBIC_H.iter().map(|v| v.to_vec()).collect();
    want.sort();
    ensure(h.vectors == want, format!("got {} vectors: {:?}", h.len(), h.vectors))
}

fn c3_sibirsky() -> Check {
    let is = sibirsky_ideal(&cubic()).map_err(err)?;
    let printed = Ideal::parse(is.ring(), &CUBIC_IS).map_err(err)?;
    ensure(is.equals(&printed).map_err(err)?, "Sibirsky ideal differs from the printed generators")
}

fn c4_equivariant() -> Check {
    let spec = cubic();
    let printed = Ideal::parse(&spec.rational_ring(), &CUBIC_IE).map_err(err)?;
    let toric = equivariant_ideal(&spec, EquivariantRoute::Toric).map_err(err)?;
    let elim = equivariant_ideal(&spec, EquivariantRoute::Elimination).map_err(err)?;
    ensure(toric.equals(&printed).map_err(err)?, "toric route differs from printed ideal")?;
    ensure(elim.equals(&printed).map_err(err)?, "elimination route differs from printed ideal")?;
    ensure(toric.equals(&elim).map_err(err)?, "routes differ")
}

fn c5_zeta() -> Check {
    let spec = cubic();
    let printed = Ideal::parse(&spec.cyclotomic_ring(), &CUBIC_IZETA).map_err(err)?;
    for route in [ZetaRoute::ZetaToric, ZetaRoute::Elimination] {
        let iz = zeta_reversible_ideal(&spec, route).map_err(err)?;
        ensure(iz.equals(&printed).map_err(err)?, format!("{:?} route differs from printed ideal", route))?;
    }
    Ok(())
}

fn c6_saturation() -> Check {
    let r = check_saturation_theorems(&cubic()).map_err(err)?;
    ensure(r.sibirsky_vs_equivariant.equal, "I_S : a^inf != I_E")?;
    ensure(r.reversibility_vs_zeta.equal, "I_R : a^inf != I_zeta")
}

fn c7_normal_form() -> Check {
    let spec = cubic();
    let nf = normal_form(&spec, 4).map_err(err)?;
    let ring = spec.cyclotomic_ring();
    let gens: Vec<Polynomial<Cyclotomic>> = CUBIC_H
        .iter()
        .map(|v| Polynomial::monomial(&ring, v.to_vec(), Cyclotomic::one(3).unwrap()))
        .collect();
    for (k, text) in CUBIC_NF4.iter().enumerate() {
        let want = Polynomial::parse(&ring, text).map_err(err)?;
        let got = nf.get(k, 1).ok_or("missing coefficient")?;
        ensure(got == &want, format!("coordinate {}: got {}, printed {}", k + 1, got, want))?;
        ensure(
            subalgebra_member(got, &gens).map_err(err)?.is_member(),
            format!("coordinate {} outside the invariant subalgebra", k + 1),
        )?;
    }
    Ok(())
}

fn c8_planar() -> Check {
    let suite = planar_suite();
    for spec in &suite {
        let r = two_dim_crosschecks(spec).map_err(err)?;
        ensure(r.sibirsky_vs_kernel.equal, format!("{}: I_S != kernel ideal", spec.to_json()))?;
        ensure(r.sibirsky_vs_lattice.equal, format!("{}: I_S != lattice ideal", spec.to_json()))?;
        ensure(r.disjoint_supports, format!("{}: overlapping supports", spec.to_json()))?;
    }
    println!("    {} planar specs checked", suite.len());
    Ok(())
}

fn property_specs(rng: &mut ChaCha8Rng) -> Vec<SystemSpec> {
    let mut specs = vec![cubic()];
    for (n, ell, count) in [(2u32, 1usize, 3), (2, 2, 3), (2, 3, 2), (2, 4, 2), (3, 1, 3), (3, 2, 3), (5, 1, 2), (7, 1, 1)] {
        for _ in 0..count {
            specs.push(random_spec(rng, n, ell, 3));
        }
    }
    specs
}

fn c9_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let specs = property_specs(&mut rng);
    let mut generator_sets_groebner = 0;
    for spec in &specs {
        // Hilbert basis against the brute-force irreducibles
        let m = m_matrix(spec);
        let h = spec_hilbert_basis(spec).map_err(err)?;
        let small: Vec<Vec<u32>> = h.vectors.iter().filter(|v| v.iter().sum::<u32>() <= 6).cloned().collect();
        ensure(
            small == brute_irreducibles(&m, 6),
            format!("{}: Hilbert basis differs from oracle up to degree 6", spec.to_json()),
        )?;
        for v in &h.vectors {
            ensure(in_kernel(&m, v) && is_irreducible(&m, v), format!("{}: {:?} not irreducible", spec.to_json(), v))?;
            ensure(sigma(spec, v).map_err(err)?.is_zero(), "Sigma nonzero on a Hilbert element")?;
            let l = l_map(spec, v).map_err(err)?;
            ensure(l.iter().all(|&x| x == l[0]), "L not constant on a Hilbert element")?;
        }
        // Buchberger criterion on the emitted Sibirsky basis
        let is = sibirsky_from_basis(spec, &h).map_err(err)?;
        let gb = is.canonical_basis().map_err(err)?;
        ensure(gb.verify_criterion(), format!("{}: Sibirsky basis fails the criterion", spec.to_json()))?;
        if is_groebner_basis(is.gens(), &resonaut::multipoly::MonomialOrder::deglex()).map_err(err)? {
            generator_sets_groebner += 1;
        }
    }
    println!(
        "    {} specs; Hilbert oracle and criterion ok; generator set itself a deglex Groebner basis for {} of them",
        specs.len(),
        generator_sets_groebner
    );

    // weight identities and Sigma on random vectors
    let mut cases = 0;
    while cases < 100 {
        let spec = &specs[cases % specs.len()];
        let mu: Vec<u32> = (0..spec.nparams()).map(|_| rand::Rng::gen_range(&mut rng, 0..4)).collect();
        let th: Vec<u32> = (0..spec.nparams()).map(|_| rand::Rng::gen_range(&mut rng, 0..4)).collect();
        let sum: Vec<u32> = mu.iter().zip(&th).map(|(a, b)| a + b).collect();
        let w = |v: &[u32]| weight(spec, v).map_err(err);
        let hat = involution(spec, &mu).map_err(err)?;
        let deg: i64 = mu.iter().map(|&x| x as i64).sum();
        let lhs = w(&hat)?;
        let rhs = Cyclotomic::zeta_pow(spec.n(), deg).map_err(err)?.try_mul(&w(&mu)?).map_err(err)?;
        ensure(lhs == rhs, "w(nu-hat) != zeta^|nu| w(nu)")?;
        ensure(w(&sum)? == w(&mu)?.try_mul(&w(&th)?).map_err(err)?, "weight not multiplicative")?;
        cases += 1;
    }

    // reversible points: the reversibility condition and first integrals
    for spec in specs.iter().cycle().take(20) {
        let n = spec.n();
        let ys: Vec<Cyclotomic> = (0..spec.ell()).map(|_| random_cyclotomic(&mut rng, n, false)).collect();
        let ts: Vec<Cyclotomic> = (0..spec.nu()).map(|_| random_cyclotomic(&mut rng, n, true)).collect();
        let (point, alphas) = reversible_point(spec, &ys, &ts, 1).map_err(err)?;
        ensure(check_cond_rev(spec, &point, &alphas, 1).map_err(err)?, "cond_rev fails at a reversible point")?;
        let order = n + 3;
        let fi = truncated_first_integral(spec, &point, order).map_err(err)?;
        ensure(fi.is_solved(), format!("{}: first integral obstructed: {:?}", spec.to_json(), fi))?;
    }
    Ok(())
}

type Criterion = (u32, &'static str, u64, fn() -> Check);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "cubic matrix M", 1, c1_matrix),
        (2, "cubic Hilbert basis", 5, c2_hilbert),
        (3, "cubic Sibirsky ideal", 10, c3_sibirsky),
        (4, "cubic equivariant ideal, both routes", 10, c4_equivariant),
        (5, "cubic zeta-reversible ideal, both routes", 30, c5_zeta),
        (6, "saturation identities on the cubic", 30, c6_saturation),
        (7, "cubic normal form to order 4", 30, c7_normal_form),
        (8, "planar identities", 60, c8_planar),
        (9, "property suites", 300, c9_properties),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let res = check();
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match (&res, took <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (time limit exceeded)".to_string(),
            (Err(e), _) => format!("FAIL ({})", e),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{:.2} s / limit {} s] {}",
            id,
            verdict,
            took.as_secs_f64(),
            limit.as_secs(),
            name
        );
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
}
