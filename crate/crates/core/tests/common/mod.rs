//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use resonaut::exactnum::{Cyclotomic, Rational};
use resonaut::intmat::IntMatrix;
use resonaut::resonant::SystemSpec;

pub fn cubic() -> SystemSpec {
    SystemSpec::new(3, vec![vec![1, 0, 0], vec![0, 0, 1], vec![1, 0, 1]]).unwrap()
}

pub const CUBIC_M: [[i64; 9]; 2] = [[1, -1, 0, 0, 1, -1, 1, 0, -1], [0, 1, -1, -1, 0, 1, -1, 1, 0]];

pub const CUBIC_H: [[u32; 9]; 15] = [
    [0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 1, 0, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
];

pub const CUBIC_IS: [&str; 12] = [
    "a101*c010 - a001*b110",
    "b100*c011 - c010*a101",
    "a001*b110 - b100*c011",
    "b110*c001 - a100*c011",
    "b100*c001*c010 - a100*a001*c010",
    "a101*b010 - c001*b110",
    "a001*b010*b100 - c001*b100*c010",
    "b010*b100*c001 - a100*c001*c010",
    "a100*c011 - b010*a101",
    "a001*a100*c010 - b010*a001*b100",
    "a100*c001*c010 - a100*b010*a001",
    "a001*a100*b010 - b010*c001*b100",
];

pub const CUBIC_IE: [&str; 7] = [
    "-a101*c010 + b100*c011",
    "a001*b110 - a101*c010",
    "a101*b010 - b110*c001",
    "a001*b010 - c001*c010",
    "-b110*c001 + a100*c011",
    "-b010*b100 + a100*c010",
    "a001*a100 - b100*c001",
];

pub const CUBIC_IZETA: [&str; 7] = [
    "c001*b110 - zeta*a100*c011",
    "a001*b110 - zeta*b100*c011",
    "c010*a101 + (zeta + 1)*b100*c011",
    "b010*a101 + (zeta + 1)*a100*c011",
    "b010*b100 - a100*c010",
    "a001*b010 - c001*c010",
    "a001*a100 - b100*c001",
];

/// Printed order-4 coefficients with (−1)^{1/3} written as 1 + ζ and
/// (−1)^{2/3} as ζ.
pub const CUBIC_NF4: [&str; 3] = [
    "(1 + zeta)*a001*a100*c010 - (1 + zeta)*a101*c010 - zeta*a001*b100*c010",
    "-a001*b010*b100 + zeta*a001*b110 + (1 + zeta)*a001*b100*c010",
    "-zeta*b100*c001*c010 - a001*b100*c010 + b100*c011",
];

/// Every exponent vector (p1, p2) with p1 ≥ −1, p2 ≥ 0 and 1 ≤ p1 + p2 ≤ max_deg.
pub fn planar_exponents(max_deg: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for d in 1..=max_deg {
        for p1 in -1..=d {
            out.push(vec![p1, d - p1]);
        }
    }
    out
}

/// Fixed suite of n = 2 specs: all single exponents and all pairs of
/// degree ≤ 3.
pub fn planar_suite() -> Vec<SystemSpec> {
    let ps = planar_exponents(3);
    let mut out = Vec::new();
    for (i, p) in ps.iter().enumerate() {
        out.push(SystemSpec::new(2, vec![p.clone()]).unwrap());
        for q in &ps[i + 1..] {
            out.push(SystemSpec::new(2, vec![p.clone(), q.clone()]).unwrap());
        }
    }
    out
}

/// All vectors of ℕ₀^len with entry sum ≤ max.
pub fn all_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max, &mut vec![0; len], &mut out);
    out
}

pub fn in_kernel(m: &IntMatrix, v: &[u32]) -> bool {
    let v: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    m.mul_vec(&v).unwrap().iter().all(|&x| x == 0)
}

/// Nonzero kernel elements of degree ≤ max that are not a sum of two
/// nonzero kernel elements.
pub fn brute_irreducibles(m: &IntMatrix, max: u32) -> Vec<Vec<u32>> {
    let kernel: Vec<Vec<u32>> = all_vectors(m.cols(), max)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x > 0) && in_kernel(m, v))
        .collect();
    let mut out: Vec<Vec<u32>> = kernel
        .iter()
        .filter(|v| {
            !kernel
                .iter()
                .any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// True when no nonzero proper kernel vector lies below `v`.
pub fn is_irreducible(m: &IntMatrix, v: &[u32]) -> bool {
    fn rec(m: &IntMatrix, v: &[u32], i: usize, cur: &mut Vec<u32>) -> bool {
        if i == v.len() {
            let zero = cur.iter().all(|&x| x == 0);
            let full = cur.as_slice() == v;
            return zero || full || !in_kernel(m, cur);
        }
        for e in 0..=v[i] {
            cur[i] = e;
            if !rec(m, v, i + 1, cur) {
                return false;
            }
        }
        cur[i] = 0;
        true
    }
    rec(m, v, 0, &mut vec![0; v.len()])
}

/// Random valid spec with entries of degree sum ≤ max_deg.
pub fn random_spec<R: Rng>(rng: &mut R, n: u32, ell: usize, max_deg: i64) -> SystemSpec {
    loop {
        let mut exps: Vec<Vec<i64>> = Vec::new();
        while exps.len() < ell {
            let mut p = vec![0i64; n as usize];
            let d = rng.gen_range(1..=max_deg);
            let lead_neg = rng.gen_bool(0.2);
            let mut left = d;
            if lead_neg {
                p[0] = -1;
                left += 1;
            }
            for _ in 0..left {
                let i = if lead_neg { rng.gen_range(1..n as usize) } else { rng.gen_range(0..n as usize) };
                p[i] += 1;
            }
            if !exps.contains(&p) {
                exps.push(p);
            }
        }
        if let Ok(s) = SystemSpec::new(n, exps) {
            return s;
        }
    }
}

pub fn random_cyclotomic<R: Rng>(rng: &mut R, n: u32, nonzero: bool) -> Cyclotomic {
    loop {
        let coeffs: Vec<Rational> = (0..n - 1)
            .map(|_| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4)).unwrap())
            .collect();
        let c = Cyclotomic::from_coeffs(n, &coeffs).unwrap();
        if !nonzero || !c.is_zero() {
            return c;
        }
    }
}
