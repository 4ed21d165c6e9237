use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::is_prime;

/// Raw spec file contents, e.g. `{"n": 3, "exponents": [[1,0,0],[0,0,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSpec {
    pub n: u32,
    pub exponents: Vec<Vec<i64>>,
}

/// A validated family: prime n and ordered exponent vectors p^(1), …, p^(ℓ).
///
/// Coordinate j (0-based) of the system carries the terms
/// x_j · a^{(j)}_{T^j p} x^{T^j p}, where T(p) = (p_n, p_1, …, p_{n−1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SystemSpec {
    n: u32,
    exponents: Vec<Vec<i64>>,
}

impl SystemSpec {
    pub fn new(n: u32, exponents: Vec<Vec<i64>>) -> Result<Self> {
        validate_spec(&RawSpec { n, exponents })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse(format!("spec: {}", e)))?;
        validate_spec(&raw)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {}", path.display(), e)))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawSpec {
            n: self.n,
            exponents: self.exponents.clone(),
        })
        .expect("spec serializes")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nu(&self) -> usize {
        self.n as usize
    }

    /// Number of exponent vectors ℓ.
    pub fn ell(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    /// Number of parameters nℓ.
    pub fn nparams(&self) -> usize {
        self.nu() * self.ell()
    }

    /// Exponent of the parameter in block `k`, coordinate `j`: T^j p^(k).
    pub fn param_exponent(&self, k: usize, j: usize) -> Vec<i64> {
        let mut q = self.exponents[k].clone();
        for _ in 0..j {
            q = shift(&q);
        }
        q
    }

    /// Parameter names in block order: block k lists coordinates 1..n.
    pub fn parameter_vars(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.nparams());
        for k in 0..self.ell() {
            for j in 0..self.nu() {
                out.push(param_name(j, &self.param_exponent(k, j)));
            }
        }
        out
    }
}

/// T(p) = (p_n, p_1, …, p_{n−1}).
pub fn shift(p: &[i64]) -> Vec<i64> {
    let n = p.len();
    let mut q = Vec::with_capacity(n);
    q.push(p[n - 1]);
    q.extend_from_slice(&p[..n - 1]);
    q
}

/// Coordinate letter followed by the exponent subscript; entries outside
/// 0..=9 switch to a comma-separated subscript with `m1` for −1.
pub fn param_name(coord: usize, exps: &[i64]) -> String {
    let letter = if coord < 26 {
        ((b'a' + coord as u8) as char).to_string()
    } else {
        format!("x{}_", coord + 1)
    };
    let plain = exps.iter().all(|&e| (0..=9).contains(&e));
    let sub = if plain {
        exps.iter().map(|e| e.to_string()).collect::<String>()
    } else {
        exps.iter()
            .map(|&e| if e < 0 { format!("m{}", -e) } else { e.to_string() })
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{}{}", letter, sub)
}

/// Checks the family invariants, naming the violated one on failure.
pub fn validate_spec(raw: &RawSpec) -> Result<SystemSpec> {
    if !is_prime(raw.n) {
        return Err(Error::InvalidSpec(format!("n must be prime, got {}", raw.n)));
    }
    if raw.exponents.is_empty() {
        return Err(Error::InvalidSpec("exponent list is empty".into()));
    }
    let n = raw.n as usize;
    let mut seen = HashSet::new();
    for p in &raw.exponents {
        if p.len() != n {
            return Err(Error::InvalidSpec(format!(
                "exponent {:?} has length {}, expected {}",
                p,
                p.len(),
                n
            )));
        }
        if p[0] < -1 {
            return Err(Error::InvalidSpec(format!("exponent {:?}: first entry below -1", p)));
        }
        if p[1..].iter().any(|&e| e < 0) {
            return Err(Error::InvalidSpec(format!(
                "exponent {:?}: negative entry beyond position 1",
                p
            )));
        }
        if p.iter().sum::<i64>() < 1 {
            return Err(Error::InvalidSpec(format!("exponent {:?}: degree sum below 1", p)));
        }
        if !seen.insert(p.clone()) {
            return Err(Error::InvalidSpec(format!("duplicate exponent {:?}", p)));
        }
    }
    Ok(SystemSpec {
        n: raw.n,
        exponents: raw.exponents.clone(),
    })
}
