use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Basic term order used on its own or inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

/// Monomial order over a fixed variable list.
///
/// A block order compares the first block with its own kind, breaking ties
/// with the next block, and so on; it eliminates the leading blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Simple(OrderKind),
    Block(Vec<(OrderKind, usize)>),
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder::Simple(OrderKind::Lex)
    }

    pub fn deglex() -> Self {
        MonomialOrder::Simple(OrderKind::DegLex)
    }

    pub fn degrevlex() -> Self {
        MonomialOrder::Simple(OrderKind::DegRevLex)
    }

    /// Deglex block order with the given block sizes.
    pub fn deglex_blocks(sizes: &[usize]) -> Self {
        MonomialOrder::Block(sizes.iter().map(|&s| (OrderKind::DegLex, s)).collect())
    }

    /// Checks that the blocks partition `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block(bs) = self {
            let total: usize = bs.iter().map(|b| b.1).sum();
            if total != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    got: total,
                });
            }
        }
        Ok(())
    }

    /// Total comparison; returns an error when lengths differ.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        self.validate(a.len())?;
        Ok(self.cmp(a, b))
    }

    /// Comparison for vectors already known to have the ring's length.
    #[inline]
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Simple(k) => cmp_kind(*k, a, b),
            MonomialOrder::Block(bs) => {
                let mut start = 0;
                for &(k, len) in bs {
                    let o = cmp_kind(k, &a[start..start + len], &b[start..start + len]);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start += len;
                }
                Ordering::Equal
            }
        }
    }

    /// Key whose lexicographic order agrees with `cmp`; useful for keeping
    /// monomials in ordered collections.
    pub fn sort_key(&self, m: &[u32]) -> Vec<i64> {
        let mut key = Vec::with_capacity(m.len() + 4);
        match self {
            MonomialOrder::Simple(k) => push_key(*k, m, &mut key),
            MonomialOrder::Block(bs) => {
                let mut start = 0;
                for &(k, len) in bs {
                    push_key(k, &m[start..start + len], &mut key);
                    start += len;
                }
            }
        }
        key
    }
}

fn push_key(k: OrderKind, m: &[u32], key: &mut Vec<i64>) {
    let deg: i64 = m.iter().map(|&x| x as i64).sum();
    match k {
        OrderKind::Lex => key.extend(m.iter().map(|&x| x as i64)),
        OrderKind::DegLex => {
            key.push(deg);
            key.extend(m.iter().map(|&x| x as i64));
        }
        OrderKind::DegRevLex => {
            key.push(deg);
            key.extend(m.iter().rev().map(|&x| -(x as i64)));
        }
    }
}

#[inline]
fn cmp_kind(k: OrderKind, a: &[u32], b: &[u32]) -> Ordering {
    match k {
        OrderKind::Lex => a.cmp(b),
        OrderKind::DegLex => {
            let da: u64 = a.iter().map(|&x| x as u64).sum();
            let db: u64 = b.iter().map(|&x| x as u64).sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        }
        OrderKind::DegRevLex => {
            let da: u64 = a.iter().map(|&x| x as u64).sum();
            let db: u64 = b.iter().map(|&x| x as u64).sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Simple(k) => write!(f, "{}", k),
            MonomialOrder::Block(bs) => {
                let parts: Vec<String> = bs.iter().map(|(k, n)| format!("{}({})", k, n)).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}
