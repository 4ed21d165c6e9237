//! Dense integer matrices and integer kernels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Basis of the integer kernel {x ∈ ℤ^cols : M·x = 0}.
    ///
    /// Row-reduces [Mᵀ | I] with unimodular operations (extended gcd steps)
    /// to echelon form; rows whose left part vanishes span the kernel. The
    /// basis is returned in Hermite normal form.
    pub fn integer_kernel(&self) -> Result<Vec<Vec<i64>>> {
        let (m, n) = (self.rows, self.cols);
        let w = m + n;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|j| {
                let mut row = vec![0i128; w];
                for i in 0..m {
                    row[i] = self.get(i, j) as i128;
                }
                row[m + j] = 1;
                row
            })
            .collect();
        let rank = echelon(&mut a, 0, m)?;
        let mut kernel: Vec<Vec<i128>> = a[rank..].iter().map(|r| r[m..].to_vec()).collect();
        let k = kernel.len();
        let _ = echelon(&mut kernel, 0, n)?;
        debug_assert_eq!(kernel.len(), k);
        kernel
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| i64::try_from(x).map_err(|_| overflow()))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect()
    }
}

fn overflow() -> Error {
    Error::Structural("integer overflow in kernel computation".into())
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn checked_comb(x: i128, a: &[i128], y: i128, b: &[i128]) -> Result<Vec<i128>> {
    a.iter()
        .zip(b)
        .map(|(&p, &q)| {
            x.checked_mul(p)
                .and_then(|u| y.checked_mul(q).and_then(|v| u.checked_add(v)))
                .ok_or_else(overflow)
        })
        .collect()
}

/// Hermite-style row echelon form over columns `c0..c1`; returns the rank.
/// Pivots are positive and entries above pivots are reduced into
/// `[0, pivot)`.
fn echelon(a: &mut [Vec<i128>], c0: usize, c1: usize) -> Result<usize> {
    let mut r = 0;
    for c in c0..c1 {
        if r == a.len() {
            break;
        }
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (p, q) = (a[r][c], a[i][c]);
            let (g, x, y) = ext_gcd(p, q);
            let new_r = checked_comb(x, &a[r], y, &a[i])?;
            let new_i = checked_comb(-q / g, &a[r], p / g, &a[i])?;
            a[r] = new_r;
            a[i] = new_i;
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for v in a[r].iter_mut() {
                *v = -*v;
            }
        }
        let piv = a[r][c];
        for i in 0..r {
            let f = a[i][c].div_euclid(piv);
            if f != 0 {
                let row = checked_comb(1, &a[i], -f, &a[r])?;
                a[i] = row;
            }
        }
        r += 1;
    }
    // rows past the rank are zero on the reduced columns
    Ok(r)
}

impl fmt::Display for IntMatrix {
    /// Row-major with bracketed rows, e.g. `[[1, -1], [0, 2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let es: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
                format!("[{}]", es.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kernel_member(m: &IntMatrix, basis: &[Vec<i64>], v: &[i64]) -> bool {
        // solve v = Σ c_i b_i using the echelon shape of the basis
        let mut rest = v.to_vec();
        for b in basis {
            let p = b.iter().position(|&x| x != 0).unwrap();
            if rest[p] % b[p] != 0 {
                return false;
            }
            let c = rest[p] / b[p];
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= c * x;
            }
        }
        let _ = m;
        rest.iter().all(|&x| x == 0)
    }

    #[test]
    fn kernel_of_single_row() {
        let m = IntMatrix::from_rows(&[vec![1, -1]], 2).unwrap();
        assert_eq!(m.integer_kernel().unwrap(), vec![vec![1, 1]]);
        let z = IntMatrix::from_rows(&[vec![0, 0]], 2).unwrap();
        assert_eq!(z.integer_kernel().unwrap(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn kernel_is_saturated_lattice() {
        // 2x + 4y + 6z = 0 has kernel rank 2; (1, 1, -1) must be an integer combination
        let m = IntMatrix::from_rows(&[vec![2, 4, 6]], 3).unwrap();
        let k = m.integer_kernel().unwrap();
        assert_eq!(k.len(), 2);
        for b in &k {
            assert_eq!(m.mul_vec(b).unwrap(), vec![0]);
        }
        assert!(brute_kernel_member(&m, &k, &[1, 1, -1]));
        assert!(brute_kernel_member(&m, &k, &[-2, 1, 0]));
    }

    #[test]
    fn display_format() {
        let m = IntMatrix::from_rows(&[vec![1, -1], vec![0, 2]], 2).unwrap();
        assert_eq!(m.to_string(), "[[1, -1], [0, 2]]");
    }
}
