//! Dense integer matrices, rank, column Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Integer, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Integer>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl IntegerMatrix {
    pub fn new(entries: Vec<Vec<Integer>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::Malformed(
                "matrix dimensions must be at least 1".into(),
            ));
        }
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        let transposed: Vec<Vec<i64>> = (0..rows)
            .map(|i| {
                columns
                    .iter()
                    .map(|c| c.get(i).copied().unwrap_or_default())
                    .collect()
            })
            .collect();
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::LengthMismatch {
                expected: rows,
                got: bad.len(),
            });
        }
        Self::from_i64(&transposed)
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Integer::one()
                        } else {
                            Integer::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Integer> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Integer]) -> Result<Vec<Integer>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn to_json(&self) -> Result<String> {
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.to_i64()
                            .ok_or_else(|| Error::Malformed(format!("entry {v} exceeds i64")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let json = MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries,
        };
        Ok(serde_json::to_string(&json).expect("plain data"))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let m = Self::from_i64(&json.entries)?;
        if m.rows != json.rows || m.cols != json.cols {
            return Err(Error::Malformed(format!(
                "declared {}x{} but entries are {}x{}",
                json.rows, json.cols, m.rows, m.cols
            )));
        }
        Ok(m)
    }
}

/// Basis vectors of an integer lattice, stored as rows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec<Integer>>,
}

impl LatticeBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Rank over the rationals by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn rank(a: &IntegerMatrix) -> usize {
    let mut m: Vec<Vec<Rational>> = a
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| Rational::from_integer(v.clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..a.cols {
        let Some(pivot) = (rank..a.rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..a.rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &m[rank][col];
            for j in col..a.cols {
                let delta = &factor * &m[rank][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Column-style Hermite normal form: returns `(H, U, r)` with `A·U = H`, `U`
/// unimodular, the first `r` columns of `H` in echelon form with positive
/// pivots and reduced entries left of each pivot, and the remaining columns zero.
pub fn hermite_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, usize) {
    let mut h = a.entries.clone();
    let mut u = IntegerMatrix::identity(a.cols).entries;
    let (m, k) = (a.rows, a.cols);
    let mut pc = 0;

    // column operations applied to both H and U
    let combine = |mat: &mut Vec<Vec<Integer>>, i: usize, j: usize, coeffs: [&Integer; 4]| {
        let [s, t, x, y] = coeffs;
        for row in mat.iter_mut() {
            let (ci, cj) = (row[i].clone(), row[j].clone());
            row[i] = s * &ci + t * &cj;
            row[j] = x * &ci + y * &cj;
        }
    };

    for r in 0..m {
        if pc == k {
            break;
        }
        for j in pc + 1..k {
            if h[r][j].is_zero() {
                continue;
            }
            let (av, bv) = (h[r][pc].clone(), h[r][j].clone());
            let ext = av.extended_gcd(&bv);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let x = -(&bv / &g);
            let y = &av / &g;
            combine(&mut h, pc, j, [&s, &t, &x, &y]);
            combine(&mut u, pc, j, [&s, &t, &x, &y]);
        }
        if h[r][pc].is_zero() {
            continue;
        }
        if h[r][pc].is_negative() {
            for mat in [&mut h, &mut u] {
                for row in mat.iter_mut() {
                    row[pc] = -&row[pc];
                }
            }
        }
        for j in 0..pc {
            let q = h[r][j].div_floor(&h[r][pc]);
            if q.is_zero() {
                continue;
            }
            for mat in [&mut h, &mut u] {
                for row in mat.iter_mut() {
                    let delta = &q * &row[pc];
                    row[j] -= delta;
                }
            }
        }
        pc += 1;
    }
    let h = IntegerMatrix {
        rows: m,
        cols: k,
        entries: h,
    };
    let u = IntegerMatrix {
        rows: k,
        cols: k,
        entries: u,
    };
    (h, u, pc)
}

/// Basis of the full integer kernel `{u : A·u = 0}`, read off the trailing
/// columns of the unimodular HNF transform.
pub fn kernel_lattice(a: &IntegerMatrix) -> LatticeBasis {
    let (_, u, r) = hermite_normal_form(a);
    let mut vectors: Vec<Vec<BigInt>> = (r..a.cols).map(|j| u.column(j)).collect();
    size_reduce(&mut vectors);
    LatticeBasis { vectors }
}

fn norm2(v: &[Integer]) -> Integer {
    v.iter().map(|x| x * x).sum()
}

// Pairwise size reduction; unimodular, so the spanned lattice is unchanged.
fn size_reduce(vectors: &mut [Vec<Integer>]) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..vectors.len() {
            for j in 0..vectors.len() {
                if i == j {
                    continue;
                }
                let nj = norm2(&vectors[j]);
                let dot: Integer = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
                // nearest integer to dot / nj
                let q = (Integer::from(2) * &dot + &nj).div_floor(&(Integer::from(2) * &nj));
                if q.is_zero() {
                    continue;
                }
                let candidate: Vec<Integer> = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(a, b)| a - &q * b)
                    .collect();
                if norm2(&candidate) < norm2(&vectors[i]) {
                    vectors[i] = candidate;
                    changed = true;
                }
            }
        }
    }
    for v in vectors.iter_mut() {
        if v.iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative())
        {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
    }
}
