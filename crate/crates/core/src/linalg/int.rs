use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: impl Into<BigInt>) {
        self.data[r * self.cols + c] = v.into();
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other.get(l, j);
                    out.data[i * other.cols + j] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            // Smallest nonzero pivot keeps intermediate entries short.
            let piv = (rank..rows)
                .filter(|&r| !a[r * cols + c].is_zero())
                .min_by(|&x, &y| a[x * cols + c].abs().cmp(&a[y * cols + c].abs()));
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in 0..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let pv = a[rank * cols + c].clone();
            for r in rank + 1..rows {
                let f = a[r * cols + c].clone();
                for j in c..cols {
                    let v = (&pv * &a[r * cols + j] - &f * &a[rank * cols + j]) / &prev;
                    a[r * cols + j] = v;
                }
            }
            prev = pv;
            rank += 1;
        }
        rank
    }
}
