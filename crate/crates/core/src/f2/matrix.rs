use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::F2Vector;
use crate::{Error, Result};

/// A rectangular matrix over F₂, stored as a list of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn new(cols: usize, rows: Vec<F2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(F2Matrix { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix {
            cols: n,
            rows: (0..n).map(|i| F2Vector::standard(n, i)).collect(),
        }
    }

    pub fn empty(cols: usize) -> Self {
        F2Matrix { cols, rows: Vec::new() }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> F2Vector {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i].get(j)
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduced row echelon form: pivots strictly increasing left to right,
    /// pivot columns zero elsewhere, zero rows dropped. Idempotent.
    pub fn rref(&self) -> F2Matrix {
        let mut rows = self.rows.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r].get(col) == 1) else {
                continue;
            };
            rows.swap(pivot_row, r);
            let pivot = rows[pivot_row];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != pivot_row && row.get(col) == 1 {
                    *row += pivot;
                }
            }
            pivot_row += 1;
            if pivot_row == rows.len() {
                break;
            }
        }
        rows.truncate(pivot_row);
        F2Matrix { cols: self.cols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rref().n_rows()
    }

    /// True when the matrix is already in reduced row echelon form with no
    /// zero rows.
    pub fn is_canonical_rref(&self) -> bool {
        *self == self.rref()
    }

    /// Pivot column of each row; meaningful for RREF matrices.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| (0..self.cols).find(|&j| r.get(j) == 1).unwrap())
            .collect()
    }

    pub fn transpose(&self) -> F2Matrix {
        let rows = (0..self.cols)
            .map(|j| {
                let mut v = F2Vector::zero(self.rows.len());
                for (i, row) in self.rows.iter().enumerate() {
                    v.set(i, row.get(j));
                }
                v
            })
            .collect();
        F2Matrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// Row-space combination Σ vᵢ·rowᵢ; `v` has one coordinate per row.
    pub fn combine_rows(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: self.rows.len(),
            });
        }
        let mut out = F2Vector::zero(self.cols);
        for i in 0..self.rows.len() {
            if v.get(i) == 1 {
                out += self.rows[i];
            }
        }
        Ok(out)
    }

    /// Matrix–vector product over F₂ (each output coordinate is rowᵢ·v).
    pub fn apply(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: self.cols,
            });
        }
        let mut out = F2Vector::zero(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(v));
        }
        Ok(out)
    }

    /// Stack the rows of two matrices with equal column counts.
    pub fn stack(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(F2Matrix { cols: self.cols, rows })
    }

    /// Inverse of a square invertible matrix, by Gauss–Jordan on [M | I].
    pub fn inverse(&self) -> Result<F2Matrix> {
        if !self.is_square() {
            return Err(Error::invalid(format!(
                "inverse requires a square matrix, got {}x{}",
                self.rows.len(),
                self.cols
            )));
        }
        let n = self.cols;
        let mut left = self.rows.clone();
        let mut right: Vec<F2Vector> = (0..n).map(|i| F2Vector::standard(n, i)).collect();
        // For invertible input every column yields a pivot, so the pivot
        // row always equals the column index.
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| left[r].get(col) == 1) else {
                return Err(Error::Singular);
            };
            left.swap(col, r);
            right.swap(col, r);
            let (lp, rp) = (left[col], right[col]);
            for i in 0..n {
                if i != col && left[i].get(col) == 1 {
                    left[i] += lp;
                    right[i] += rp;
                }
            }
        }
        Ok(F2Matrix { cols: n, rows: right })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.cols
    }

    /// Uniformly random matrix.
    pub fn random(rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let rows = (0..rows)
            .map(|_| F2Vector::from_index(cols, rng.random_range(0..1usize << cols)))
            .collect();
        F2Matrix { cols, rows }
    }

    /// Uniformly random invertible square matrix, by rejection.
    pub fn random_invertible(n: usize, rng: &mut impl Rng) -> Self {
        loop {
            let m = Self::random(n, n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }
}

impl fmt::Display for F2Matrix {
    /// Rows as bitstrings joined by ','.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix[{self}]")
    }
}

impl FromStr for F2Matrix {
    type Err = Error;

    /// Parse comma-separated bitstring rows, e.g. "11,01".
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<F2Vector> = s
            .split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<_>>()?;
        let cols = rows
            .first()
            .map(F2Vector::len)
            .ok_or_else(|| Error::parse("matrix needs at least one row"))?;
        F2Matrix::new(cols, rows)
    }
}
