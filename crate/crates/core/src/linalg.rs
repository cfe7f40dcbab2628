//! Dense linear algebra over a prime field.

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Row-major dense matrix over `Z/p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.concat() })
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[u32]>::to_vec).collect()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, f: PrimeField) -> Matrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(*a, *b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix, f: PrimeField) -> Matrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(*a, *b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32, f: PrimeField) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.mul(*a, c)).collect() }
    }

    pub fn trace(&self, f: PrimeField) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else { continue };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col)).unwrap();
            for j in 0..self.cols {
                let v = f.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : self * v = 0}` in reduced form: one vector per free
    /// column, with a 1 in that column.
    pub fn nullspace(&self, f: PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// A solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[u32], f: PrimeField) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }

    pub fn determinant(&self, f: PrimeField) -> u32 {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| m.get(r, col) != 0) else { return 0 };
            if pr != col {
                for j in 0..n {
                    m.data.swap(pr * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let piv = m.get(col, col);
            det = f.mul(det, piv);
            let inv = f.inv(piv).unwrap();
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, f: PrimeField) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    pub fn inverse(&self, f: PrimeField) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn pow(&self, e: usize, f: PrimeField) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self, f);
        }
        acc
    }

    /// Column-major flattening, used to treat matrices as vectors.
    pub fn vectorize(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self.get(i, j));
            }
        }
        v
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.set(i, j, v[j * rows + i]);
            }
        }
        m
    }
}

/// Linear combination `sum c_i M_i` of equally sized matrices.
pub fn combination(coeffs: &[u32], mats: &[Matrix], f: PrimeField) -> Matrix {
    let mut out = Matrix::zeros(mats[0].rows, mats[0].cols);
    for (c, m) in coeffs.iter().zip(mats) {
        if *c != 0 {
            out = out.add(&m.scale(*c, f), f);
        }
    }
    out
}
