//! Dense exact matrices and Gaussian elimination.
//!
//! ## Reduced row-echelon form
//!
//! [`Matrix::rref`] produces the unique RREF: pivot entries are 1, pivots
//! move strictly right, and pivot columns are zero above and below. All
//! downstream canonicalization (subspaces, kernels) reduces to it.
//!
//! Shapes and fields are checked with assertions: passing mismatched
//! operands is a programmer error, not a recoverable condition.

use crate::scalar::{FieldSpec, Scalar};

/// Row-major dense matrix over a fixed field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Column index of each pivot, one per nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from explicit rows. All rows must share one length.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    /// Convenience constructor from i64 entries (tests, catalog).
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            cols,
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Flattened entries in row-major order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Rebuilds an r×c matrix from a flattened row-major vector.
    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, flat: Vec<Scalar>) -> Matrix {
        assert_eq!(flat.len(), rows * cols, "flat length mismatch");
        Matrix {
            field,
            rows,
            cols,
            data: flat,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product `self · v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = f.add(&acc, &f.mul(a, &v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let f = self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }

    /// Stacks matrices vertically. All must share the column count and field.
    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut rows = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            assert_eq!(p.field, field, "vstack field mismatch");
            for r in p.rows_iter() {
                rows.push(r.to_vec());
            }
        }
        Matrix::from_rows(field, rows, cols)
    }

    /// Unique reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Find a pivot in column c at or below row r.
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            // Swap into place.
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            // Normalize the pivot row.
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            // Eliminate everywhere else.
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right kernel `{v : self · v = 0}` as a canonical RREF basis matrix
    /// (one basis vector per row; zero rows absent).
    pub fn kernel(&self) -> Matrix {
        let f = self.field;
        let r = self.rref();
        let pivot_set: Vec<usize> = r.pivots.clone();
        let mut rows = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_set {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row_idx, &p) in pivot_set.iter().enumerate() {
                v[p] = f.neg(r.matrix.get(row_idx, free));
            }
            rows.push(v);
        }
        // Re-reduce for canonical form (pivot entries of the assembled rows
        // may be unnormalized when free columns precede pivot columns).
        let raw = Matrix::from_rows(f, rows, self.cols);
        let rr = raw.rref();
        let mut out_rows = Vec::new();
        for i in 0..rr.rank {
            out_rows.push(rr.matrix.row(i).to_vec());
        }
        Matrix::from_rows(f, out_rows, self.cols)
    }

    /// Solves `self · x = b` exactly. Returns `None` when inconsistent; when
    /// the system is underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "rhs length mismatch");
        let f = self.field;
        // Augment and reduce.
        let mut rows = Vec::with_capacity(self.rows);
        for (i, r) in self.rows_iter().enumerate() {
            let mut v = r.to_vec();
            v.push(b[i].clone());
            rows.push(v);
        }
        let aug = Matrix::from_rows(f, rows, self.cols + 1).rref();
        // Inconsistent iff a pivot lands in the augmented column.
        if aug.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row_idx, &p) in aug.pivots.iter().enumerate() {
            x[p] = aug.matrix.get(row_idx, self.cols).clone();
        }
        Some(x)
    }
}
