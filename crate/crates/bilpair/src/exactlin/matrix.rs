//! Dense exact matrices with Gauss–Jordan reduction, kernels and inverses.

use std::fmt;

use super::field::{FieldDescriptor, FieldElement};
use super::ExactError;

/// A dense rows×cols matrix over a single field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    data: Vec<FieldElement>,
}

/// The outcome of a full Gauss–Jordan reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldDescriptor) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldDescriptor) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, field, data }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldDescriptor,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<FieldElement> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, self.field, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let term = self.get(i, k) * rhs.get(k, j);
                if !term.is_zero() {
                    acc = acc + term;
                }
            }
            acc
        })
    }

    /// Matrix–vector product (vector as coordinates of a column vector).
    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    if !v[k].is_zero() && !self.get(i, k).is_zero() {
                        acc = acc + self.get(i, k) * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Unique reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Find a pivot row at or below r.
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(m.get(r, j) * &factor);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis rows of the right null space {v : M·v = 0}.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (prow, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = -r.get(prow, fc).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            // Preserve the ambient width even for a trivial kernel.
            return Matrix::zeros(0, self.cols, self.field);
        }
        Matrix::from_rows(self.field, rows)
    }

    /// Exact inverse via Gauss–Jordan on [M | I].
    pub fn inverse(&self) -> Result<Matrix, ExactError> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, self.field, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let red = aug.rref();
        // Invertible iff the left block reduced to the identity.
        if red.pivots.len() < n || red.pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Err(ExactError::Singular);
        }
        Ok(Matrix::from_fn(n, n, self.field, |i, j| {
            red.matrix.get(i, n + j).clone()
        }))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "shape mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldDescriptor {
        FieldDescriptor::prime(2).unwrap()
    }

    fn f7() -> FieldDescriptor {
        FieldDescriptor::prime(7).unwrap()
    }

    #[test]
    fn rref_identity_fixed() {
        let id = Matrix::identity(2, f7());
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_ones_over_f2() {
        let ones = Matrix::from_fn(2, 2, f2(), |_, _| f2().one());
        let r = ones.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row_vec(0), vec![f2().one(), f2().one()]);
        assert!(r.matrix.row(1).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(3, 3, f7());
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix, z);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_rows(
            f7(),
            vec![
                vec![f7().from_integer(2), f7().from_integer(4), f7().from_integer(1)],
                vec![f7().from_integer(3), f7().from_integer(6), f7().from_integer(5)],
            ],
        );
        let once = m.rref();
        let twice = once.matrix.rref();
        assert_eq!(once.matrix, twice.matrix);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3, f7()).kernel_basis().rows(), 0);
        assert_eq!(Matrix::zeros(3, 3, f7()).kernel_basis().rows(), 3);
        let m = Matrix::from_rows(
            f7(),
            vec![
                vec![f7().one(), f7().zero()],
                vec![f7().zero(), f7().zero()],
            ],
        );
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row_vec(0), vec![f7().zero(), f7().one()]);
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_rows(
            f2(),
            vec![
                vec![f2().one(), f2().one(), f2().zero()],
                vec![f2().one(), f2().one(), f2().one()],
            ],
        );
        assert_eq!(m.rank() + m.kernel_basis().rows(), m.cols());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(
            f7(),
            vec![
                vec![f7().from_integer(2), f7().from_integer(1)],
                vec![f7().from_integer(3), f7().from_integer(4)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, f7()));
        let singular = Matrix::from_fn(2, 2, f7(), |_, _| f7().one());
        assert_eq!(singular.inverse(), Err(ExactError::Singular));
    }

    #[test]
    fn rational_inverse() {
        let q = FieldDescriptor::rationals();
        let m = Matrix::from_rows(
            q,
            vec![
                vec![q.from_ratio(1, 2).unwrap(), q.zero()],
                vec![q.one(), q.from_integer(3)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, q));
    }
}
