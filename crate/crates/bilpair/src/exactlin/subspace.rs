//! Subspaces in canonical form: the unique RREF basis of the row span.
//!
//! Canonicity makes set equality a bit-exact comparison and lets orbit
//! deduplication use plain hashing.

use super::field::{FieldDescriptor, FieldElement};
use super::matrix::Matrix;
use super::ExactError;

/// A linear subspace of k^n, stored as its unique RREF basis
/// (full row rank, strictly increasing pivots, zero rows dropped).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes the row span of `m`.
    pub fn from_spanning(m: &Matrix) -> Subspace {
        let r = m.rref();
        let basis = Matrix::from_fn(r.rank, m.cols(), m.field(), |i, j| {
            r.matrix.get(i, j).clone()
        });
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn from_vectors(
        ambient_dim: usize,
        field: FieldDescriptor,
        vectors: Vec<Vec<FieldElement>>,
    ) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim, field);
        }
        Subspace::from_spanning(&Matrix::from_rows(field, vectors))
    }

    pub fn zero(ambient_dim: usize, field: FieldDescriptor) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, field: FieldDescriptor) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim, field),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Constructs from a matrix already known to be in canonical RREF form
    /// (used by the Grassmannian enumerator).
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(Subspace::from_spanning(&basis).basis, basis);
        Subspace {
            ambient_dim: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Subtracts the projection onto this subspace along the pivot
    /// coordinates; the result has zeros at every pivot position and
    /// vanishes iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for j in 0..self.ambient_dim {
                    let t = &v[j] - &(self.basis.get(row, j) * &factor);
                    v[j] = t;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(ExactError::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(Subspace::from_spanning(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the left null space of the stacked basis rows:
    /// a relation Σ aᵢuᵢ + Σ bⱼvⱼ = 0 exhibits Σ aᵢuᵢ as a common vector.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(ExactError::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim, field));
        }
        let stacked = self.basis.vstack(&other.basis);
        let relations = stacked.transpose().kernel_basis();
        let mut vectors = Vec::new();
        for r in 0..relations.rows() {
            let coeffs = relations.row(r);
            let mut v = vec![field.zero(); self.ambient_dim];
            for (i, c) in coeffs.iter().take(self.dim()).enumerate() {
                if !c.is_zero() {
                    for j in 0..self.ambient_dim {
                        let t = &v[j] + &(self.basis.get(i, j) * c);
                        v[j] = t;
                    }
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.ambient_dim, field, vectors))
    }
}
