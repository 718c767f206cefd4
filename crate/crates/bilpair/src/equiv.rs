//! Equivalence of bilinear pairs by exhaustive search over basis changes,
//! automorphism groups of small pairs, and cheap equivalence invariants.
//!
//! A witness from f to g is an invertible φ with g(φx, φy) = φ f(x, y).
//! The search space is cut down by working in radical-adapted coordinates:
//! any witness maps rad(f) onto rad(g), so with the radical spanning the
//! last coordinates every witness is block lower triangular.

use rayon::prelude::*;
use thiserror::Error;

use crate::exactlin::enumerate::gl;
use crate::exactlin::field::{FieldDescriptor, FieldElement};
use crate::exactlin::matrix::Matrix;
use crate::pair::BilinearPair;

/// Errors from equivalence search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error(
        "search space too large for the standard budget \
         (dim {dim}, field order {order}); pass a larger budget to force it"
    )]
    BudgetExceeded { dim: usize, order: u64 },
    #[error("exhaustive search requires a finite base field")]
    InfiniteField,
}

/// How much exhaustive searching to allow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    /// Accepts dim ≤ 5 over fields of order ≤ 3, or dim ≤ 3 of order ≤ 7.
    Standard,
    /// No size cap; the caller accepts the runtime.
    Unlimited,
}

impl Budget {
    fn admits(self, dim: usize, order: u64) -> bool {
        match self {
            Budget::Standard => (dim <= 5 && order <= 3) || (dim <= 3 && order <= 7),
            Budget::Unlimited => true,
        }
    }
}

/// Errors unless the standard budget admits exhaustive searches of the
/// given dimension over F_p.
pub fn check_standard_budget(dim: usize, order: u64) -> Result<(), EquivError> {
    if Budget::Standard.admits(dim, order) {
        Ok(())
    } else {
        Err(EquivError::BudgetExceeded { dim, order })
    }
}

/// A verified change of basis carrying one pair onto another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub phi: Matrix,
}

/// Checks g(φe_i, φe_j) = φ f(e_i, e_j) entrywise, returning early on the
/// first mismatch. `phi` need not be pre-checked for invertibility: a
/// non-invertible map fails the product equations unless both pairs are
/// degenerate, so callers enumerate invertible candidates only.
pub fn is_witness(f: &BilinearPair, g: &BilinearPair, phi: &Matrix) -> bool {
    let n = f.dim();
    if g.dim() != n || phi.rows() != n || phi.cols() != n {
        return false;
    }
    let cols: Vec<Vec<FieldElement>> = (0..n).map(|j| phi.col_vec(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = g.product(&cols[i], &cols[j]);
            let rhs = phi.mul_vec(f.product_of_basis(i, j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Cheap equivalence invariants; pairs with different fingerprints are
/// never equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub field: FieldDescriptor,
    pub radical_dim: usize,
    pub product_dim: usize,
    pub radical_product_overlap: usize,
    pub left_rank: usize,
    pub right_rank: usize,
}

/// Computes the invariant fingerprint: dimensions of the radical, the
/// product subspace and their intersection, plus the ranks of the stacked
/// left and right multiplication maps v ↦ f(v,·) and v ↦ f(·,v).
pub fn invariant_fingerprint(p: &BilinearPair) -> Fingerprint {
    let n = p.dim();
    let rad = p.radical();
    let prod = p.product_space();
    let overlap = rad.intersect(&prod).expect("same ambient dimension");
    let mut left_rows = Vec::with_capacity(n * n);
    let mut right_rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            left_rows.push((0..n).map(|j| p.get(j, i, k).clone()).collect::<Vec<_>>());
            right_rows.push((0..n).map(|j| p.get(i, j, k).clone()).collect::<Vec<_>>());
        }
    }
    let rank_of = |rows: Vec<Vec<FieldElement>>| {
        if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(p.field(), rows).rank()
        }
    };
    Fingerprint {
        dim: n,
        field: p.field(),
        radical_dim: rad.dim(),
        product_dim: prod.dim(),
        radical_product_overlap: overlap.dim(),
        left_rank: rank_of(left_rows),
        right_rank: rank_of(right_rows),
    }
}

/// New coordinates putting the radical last: the map sending the chosen
/// complement vectors to e_1..e_u and the radical basis to the tail.
fn radical_adapting_map(p: &BilinearPair) -> Matrix {
    let n = p.dim();
    let field = p.field();
    let rad = p.radical();
    let complement_cols: Vec<usize> = (0..n).filter(|c| !rad.pivots().contains(c)).collect();
    let mut b = Matrix::zeros(n, n, field);
    for (col, &c) in complement_cols.iter().enumerate() {
        b.set(c, col, field.one());
    }
    for r in 0..rad.dim() {
        for c in 0..n {
            b.set(c, complement_cols.len() + r, rad.basis().get(r, c).clone());
        }
    }
    b.inverse().expect("adapted basis is invertible")
}

/// Decides equivalence by exhaustive search, returning a verified witness
/// when the pairs are equivalent and `None` when the full search space is
/// exhausted without one.
///
/// When 0 < dim rad < n the sweep runs in radical-adapted coordinates and
/// only visits block lower triangular candidates — complete because every
/// witness maps radical to radical — shrinking the space from |GL(n)| to
/// |GL(u)|·|GL(r)|·p^{ru}.
pub fn are_equivalent_bruteforce(
    f: &BilinearPair,
    g: &BilinearPair,
    budget: Budget,
) -> Result<Option<EquivalenceWitness>, EquivError> {
    let FieldDescriptor::Prime(p) = f.field() else {
        return Err(EquivError::InfiniteField);
    };
    let n = f.dim();
    if !budget.admits(n, p) {
        return Err(EquivError::BudgetExceeded { dim: n, order: p });
    }
    if g.dim() != n || g.field() != f.field() {
        return Ok(None);
    }
    if invariant_fingerprint(f) != invariant_fingerprint(g) {
        return Ok(None);
    }
    let field = f.field();
    let r = f.radical().dim();
    if r == n {
        // Matching fingerprints with a full radical: both pairs are zero.
        return Ok(Some(EquivalenceWitness { phi: Matrix::identity(n, field) }));
    }
    if r == 0 {
        let found = gl(n, field)
            .expect("prime field")
            .find(|phi| is_witness(f, g, phi));
        return Ok(found.map(|phi| EquivalenceWitness { phi }));
    }

    let tf = radical_adapting_map(f);
    let tg = radical_adapting_map(g);
    let fa = f.apply_change_of_basis(&tf).expect("invertible");
    let ga = g.apply_change_of_basis(&tg).expect("invertible");
    let u = n - r;
    let a_blocks: Vec<Matrix> = gl(u, field).expect("prime field").collect();
    let d_blocks: Vec<Matrix> = gl(r, field).expect("prime field").collect();
    let c_count = (p as u128).pow((r * u) as u32);
    let found = a_blocks.par_iter().find_map_any(|a_blk| {
        let mut phi = Matrix::zeros(n, n, field);
        for i in 0..u {
            for j in 0..u {
                phi.set(i, j, a_blk.get(i, j).clone());
            }
        }
        for d_blk in &d_blocks {
            for i in 0..r {
                for j in 0..r {
                    phi.set(u + i, u + j, d_blk.get(i, j).clone());
                }
            }
            for c_idx in 0..c_count {
                let mut rem = c_idx;
                for i in 0..r {
                    for j in 0..u {
                        let digit = (rem % p as u128) as i64;
                        rem /= p as u128;
                        phi.set(u + i, j, field.from_integer(digit));
                    }
                }
                if is_witness(&fa, &ga, &phi) {
                    return Some(phi.clone());
                }
            }
        }
        None
    });
    Ok(found.map(|phi| {
        // Translate back to the original coordinates of both pairs.
        let total = tg
            .inverse()
            .expect("invertible")
            .mul(&phi)
            .mul(&tf);
        debug_assert!(is_witness(f, g, &total));
        EquivalenceWitness { phi: total }
    }))
}

/// The full automorphism group of a small pair over a finite field,
/// stored as an explicit element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    base: BilinearPair,
    elements: Vec<Matrix>,
}

impl AutomorphismGroup {
    /// The group containing only the identity.
    pub fn trivial(base: &BilinearPair) -> AutomorphismGroup {
        AutomorphismGroup {
            base: base.clone(),
            elements: vec![Matrix::identity(base.dim(), base.field())],
        }
    }

    /// Builds a group from explicitly listed elements, asserting each is
    /// an automorphism and (in debug builds) that the list is closed
    /// under composition.
    pub fn from_elements(base: &BilinearPair, elements: Vec<Matrix>) -> AutomorphismGroup {
        assert!(!elements.is_empty(), "a group contains at least the identity");
        for phi in &elements {
            assert!(is_witness(base, base, phi), "listed element is not an automorphism");
        }
        let group = AutomorphismGroup { base: base.clone(), elements };
        #[cfg(debug_assertions)]
        group.assert_closed();
        group
    }

    #[cfg(debug_assertions)]
    fn assert_closed(&self) {
        for a in &self.elements {
            for b in &self.elements {
                let ab = a.mul(b);
                assert!(self.elements.contains(&ab), "element list not closed");
            }
        }
    }

    pub fn base(&self) -> &BilinearPair {
        &self.base
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Enumerates the automorphism group of a pair of dimension ≤ 3 over a
/// finite field by sweeping GL(n).
pub fn automorphism_group(p: &BilinearPair) -> Result<AutomorphismGroup, EquivError> {
    let FieldDescriptor::Prime(order) = p.field() else {
        return Err(EquivError::InfiniteField);
    };
    let n = p.dim();
    if n > 3 {
        return Err(EquivError::BudgetExceeded { dim: n, order });
    }
    let elements: Vec<Matrix> = gl(n, p.field())
        .expect("prime field")
        .filter(|phi| is_witness(p, p, phi))
        .collect();
    Ok(AutomorphismGroup { base: p.clone(), elements })
}
