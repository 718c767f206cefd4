//! Deterministic enumeration of Grassmannians and general linear groups
//! over prime fields.
//!
//! Orders are fixed and reproducible: Grassmannian points stream by pivot
//! set (lexicographic) then free entries counted in base p; GL(n) streams
//! in lexicographic order of the matrix entries read row-major.

use itertools::Itertools;

use super::field::{FieldDescriptor, FieldElement};
use super::matrix::Matrix;
use super::subspace::Subspace;
use super::ExactError;

/// Gaussian binomial [n choose s]_p — the number of s-dimensional
/// subspaces of F_p^n.
pub fn gaussian_binomial(n: usize, s: usize, p: u64) -> u128 {
    if s > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..s {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((s - i) as u32) - 1;
    }
    num / den
}

/// |GL(n, F_p)| = Π_{i=0}^{n-1} (p^n − p^i).
pub fn gl_order(n: usize, p: u64) -> u128 {
    let p = p as u128;
    (0..n).map(|i| p.pow(n as u32) - p.pow(i as u32)).product()
}

/// Streams every s-dimensional subspace of F_p^n exactly once.
pub fn grassmannian(
    n: usize,
    s: usize,
    field: FieldDescriptor,
) -> Result<GrassmannianIter, ExactError> {
    let FieldDescriptor::Prime(p) = field else {
        return Err(ExactError::EnumerationUnsupported);
    };
    if s > n {
        return Err(ExactError::SubspaceDimOutOfRange { s, n });
    }
    Ok(GrassmannianIter {
        n,
        s,
        p,
        field,
        pivot_sets: (0..n).combinations(s).collect(),
        pivot_idx: 0,
        free_positions: Vec::new(),
        digits: Vec::new(),
        fresh_pivot_set: true,
        done: false,
    })
}

pub struct GrassmannianIter {
    n: usize,
    s: usize,
    p: u64,
    field: FieldDescriptor,
    pivot_sets: Vec<Vec<usize>>,
    pivot_idx: usize,
    free_positions: Vec<(usize, usize)>,
    digits: Vec<u64>,
    fresh_pivot_set: bool,
    done: bool,
}

impl GrassmannianIter {
    fn build(&self, pivots: &[usize]) -> Subspace {
        let mut basis = Matrix::zeros(self.s, self.n, self.field);
        for (i, &pc) in pivots.iter().enumerate() {
            basis.set(i, pc, self.field.one());
        }
        for (&(i, j), &d) in self.free_positions.iter().zip(self.digits.iter()) {
            basis.set(i, j, self.field.from_integer(d as i64));
        }
        Subspace::from_rref_unchecked(basis, pivots.to_vec())
    }

    /// Base-p increment with the last free position least significant;
    /// returns false on wrap-around (all digits exhausted).
    fn bump(&mut self) -> bool {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.p {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        loop {
            if self.pivot_idx == self.pivot_sets.len() {
                self.done = true;
                return None;
            }
            if self.fresh_pivot_set {
                let pivots = self.pivot_sets[self.pivot_idx].clone();
                // Free entries of the RREF shape: to the right of the row's
                // pivot, outside every pivot column.
                self.free_positions = (0..self.s)
                    .flat_map(|i| {
                        let pivots = pivots.clone();
                        let pi = pivots[i];
                        (pi + 1..self.n)
                            .filter(move |j| !pivots.contains(j))
                            .map(move |j| (i, j))
                    })
                    .collect();
                self.digits = vec![0; self.free_positions.len()];
                self.fresh_pivot_set = false;
                return Some(self.build(&self.pivot_sets[self.pivot_idx].clone()));
            }
            if self.bump() {
                return Some(self.build(&self.pivot_sets[self.pivot_idx].clone()));
            }
            self.pivot_idx += 1;
            self.fresh_pivot_set = true;
        }
    }
}

/// Streams every invertible n×n matrix over F_p exactly once, in
/// lexicographic order of the entries read row-major.
pub fn gl(n: usize, field: FieldDescriptor) -> Result<GlIter, ExactError> {
    let FieldDescriptor::Prime(p) = field else {
        return Err(ExactError::EnumerationUnsupported);
    };
    Ok(GlIter {
        n,
        p,
        field,
        limit: (p as u128).pow(n as u32),
        counters: Vec::new(),
        rows: Vec::new(),
        spans: vec![Subspace::zero(n, field)],
        started: false,
        done: n == 0,
    })
}

pub struct GlIter {
    n: usize,
    p: u64,
    field: FieldDescriptor,
    limit: u128,
    counters: Vec<u128>,
    rows: Vec<Vec<FieldElement>>,
    spans: Vec<Subspace>,
    started: bool,
    done: bool,
}

impl GlIter {
    fn row_from_index(&self, c: u128) -> Vec<FieldElement> {
        let p = self.p as u128;
        (0..self.n)
            .map(|t| {
                let digit = (c / p.pow((self.n - 1 - t) as u32)) % p;
                self.field.from_integer(digit as i64)
            })
            .collect()
    }
}

impl Iterator for GlIter {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.counters.push(0);
        }
        loop {
            let depth = self.counters.len() - 1;
            let c = self.counters[depth];
            if c >= self.limit {
                // Exhausted this level: backtrack.
                self.counters.pop();
                if self.counters.is_empty() {
                    self.done = true;
                    return None;
                }
                self.rows.pop();
                self.spans.pop();
                *self.counters.last_mut().unwrap() += 1;
                continue;
            }
            let row = self.row_from_index(c);
            if self.spans[depth].contains(&row) {
                // Linearly dependent on the accepted prefix (or zero).
                self.counters[depth] += 1;
                continue;
            }
            let extended = self.spans[depth]
                .sum(&Subspace::from_vectors(self.n, self.field, vec![row.clone()]))
                .expect("same ambient dim");
            self.rows.push(row);
            self.spans.push(extended);
            if self.rows.len() == self.n {
                let m = Matrix::from_rows(self.field, self.rows.clone());
                self.rows.pop();
                self.spans.pop();
                self.counters[depth] += 1;
                return Some(m);
            }
            self.counters.push(0);
        }
    }
}
