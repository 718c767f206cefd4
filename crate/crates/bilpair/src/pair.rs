//! The core bilinear-pair type: structure constants, radical, product
//! subspace, opposite, direct sums with radical components, quotient by
//! the radical, basis change, decomposition into (base, cocycle), and the
//! `.bp` text format.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cohom::{self, BilinearForm, Cocycle};
use crate::exactlin::field::{FieldDescriptor, FieldElement};
use crate::exactlin::matrix::Matrix;
use crate::exactlin::subspace::Subspace;
use crate::exactlin::ExactError;

/// Errors from bilinear-pair operations and `.bp` parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: basis index e{index} out of range for dim {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("line {line}: duplicate product left-hand side e{i}*e{j}")]
    DuplicateProduct { line: usize, i: usize, j: usize },
    #[error("invalid field: {0}")]
    BadField(ExactError),
    #[error("pair has zero radical: nothing to decompose")]
    ZeroRadical,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An n-dimensional space with an arbitrary bilinear product, given by
/// structure constants `c[i][j][k]`: e_i·e_j = Σ_k c[i][j][k] e_k.
/// Equality is strict entrywise identity; equivalence lives in `equiv`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearPair {
    dim: usize,
    field: FieldDescriptor,
    c: Vec<FieldElement>,
}

/// The (base, cocycle) decomposition of a pair with nonzero radical:
/// the induced product on a complement of the radical plus the
/// radical-valued part of the original product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub base: BilinearPair,
    pub theta: Cocycle,
    /// Rows: the chosen complement vectors (standard basis vectors at the
    /// non-pivot coordinates of the RREF radical basis).
    pub complement_basis: Matrix,
    /// Rows: the RREF radical basis.
    pub radical_basis: Matrix,
}

impl Decomposition {
    /// The change of basis carrying the original pair onto
    /// `build_extension(base, theta)` entrywise.
    pub fn witness(&self) -> Matrix {
        adapted_basis_matrix(&self.complement_basis, &self.radical_basis)
            .inverse()
            .expect("basis matrix is invertible")
    }
}

/// Columns: complement vectors then radical vectors (old coordinates of
/// the adapted basis).
fn adapted_basis_matrix(complement: &Matrix, radical: &Matrix) -> Matrix {
    let n = complement.cols();
    let field = complement.field();
    Matrix::from_fn(n, n, field, |i, j| {
        if j < complement.rows() {
            complement.get(j, i).clone()
        } else {
            radical.get(j - complement.rows(), i).clone()
        }
    })
}

impl BilinearPair {
    pub fn zero(dim: usize, field: FieldDescriptor) -> BilinearPair {
        BilinearPair {
            dim,
            field,
            c: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_constants(
        dim: usize,
        field: FieldDescriptor,
        c: Vec<FieldElement>,
    ) -> BilinearPair {
        assert_eq!(c.len(), dim * dim * dim, "tensor size mismatch");
        BilinearPair { dim, field, c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: FieldElement) {
        let idx = self.idx(i, j, k);
        self.c[idx] = v;
    }

    /// Coordinates of e_i · e_j.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[FieldElement] {
        let start = self.idx(i, j, 0);
        &self.c[start..start + self.dim]
    }

    /// f(u, v) for arbitrary coordinate vectors.
    pub fn product(&self, u: &[FieldElement], v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let scale = &u[i] * &v[j];
                for k in 0..self.dim {
                    let cijk = self.get(i, j, k);
                    if !cijk.is_zero() {
                        out[k] = &out[k] + &(cijk * &scale);
                    }
                }
            }
        }
        out
    }

    /// rad(f) = {v : f(v,V) + f(V,v) = 0}, the two-sided annihilator,
    /// computed as the kernel of the stacked left/right multiplication map
    /// (a 2n² × n linear system).
    pub fn radical(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for k in 0..n {
                // e_i · v = 0 component k: Σ_j c[i][j][k] v_j = 0
                rows.push((0..n).map(|j| self.get(i, j, k).clone()).collect::<Vec<_>>());
                // v · e_i = 0 component k: Σ_j c[j][i][k] v_j = 0
                rows.push((0..n).map(|j| self.get(j, i, k).clone()).collect::<Vec<_>>());
            }
        }
        if rows.is_empty() {
            return Subspace::zero(0, self.field);
        }
        let m = Matrix::from_rows(self.field, rows);
        Subspace::from_spanning(&m.kernel_basis())
    }

    /// Span of all products e_i·e_j — the subspace f(V, V).
    pub fn product_space(&self) -> Subspace {
        let vectors: Vec<Vec<FieldElement>> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| self.product_of_basis(i, j).to_vec()))
            .collect();
        Subspace::from_vectors(self.dim, self.field, vectors)
    }

    /// The pair g with g(x,y) = φ f(φ⁻¹x, φ⁻¹y): the unique product making
    /// φ an equivalence from `self` to the result.
    pub fn apply_change_of_basis(&self, phi: &Matrix) -> Result<BilinearPair, ExactError> {
        assert_eq!(phi.rows(), self.dim);
        assert_eq!(phi.cols(), self.dim);
        let psi = phi.inverse()?;
        let n = self.dim;
        let mut out = BilinearPair::zero(n, self.field);
        // g(e_i, e_j) = φ f(ψ e_i, ψ e_j); ψ e_i is column i of ψ.
        for i in 0..n {
            let ui = psi.col_vec(i);
            for j in 0..n {
                let uj = psi.col_vec(j);
                let w = phi.mul_vec(&self.product(&ui, &uj));
                for (k, v) in w.into_iter().enumerate() {
                    out.set(i, j, k, v);
                }
            }
        }
        Ok(out)
    }

    /// g^op(x, y) = g(y, x).
    pub fn opposite(&self) -> BilinearPair {
        let n = self.dim;
        let mut out = BilinearPair::zero(n, self.field);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        out
    }

    /// Direct sum with t one-dimensional radical components: t new basis
    /// vectors that multiply to zero on both sides.
    pub fn add_radical_components(&self, t: usize) -> BilinearPair {
        let n = self.dim + t;
        let mut out = BilinearPair::zero(n, self.field);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set(i, j, k, self.get(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Decomposes a pair with nonzero radical into the induced base product
    /// on a complement of the radical and the radical-valued cocycle.
    pub fn decompose(&self) -> Result<Decomposition, PairError> {
        let rad = self.radical();
        if rad.is_zero() {
            return Err(PairError::ZeroRadical);
        }
        let n = self.dim;
        let m = rad.dim();
        let u = n - m;
        // Complement: standard basis vectors at the non-pivot coordinates.
        let complement_cols: Vec<usize> =
            (0..n).filter(|c| !rad.pivots().contains(c)).collect();
        let mut complement = Matrix::zeros(u, n, self.field);
        for (row, &c) in complement_cols.iter().enumerate() {
            complement.set(row, c, self.field.one());
        }
        let radical_basis = rad.basis().clone();
        let b = adapted_basis_matrix(&complement, &radical_basis);
        let adapted = self
            .apply_change_of_basis(&b.inverse().expect("basis matrix invertible"))
            .expect("invertible");
        // In adapted coordinates the radical spans the last m vectors, so
        // products with them vanish and the tensor splits cleanly.
        let mut base = BilinearPair::zero(u, self.field);
        let mut components = vec![BilinearForm::zero(u, self.field); m];
        for i in 0..u {
            for j in 0..u {
                for k in 0..u {
                    base.set(i, j, k, adapted.get(i, j, k).clone());
                }
                for l in 0..m {
                    components[l].set(i, j, adapted.get(i, j, u + l).clone());
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i >= u || j >= u {
                    debug_assert!(
                        adapted.product_of_basis(i, j).iter().all(|v| v.is_zero()),
                        "radical vectors must annihilate"
                    );
                }
            }
        }
        let theta = Cocycle::new(components);
        let decomposition = Decomposition {
            base,
            theta,
            complement_basis: complement,
            radical_basis,
        };
        debug_assert_eq!(
            cohom::build_extension(&decomposition.base, &decomposition.theta),
            adapted
        );
        debug_assert!(decomposition
            .base
            .radical()
            .intersect(&cohom::cocycle_radical(&decomposition.theta))
            .expect("same ambient")
            .is_zero());
        Ok(decomposition)
    }

    /// V / rad(f) with the induced product; computed on the canonical
    /// complement, with a representative-independence cross-check in
    /// debug builds.
    pub fn quotient_by_radical(&self) -> BilinearPair {
        match self.decompose() {
            Ok(d) => {
                #[cfg(debug_assertions)]
                {
                    // Shifting complement representatives by a radical vector
                    // must not change the induced product.
                    let rad = self.radical();
                    if rad.dim() > 0 && d.base.dim() > 0 {
                        let r0 = rad.basis().row_vec(0);
                        let u0: Vec<FieldElement> = d
                            .complement_basis
                            .row(0)
                            .iter()
                            .zip(&r0)
                            .map(|(a, b)| a + b)
                            .collect();
                        let u1 = d.complement_basis.row_vec(0);
                        let shifted = self.product(&u0, &u0);
                        let plain = self.product(&u1, &u1);
                        debug_assert_eq!(rad.reduce(&shifted), rad.reduce(&plain));
                    }
                }
                d.base
            }
            Err(PairError::ZeroRadical) => self.clone(),
            Err(e) => unreachable!("decompose failed unexpectedly: {e}"),
        }
    }

    /// Iteratively detects and removes radical components; returns the
    /// component-free core and the number of components removed.
    pub fn strip_radical_components(&self) -> (BilinearPair, usize) {
        let mut current = self.clone();
        let mut stripped = 0;
        loop {
            let rad = current.radical();
            if rad.is_zero() || current.dim() == 0 {
                // A radical component lies inside the radical.
                return (current, stripped);
            }
            let d = current.decompose().expect("radical is nonzero");
            let space = cohom::cohomology(&d.base);
            let class_rows: Vec<Vec<FieldElement>> = d
                .theta
                .components()
                .iter()
                .map(|f| space.class_coords(f))
                .collect();
            let m = class_rows.len();
            let classes = Subspace::from_vectors(space.h2_dim(), current.field, class_rows);
            let rank = classes.dim();
            if rank == m {
                // Classes independent: no radical component (Lemma-level
                // criterion), and none can hide in the base side either
                // since the component must sit inside rad(g_θ) = W.
                return (cohom::build_extension(&d.base, &d.theta), stripped);
            }
            // Replace θ by an independent set spanning the same classes;
            // the discarded coordinates split off as radical components.
            let lifted: Vec<BilinearForm> = (0..rank)
                .map(|r| space.lift(classes.basis().row(r)))
                .collect();
            stripped += m - rank;
            current = cohom::build_extension(&d.base, &Cocycle::new(lifted));
        }
    }

    /// Parses the `.bp` text format.
    pub fn parse(text: &str) -> Result<BilinearPair, PairError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, raw)| {
                let stripped = match raw.find('#') {
                    Some(pos) => &raw[..pos],
                    None => raw,
                };
                (no + 1, stripped.trim())
            })
            .filter(|(_, l)| !l.is_empty());

        let (field_line_no, field_line) = lines.next().ok_or(PairError::Syntax {
            line: 0,
            message: "missing field line".into(),
        })?;
        let field = parse_field_line(field_line_no, field_line)?;

        let (dim_line_no, dim_line) = lines.next().ok_or(PairError::Syntax {
            line: field_line_no,
            message: "missing dim line".into(),
        })?;
        let dim = parse_dim_line(dim_line_no, dim_line)?;

        let mut pair = BilinearPair::zero(dim, field);
        let mut seen = vec![false; dim * dim];
        for (no, line) in lines {
            let (i, j, terms) = parse_product_line(no, line, dim, field)?;
            if seen[i * dim + j] {
                return Err(PairError::DuplicateProduct { line: no, i: i + 1, j: j + 1 });
            }
            seen[i * dim + j] = true;
            for (coef, k) in terms {
                let updated = pair.get(i, j, k) + &coef;
                pair.set(i, j, k, updated);
            }
        }
        Ok(pair)
    }

    /// Serializes to canonical `.bp` text; `parse ∘ serialize` is the
    /// identity on canonical form.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match self.field {
            FieldDescriptor::Prime(p) => writeln!(out, "field p={p}").unwrap(),
            FieldDescriptor::Rationals => writeln!(out, "field rational").unwrap(),
        }
        writeln!(out, "dim {}", self.dim).unwrap();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.product_of_basis(i, j);
                if prod.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let terms: Vec<String> = prod
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| format!("{v}*e{}", k + 1))
                    .collect();
                writeln!(out, "e{}*e{} = {}", i + 1, j + 1, terms.join(" + ")).unwrap();
            }
        }
        out
    }
}

fn parse_field_line(no: usize, line: &str) -> Result<FieldDescriptor, PairError> {
    let rest = line.strip_prefix("field").ok_or_else(|| PairError::Syntax {
        line: no,
        message: format!("expected `field ...`, found `{line}`"),
    })?;
    let rest = rest.trim();
    if rest == "rational" {
        return Ok(FieldDescriptor::rationals());
    }
    if let Some(p) = rest.strip_prefix("p=") {
        let p: u64 = p.trim().parse().map_err(|_| PairError::Syntax {
            line: no,
            message: format!("invalid modulus `{p}`"),
        })?;
        return FieldDescriptor::prime(p).map_err(PairError::BadField);
    }
    Err(PairError::Syntax {
        line: no,
        message: format!("expected `field p=<prime>` or `field rational`, found `{line}`"),
    })
}

fn parse_dim_line(no: usize, line: &str) -> Result<usize, PairError> {
    let rest = line.strip_prefix("dim").ok_or_else(|| PairError::Syntax {
        line: no,
        message: format!("expected `dim <n>`, found `{line}`"),
    })?;
    rest.trim().parse().map_err(|_| PairError::Syntax {
        line: no,
        message: format!("invalid dimension `{}`", rest.trim()),
    })
}

fn parse_basis_index(no: usize, tok: &str, dim: usize) -> Result<usize, PairError> {
    let idx_str = tok.strip_prefix('e').ok_or_else(|| PairError::Syntax {
        line: no,
        message: format!("expected basis vector `e<i>`, found `{tok}`"),
    })?;
    let idx: usize = idx_str.trim().parse().map_err(|_| PairError::Syntax {
        line: no,
        message: format!("invalid basis index `{tok}`"),
    })?;
    if idx == 0 || idx > dim {
        return Err(PairError::IndexOutOfRange { line: no, index: idx, dim });
    }
    Ok(idx - 1)
}

fn parse_coefficient(
    no: usize,
    tok: &str,
    field: FieldDescriptor,
) -> Result<FieldElement, PairError> {
    let bad = |message: String| PairError::Syntax { line: no, message };
    let tok = tok.trim();
    if let Some((num, den)) = tok.split_once('/') {
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid numerator `{num}`")))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid denominator `{den}`")))?;
        return field
            .from_ratio(num, den)
            .map_err(|e| bad(format!("bad coefficient `{tok}`: {e}")));
    }
    let n: i64 = tok
        .parse()
        .map_err(|_| bad(format!("invalid coefficient `{tok}`")))?;
    Ok(field.from_integer(n))
}

type ProductTerms = Vec<(FieldElement, usize)>;

fn parse_product_line(
    no: usize,
    line: &str,
    dim: usize,
    field: FieldDescriptor,
) -> Result<(usize, usize, ProductTerms), PairError> {
    let bad = |message: String| PairError::Syntax { line: no, message };
    let (lhs, rhs) = line
        .split_once('=')
        .ok_or_else(|| bad(format!("expected `e<i>*e<j> = ...`, found `{line}`")))?;
    let (ei, ej) = lhs
        .trim()
        .split_once('*')
        .ok_or_else(|| bad(format!("invalid product left-hand side `{}`", lhs.trim())))?;
    let i = parse_basis_index(no, ei.trim(), dim)?;
    let j = parse_basis_index(no, ej.trim(), dim)?;
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok((i, j, Vec::new()));
    }
    let mut terms = Vec::new();
    for term in rhs.split('+') {
        let term = term.trim();
        let (coef_str, ek) = term
            .rsplit_once('*')
            .ok_or_else(|| bad(format!("expected `<coef>*e<k>`, found `{term}`")))?;
        let k = parse_basis_index(no, ek.trim(), dim)?;
        let coef = parse_coefficient(no, coef_str, field)?;
        terms.push((coef, k));
    }
    Ok((i, j, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f7() -> FieldDescriptor {
        FieldDescriptor::prime(7).unwrap()
    }

    /// e1e1 = e2 on dim 2.
    fn a3(field: FieldDescriptor) -> BilinearPair {
        let mut p = BilinearPair::zero(2, field);
        p.set(0, 0, 1, field.one());
        p
    }

    /// e1e1=e2, e2e2=e3 on dim 3.
    fn a3_ext(field: FieldDescriptor) -> BilinearPair {
        let mut p = BilinearPair::zero(3, field);
        p.set(0, 0, 1, field.one());
        p.set(1, 1, 2, field.one());
        p
    }

    #[test]
    fn parse_a3() {
        let p = BilinearPair::parse("field p=7\ndim 2\ne1*e1 = 1*e2").unwrap();
        assert_eq!(p, a3(f7()));
    }

    #[test]
    fn parse_zero_pair() {
        let p = BilinearPair::parse("field p=5\ndim 2").unwrap();
        assert_eq!(p, BilinearPair::zero(2, FieldDescriptor::prime(5).unwrap()));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BilinearPair::parse("field p=7\ndim 2\ne1*e3 = 1*e1"),
            Err(PairError::IndexOutOfRange { index: 3, dim: 2, .. })
        ));
        assert!(matches!(
            BilinearPair::parse("field p=7\ndim 2\ne1*e1 = 1*e2\ne1*e1 = 1*e1"),
            Err(PairError::DuplicateProduct { i: 1, j: 1, .. })
        ));
        assert!(matches!(
            BilinearPair::parse("field p=6\ndim 2"),
            Err(PairError::BadField(ExactError::NotPrime(6)))
        ));
        assert!(BilinearPair::parse("dim 2").is_err());
    }

    #[test]
    fn serialize_roundtrip() {
        for p in [a3(f7()), a3_ext(f7()), BilinearPair::zero(2, f7())] {
            assert_eq!(BilinearPair::parse(&p.serialize()).unwrap(), p);
        }
        let q = FieldDescriptor::rationals();
        let mut r = BilinearPair::zero(2, q);
        r.set(0, 1, 0, q.from_ratio(-3, 2).unwrap());
        assert_eq!(BilinearPair::parse(&r.serialize()).unwrap(), r);
    }

    #[test]
    fn radical_examples() {
        let field = f7();
        let rad = a3(field).radical();
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains(&[field.zero(), field.one()]));
        assert_eq!(BilinearPair::zero(2, field).radical().dim(), 2);
        let rad3 = a3_ext(field).radical();
        assert_eq!(rad3.dim(), 1);
        assert!(rad3.contains(&[field.zero(), field.zero(), field.one()]));
    }

    #[test]
    fn radical_oracle_by_direct_search() {
        // Independent oracle: over F_2 check annihilation vector by vector.
        let field = FieldDescriptor::prime(2).unwrap();
        let p = a3_ext(field);
        let rad = p.radical();
        for bits in 0..8u32 {
            let v: Vec<FieldElement> = (0..3)
                .map(|t| field.from_integer(((bits >> t) & 1) as i64))
                .collect();
            let zero_basis = |u: &[FieldElement]| -> bool {
                (0..3).all(|i| {
                    let mut e = vec![field.zero(); 3];
                    e[i] = field.one();
                    p.product(&e, u).iter().all(|x| x.is_zero())
                        && p.product(u, &e).iter().all(|x| x.is_zero())
                })
            };
            assert_eq!(rad.contains(&v), zero_basis(&v), "vector {bits:03b}");
        }
    }

    #[test]
    fn product_space_examples() {
        assert_eq!(a3(f7()).product_space().dim(), 1);
        assert!(BilinearPair::zero(2, f7()).product_space().is_zero());
        let a1 = catalog::instantiate("A1", &[f7().from_integer(2)], f7()).unwrap();
        assert_eq!(a1.product_space().dim(), 2);
    }

    #[test]
    fn change_of_basis_identity_and_involution() {
        let p = a3_ext(f7());
        let id = Matrix::identity(3, f7());
        assert_eq!(p.apply_change_of_basis(&id).unwrap(), p);
        let phi = Matrix::from_rows(
            f7(),
            vec![
                vec![f7().from_integer(2), f7().zero(), f7().one()],
                vec![f7().one(), f7().one(), f7().zero()],
                vec![f7().zero(), f7().one(), f7().from_integer(4)],
            ],
        );
        let moved = p.apply_change_of_basis(&phi).unwrap();
        let back = moved.apply_change_of_basis(&phi.inverse().unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn change_of_basis_a3_stabilizer() {
        // diag(x, x²) stabilizes A₃.
        let field = f7();
        let x = field.from_integer(3);
        let phi = Matrix::from_rows(
            field,
            vec![
                vec![x.clone(), field.zero()],
                vec![field.zero(), &x * &x],
            ],
        );
        assert_eq!(a3(field).apply_change_of_basis(&phi).unwrap(), a3(field));
    }

    #[test]
    fn opposite_involutive() {
        let p = a3_ext(f7());
        assert_eq!(p.opposite().opposite(), p);
        assert_eq!(p.opposite(), p); // commutative example
        let mut nc = BilinearPair::zero(2, f7());
        nc.set(0, 1, 0, f7().one());
        assert_ne!(nc.opposite(), nc);
        assert_eq!(nc.opposite().radical(), nc.radical());
    }

    #[test]
    fn add_radical_components_examples() {
        let p = a3(f7());
        assert_eq!(p.add_radical_components(0), p);
        let grown = p.add_radical_components(1);
        assert_eq!(grown.dim(), 3);
        assert_eq!(grown.radical().dim(), 2);
        let z = BilinearPair::zero(2, f7()).add_radical_components(2);
        assert_eq!(z, BilinearPair::zero(4, f7()));
    }

    #[test]
    fn quotient_examples() {
        let q = a3_ext(f7()).quotient_by_radical();
        assert_eq!(q, a3(f7()));
        assert_eq!(BilinearPair::zero(2, f7()).quotient_by_radical().dim(), 0);
        let no_rad = catalog::instantiate("E4", &[], f7()).unwrap();
        assert_eq!(no_rad.quotient_by_radical(), no_rad);
    }

    #[test]
    fn decompose_a3_ext() {
        let d = a3_ext(f7()).decompose().unwrap();
        assert_eq!(d.base, a3(f7()));
        assert_eq!(d.theta.m(), 1);
        let mut expected = BilinearForm::zero(2, f7());
        expected.set(1, 1, f7().one());
        assert_eq!(d.theta.components()[0], expected);
        // Witnessed round trip.
        let rebuilt = cohom::build_extension(&d.base, &d.theta);
        let moved = a3_ext(f7()).apply_change_of_basis(&d.witness()).unwrap();
        assert_eq!(moved, rebuilt);
    }

    #[test]
    fn decompose_n2_44() {
        // e1e2=e3, e2e1=e4: base N₂ with θ = (Δ₁₂, Δ₂₁).
        let field = f7();
        let mut p = BilinearPair::zero(4, field);
        p.set(0, 1, 2, field.one());
        p.set(1, 0, 3, field.one());
        let d = p.decompose().unwrap();
        assert_eq!(d.base, BilinearPair::zero(2, field));
        assert_eq!(d.theta.m(), 2);
        let mut d12 = BilinearForm::zero(2, field);
        d12.set(0, 1, field.one());
        let mut d21 = BilinearForm::zero(2, field);
        d21.set(1, 0, field.one());
        assert_eq!(d.theta.components(), &[d12, d21]);
    }

    #[test]
    fn decompose_rejects_zero_radical() {
        let e4 = catalog::instantiate("E4", &[], f7()).unwrap();
        assert_eq!(e4.decompose().err(), Some(PairError::ZeroRadical));
    }

    #[test]
    fn strip_examples() {
        let (core, t) = a3(f7()).add_radical_components(2).strip_radical_components();
        assert_eq!((core, t), (a3(f7()), 2));
        let (core, t) = a3_ext(f7()).strip_radical_components();
        assert_eq!((core, t), (a3_ext(f7()), 0));
        let (core, t) = BilinearPair::zero(3, f7()).strip_radical_components();
        assert_eq!(core.dim(), 0);
        assert_eq!(t, 3);
        // Idempotent on the core.
        let (core2, t2) = a3_ext(f7()).add_radical_components(1).strip_radical_components();
        let (core3, t3) = core2.strip_radical_components();
        assert_eq!(t2, 1);
        assert_eq!((core3, t3), (core2, 0));
    }
}
