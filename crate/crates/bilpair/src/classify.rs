//! Orbit classification of radical extensions: enumerate the admissible
//! s-dimensional subspaces of H²(g), partition them under the action of
//! Aut(g), and read off one extension per orbit.
//!
//! Two component-free extensions of the same base by radicals of equal
//! dimension are equivalent exactly when their spans of cocycle classes
//! lie in one automorphism orbit, so the orbit representatives enumerate
//! the extensions up to equivalence.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cohom::{self, Cocycle, CohomologySpace};
use crate::equiv::{self, AutomorphismGroup, Budget, EquivError};
use crate::exactlin::enumerate::grassmannian;
use crate::exactlin::field::FieldElement;
use crate::exactlin::matrix::Matrix;
use crate::exactlin::subspace::Subspace;
use crate::exactlin::ExactError;
use crate::pair::BilinearPair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("enumeration requires a finite base field")]
    InfiniteField,
    #[error("s must satisfy 1 ≤ s ≤ dim H² = {h2_dim}, got {s}")]
    SOutOfRange { s: usize, h2_dim: usize },
    #[error("classification requires bases of dimension 2, got {0}")]
    BaseDimension(usize),
    #[error("no bases supplied")]
    NoBases,
    #[error("bases live over different fields")]
    MixedFields,
    #[error("target dimension {0} leaves no room for a 2-dimensional base")]
    TargetTooSmall(usize),
    #[error(transparent)]
    Equiv(#[from] EquivError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An admissible point of T_s(g): an s-dimensional subspace of H² whose
/// lifted basis cocycle meets the radical of g trivially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsElement {
    pub s: usize,
    /// The subspace of H² in the fixed representative coordinates.
    pub subspace: Subspace,
    /// The lifted basis forms certifying rad(g) ∩ rad(θ) = 0.
    pub certificate: Cocycle,
}

/// One automorphism orbit on T_s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: TsElement,
    pub size: usize,
}

/// The full orbit partition of T_s(g).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub base: BilinearPair,
    pub s: usize,
    pub orbits: Vec<Orbit>,
    /// |T_s(g)| — the orbit sizes sum to this.
    pub total: usize,
}

fn lift_cocycle(space: &CohomologySpace, subspace: &Subspace) -> Cocycle {
    let forms = (0..subspace.dim())
        .map(|r| space.lift(subspace.basis().row(r)))
        .collect();
    Cocycle::new(forms)
}

fn admissible(base: &BilinearPair, theta: &Cocycle) -> bool {
    base.radical()
        .intersect(&cohom::cocycle_radical(theta))
        .expect("same ambient dimension")
        .is_zero()
}

/// Enumerates T_s(g) in the deterministic Grassmannian order.
pub fn enumerate_ts(
    base: &BilinearPair,
    space: &CohomologySpace,
    s: usize,
) -> Result<Vec<TsElement>, ClassifyError> {
    if base.field().order().is_none() {
        return Err(ClassifyError::InfiniteField);
    }
    if s == 0 || s > space.h2_dim() {
        return Err(ClassifyError::SOutOfRange { s, h2_dim: space.h2_dim() });
    }
    let mut out = Vec::new();
    for subspace in grassmannian(space.h2_dim(), s, base.field())? {
        let certificate = lift_cocycle(space, &subspace);
        if admissible(base, &certificate) {
            #[cfg(debug_assertions)]
            {
                // The filter is representative-independent: shifting every
                // component by a coboundary leaves rad(g) ∩ rad(θ) intact,
                // because coboundaries vanish whenever one argument lies
                // in rad(g).
                let n = base.dim();
                let h: Vec<FieldElement> = vec![base.field().one(); n];
                let dh = cohom::coboundary(base, &h);
                let shifted = Cocycle::new(
                    certificate
                        .components()
                        .iter()
                        .map(|f| f.add(&dh))
                        .collect(),
                );
                let lhs = base
                    .radical()
                    .intersect(&cohom::cocycle_radical(&certificate))
                    .expect("same ambient");
                let rhs = base
                    .radical()
                    .intersect(&cohom::cocycle_radical(&shifted))
                    .expect("same ambient");
                debug_assert_eq!(lhs, rhs);
            }
            out.push(TsElement { s, subspace, certificate });
        }
    }
    Ok(out)
}

/// Order key for deterministic orbit representatives: pivot columns, then
/// the flattened RREF basis entries.
fn subspace_key(s: &Subspace) -> (Vec<usize>, Vec<FieldElement>) {
    let flat = (0..s.dim()).flat_map(|r| s.basis().row_vec(r)).collect();
    (s.pivots().to_vec(), flat)
}

/// The image of a T_s point under a base automorphism: act on the lifted
/// basis forms and take the span of the resulting classes.
fn act_on_subspace(space: &CohomologySpace, phi: &Matrix, element: &TsElement) -> Subspace {
    let rows: Vec<Vec<FieldElement>> = element
        .certificate
        .components()
        .iter()
        .map(|f| space.class_coords(&cohom::act(phi, f)))
        .collect();
    Subspace::from_vectors(space.h2_dim(), space.base().field(), rows)
}

/// The canonical (order-minimal) subspace in the orbit of one element —
/// a complete orbit invariant under the given group.
pub fn orbit_canonical_rep(
    space: &CohomologySpace,
    aut: &AutomorphismGroup,
    element: &TsElement,
) -> Subspace {
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![element.subspace.clone()];
    seen.insert(element.subspace.clone());
    while let Some(cur) = queue.pop() {
        let cur_elem = TsElement {
            s: element.s,
            certificate: lift_cocycle(space, &cur),
            subspace: cur,
        };
        for phi in aut.elements() {
            let image = act_on_subspace(space, phi, &cur_elem);
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    seen.into_iter().min_by_key(subspace_key).expect("orbit is nonempty")
}

/// Partitions T_s(g) into Aut(g)-orbits by breadth-first closure,
/// choosing the order-minimal subspace of each orbit as representative.
pub fn orbit_partition(
    base: &BilinearPair,
    space: &CohomologySpace,
    s: usize,
    aut: &AutomorphismGroup,
) -> Result<OrbitReport, ClassifyError> {
    let elements = enumerate_ts(base, space, s)?;
    let total = elements.len();
    let mut index_of = std::collections::HashMap::new();
    for (i, e) in elements.iter().enumerate() {
        index_of.insert(e.subspace.clone(), i);
    }
    let mut seen = vec![false; total];
    let mut orbits = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut queue = vec![start];
        seen[start] = true;
        let mut members = vec![start];
        while let Some(cur) = queue.pop() {
            for phi in aut.elements() {
                let image = act_on_subspace(space, phi, &elements[cur]);
                // Stability: the action never leaves T_s.
                let &idx = index_of
                    .get(&image)
                    .expect("automorphisms permute the admissible subspaces");
                if !seen[idx] {
                    seen[idx] = true;
                    queue.push(idx);
                    members.push(idx);
                }
            }
        }
        let rep = *members
            .iter()
            .min_by_key(|&&i| subspace_key(&elements[i].subspace))
            .expect("orbit is nonempty");
        orbits.push(Orbit {
            representative: elements[rep].clone(),
            size: members.len(),
        });
    }
    orbits.sort_by_key(|o| subspace_key(&o.representative.subspace));
    debug_assert_eq!(orbits.iter().map(|o| o.size).sum::<usize>(), total);
    Ok(OrbitReport { base: base.clone(), s, orbits, total })
}

impl OrbitReport {
    /// One extension pair per orbit, built from the representatives.
    pub fn representative_pairs(&self) -> Vec<BilinearPair> {
        self.orbits
            .iter()
            .map(|o| cohom::build_extension(&self.base, &o.representative.certificate))
            .collect()
    }

    /// Tab-separated summary with a caller-chosen base label. Columns:
    /// base, s, orbit_index, orbit_size, representative_subspace_rref
    /// (basis rows joined by `;`, entries by `,`).
    pub fn to_tsv(&self, base_label: &str) -> String {
        let mut out = String::new();
        writeln!(out, "base\ts\torbit_index\torbit_size\trepresentative_subspace_rref").unwrap();
        for (i, o) in self.orbits.iter().enumerate() {
            let sub = &o.representative.subspace;
            let rows: Vec<String> = (0..sub.dim())
                .map(|r| {
                    sub.basis()
                        .row(r)
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            writeln!(out, "{base_label}\t{}\t{i}\t{}\t{}", self.s, o.size, rows.join(";")).unwrap();
        }
        out
    }
}

/// One representative extension per orbit of T_s(base); rejects s = 0 and
/// returns the empty list when s exceeds dim H² (T_s is empty there).
pub fn representatives(base: &BilinearPair, s: usize) -> Result<Vec<BilinearPair>, ClassifyError> {
    if s == 0 {
        return Err(ClassifyError::SOutOfRange { s, h2_dim: usize::MAX });
    }
    let space = cohom::cohomology(base);
    if s > space.h2_dim() {
        return Ok(Vec::new());
    }
    let aut = equiv::automorphism_group(base)?;
    let report = orbit_partition(base, &space, s, &aut)?;
    let reps = report.representative_pairs();
    debug_assert!(reps.iter().all(|p| p.radical().dim() == s));
    Ok(reps)
}

/// Orbit counts and deduplicated representatives for one supplied base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerBaseCount {
    pub base: BilinearPair,
    pub orbit_count: usize,
}

/// Classification of the component-free pairs of dimension `n` with
/// radical codimension 2 arising from a supplied list of 2-dim bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimTwoReport {
    pub total_dim: usize,
    pub s: usize,
    pub per_base: Vec<PerBaseCount>,
    /// Pairwise inequivalent representatives, merged across bases.
    pub classes: Vec<BilinearPair>,
    /// Set when the dimension forces radical components and the result is
    /// empty by a counting argument rather than by search.
    pub diagnostic: Option<String>,
}

/// Drives the orbit classification over every supplied 2-dimensional base
/// with s = n − 2 and merges the outputs, deduplicating by brute-force
/// equivalence. The result is complete for pairs whose base quotient is
/// equivalent to one of the supplied bases — no completeness over the
/// field is claimed beyond the supplied list.
pub fn classify_codim2(
    bases: &[BilinearPair],
    total_dim: usize,
) -> Result<CodimTwoReport, ClassifyError> {
    if bases.is_empty() {
        return Err(ClassifyError::NoBases);
    }
    for b in bases {
        if b.dim() != 2 {
            return Err(ClassifyError::BaseDimension(b.dim()));
        }
        if b.field() != bases[0].field() {
            return Err(ClassifyError::MixedFields);
        }
    }
    if total_dim < 3 {
        return Err(ClassifyError::TargetTooSmall(total_dim));
    }
    let s = total_dim - 2;
    if s > 4 {
        // dim H² ≤ 4 for a 2-dim base, so T_s is empty: every pair of this
        // dimension with radical codimension 2 splits off components.
        return Ok(CodimTwoReport {
            total_dim,
            s,
            per_base: bases
                .iter()
                .map(|b| PerBaseCount { base: b.clone(), orbit_count: 0 })
                .collect(),
            classes: Vec::new(),
            diagnostic: Some(format!(
                "no component-free pairs in dimension {total_dim}: a 2-dimensional base \
                 admits at most 4 independent cocycle classes, so at least {} radical \
                 components split off",
                s - 4
            )),
        });
    }
    let mut per_base = Vec::new();
    let mut classes: Vec<BilinearPair> = Vec::new();
    for base in bases {
        let space = cohom::cohomology(base);
        let reps = if s > space.h2_dim() {
            Vec::new()
        } else {
            let aut = equiv::automorphism_group(base)?;
            orbit_partition(base, &space, s, &aut)?.representative_pairs()
        };
        per_base.push(PerBaseCount { base: base.clone(), orbit_count: reps.len() });
        for rep in reps {
            let duplicate = classes.iter().any(|known| {
                equiv::are_equivalent_bruteforce(known, &rep, Budget::Unlimited)
                    .expect("finite field")
                    .is_some()
            });
            if !duplicate {
                classes.push(rep);
            }
        }
    }
    Ok(CodimTwoReport {
        total_dim,
        s,
        per_base,
        classes,
        diagnostic: None,
    })
}
