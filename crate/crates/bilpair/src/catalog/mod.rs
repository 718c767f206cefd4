//! The built-in catalog: parameterized families of bilinear pairs in
//! dimensions 2–6 with references from each family to the 2-dimensional
//! base it extends, plus transcribed coboundary bases, cohomology bases
//! and orbit lists, and a verification harness that replays all of it
//! over a caller-chosen field.

pub mod expr;
pub mod parse;

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{self, ClassifyError, TsElement};
use crate::cohom::{self, BilinearForm, Cocycle};
use crate::equiv::{self, Budget, EquivError};
use crate::exactlin::field::{FieldDescriptor, FieldElement};
use crate::exactlin::subspace::Subspace;
use crate::pair::BilinearPair;

use expr::ExprError;
use parse::{Constraint, FormTemplate};
pub use parse::{CatalogEntry, Fixture, FixtureKind, Table};

/// Errors from catalog lookup, instantiation and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("`{id}` takes {expected} parameter value(s), got {got}")]
    WrongParamCount { id: String, expected: usize, got: usize },
    #[error("`{id}` requires {constraint}")]
    ConstraintViolated { id: String, constraint: String },
    #[error("`{id}` is undefined in characteristic {characteristic}")]
    CharacteristicExcluded { id: String, characteristic: u64 },
    #[error("parameter values for `{id}` live over the wrong field")]
    ValueFieldMismatch { id: String },
    #[error("`{id}`: {source}")]
    Expr { id: String, source: ExprError },
    #[error(transparent)]
    Equiv(#[from] EquivError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

struct Registry {
    entries: Vec<CatalogEntry>,
    fixtures: Vec<Fixture>,
    index: HashMap<String, usize>,
}

fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let sources = [
            include_str!("../../data/table4.bpt"),
            include_str!("../../data/table1.bpt"),
            include_str!("../../data/table2.bpt"),
            include_str!("../../data/table3.bpt"),
            include_str!("../../data/fixtures.bpt"),
        ];
        let mut entries = Vec::new();
        let mut fixtures = Vec::new();
        for src in sources {
            let (mut e, mut f) = parse::parse_bpt(src).expect("compiled-in catalog data parses");
            entries.append(&mut e);
            fixtures.append(&mut f);
        }
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            let clash = index.insert(e.id.clone(), i);
            assert!(clash.is_none(), "duplicate catalog id {}", e.id);
        }
        let count_of = |t: Table| entries.iter().filter(|e| e.table == t).count();
        assert_eq!(count_of(Table::Four), 18, "table 4 family count");
        assert_eq!(count_of(Table::One), 68, "table 1 family count");
        assert_eq!(count_of(Table::Two), 53, "table 2 family count");
        assert_eq!(count_of(Table::Three), 12, "table 3 family count");
        assert_eq!(count_of(Table::Theorem), 1, "theorem family count");
        for f in &fixtures {
            assert!(index.contains_key(&f.entry_id), "fixture for unknown id {}", f.entry_id);
        }
        Registry { entries, fixtures, index }
    })
}

/// All catalog entries, tables 1–4 plus the theorem family.
pub fn entries() -> &'static [CatalogEntry] {
    &registry().entries
}

/// Looks up one entry by id (`A3`, `A_42`, ...).
pub fn entry(id: &str) -> Option<&'static CatalogEntry> {
    let reg = registry();
    reg.index.get(id).map(|&i| &reg.entries[i])
}

/// All transcribed fixtures.
pub fn fixtures() -> &'static [Fixture] {
    &registry().fixtures
}

/// The entries of one table, in catalog order.
pub fn entries_in_table(table: Table) -> Vec<&'static CatalogEntry> {
    entries().iter().filter(|e| e.table == table).collect()
}

fn env_of(e: &CatalogEntry, values: &[FieldElement]) -> HashMap<String, FieldElement> {
    e.params
        .iter()
        .map(|p| p.name.clone())
        .zip(values.iter().cloned())
        .collect()
}

/// Whether every constraint (each a disjunction of atoms) holds; an
/// evaluation error counts as a violation for filtering purposes.
fn satisfies(
    constraints: &[Constraint],
    field: FieldDescriptor,
    env: &HashMap<String, FieldElement>,
) -> Result<bool, ExprError> {
    for c in constraints {
        let mut any = false;
        for atom in &c.atoms {
            let l = atom.lhs.eval(field, env)?;
            let r = atom.rhs.eval(field, env)?;
            if (l == r) == atom.equal {
                any = true;
                break;
            }
        }
        if !any {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the pair of entry `id` at the given parameter values, enforcing
/// arity, characteristic exclusions and the entry's inequation constraints.
pub fn instantiate(
    id: &str,
    values: &[FieldElement],
    field: FieldDescriptor,
) -> Result<BilinearPair, CatalogError> {
    let e = entry(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    if values.len() != e.params.len() {
        return Err(CatalogError::WrongParamCount {
            id: id.to_string(),
            expected: e.params.len(),
            got: values.len(),
        });
    }
    let p = field.characteristic();
    if p > 0 && e.char_exclusions.contains(&p) {
        return Err(CatalogError::CharacteristicExcluded { id: id.to_string(), characteristic: p });
    }
    if values.iter().any(|v| v.field() != field) {
        return Err(CatalogError::ValueFieldMismatch { id: id.to_string() });
    }
    let env = env_of(e, values);
    for c in &e.constraints {
        let ok = satisfies(std::slice::from_ref(c), field, &env)
            .map_err(|source| CatalogError::Expr { id: id.to_string(), source })?;
        if !ok {
            return Err(CatalogError::ConstraintViolated {
                id: id.to_string(),
                constraint: c.to_string(),
            });
        }
    }
    let mut pair = BilinearPair::zero(e.dim, field);
    for rule in &e.template {
        for (coef, k) in &rule.terms {
            let v = coef
                .eval(field, &env)
                .map_err(|source| CatalogError::Expr { id: id.to_string(), source })?;
            let updated = pair.get(rule.i, rule.j, *k) + &v;
            pair.set(rule.i, rule.j, *k, updated);
        }
    }
    Ok(pair)
}

/// The instantiated 2-dimensional base an entry refers to, with its base
/// arguments evaluated at the entry's parameter values; `None` when the
/// entry declares no base (the table-4 families themselves).
pub fn base_reference_instance(
    id: &str,
    values: &[FieldElement],
    field: FieldDescriptor,
) -> Result<Option<(String, BilinearPair)>, CatalogError> {
    let e = entry(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let Some(base_ref) = &e.base_ref else {
        return Ok(None);
    };
    let env = env_of(e, values);
    let args = base_ref
        .args
        .iter()
        .map(|a| a.eval(field, &env))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|source| CatalogError::Expr { id: id.to_string(), source })?;
    let base = instantiate(&base_ref.id, &args, field)?;
    Ok(Some((base_ref.id.clone(), base)))
}

/// Rational candidates for parameter sweeps over an infinite field.
fn rational_candidates(field: FieldDescriptor) -> Vec<FieldElement> {
    [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5]
        .iter()
        .map(|&n| field.from_integer(n))
        .collect()
}

/// Deterministic admissible parameter assignments for one entry: the first
/// `samples` tuples (lexicographic over residues) at which the entry, its
/// base reference and the extra guards all hold. Falls back to seeded
/// random draws when the tuple space is too large to enumerate.
fn sample_assignments_guarded(
    id: &str,
    field: FieldDescriptor,
    samples: usize,
    seed: u64,
    extra: &[Constraint],
) -> Result<Vec<Vec<FieldElement>>, CatalogError> {
    let e = entry(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let k = e.params.len();
    let admissible = |vals: &[FieldElement]| -> bool {
        if instantiate(id, vals, field).is_err() {
            return false;
        }
        if base_reference_instance(id, vals, field).is_err() {
            return false;
        }
        let env = env_of(e, vals);
        satisfies(extra, field, &env).unwrap_or(false)
    };
    if samples == 0 {
        return Ok(Vec::new());
    }
    if k == 0 {
        return Ok(if admissible(&[]) { vec![Vec::new()] } else { Vec::new() });
    }
    let candidates: Vec<FieldElement> = match field {
        FieldDescriptor::Prime(_) => field.elements().expect("finite field").collect(),
        FieldDescriptor::Rationals => rational_candidates(field),
    };
    let space: u128 = (candidates.len() as u128).pow(k as u32);
    if space <= 1 << 14 {
        let mut out = Vec::new();
        for tuple in (0..k).map(|_| candidates.iter().cloned()).multi_cartesian_product() {
            if admissible(&tuple) {
                out.push(tuple);
                if out.len() == samples {
                    break;
                }
            }
        }
        return Ok(out);
    }
    let FieldDescriptor::Prime(p) = field else { unreachable!("rational space is small") };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < samples && attempts < samples.saturating_mul(500) {
        attempts += 1;
        let raw: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if !seen.insert(raw.clone()) {
            continue;
        }
        let tuple: Vec<FieldElement> = raw.iter().map(|&v| field.from_integer(v as i64)).collect();
        if admissible(&tuple) {
            out.push(tuple);
        }
    }
    Ok(out)
}

/// Admissible parameter assignments for one entry (no extra guards).
pub fn sample_assignments(
    id: &str,
    field: FieldDescriptor,
    samples: usize,
    seed: u64,
) -> Result<Vec<Vec<FieldElement>>, CatalogError> {
    sample_assignments_guarded(id, field, samples, seed, &[])
}

/// One verified instantiation of an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub assignment: Vec<FieldElement>,
    /// dim rad = dim − 2; `None` for the 2-dimensional base families.
    pub radical_ok: Option<bool>,
    /// Quotient by the radical equivalent to the referenced base instance.
    pub base_ok: Option<bool>,
    /// Serialize/parse identity, plus the explicit decomposition witness
    /// carrying the pair onto its rebuilt extension.
    pub roundtrip_ok: bool,
}

impl EntryCheck {
    pub fn ok(&self) -> bool {
        self.radical_ok.unwrap_or(true) && self.base_ok.unwrap_or(true) && self.roundtrip_ok
    }
}

/// Verification outcome for one entry over one field; a report, never a
/// panic — failed checks are recorded as `false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub entry_id: String,
    pub field: FieldDescriptor,
    /// Set when nothing could be checked (excluded characteristic, or no
    /// admissible parameter assignment).
    pub skipped: Option<String>,
    pub checks: Vec<EntryCheck>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(EntryCheck::ok)
    }
}

/// Replays one entry over a field: instantiates up to `samples` admissible
/// parameter assignments and checks the radical dimension, base recovery
/// and the decomposition round trip on each.
pub fn verify_entry(
    id: &str,
    field: FieldDescriptor,
    samples: usize,
    seed: u64,
) -> Result<EntryReport, CatalogError> {
    let e = entry(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let p = field.characteristic();
    if p > 0 && e.char_exclusions.contains(&p) {
        return Ok(EntryReport {
            entry_id: id.to_string(),
            field,
            skipped: Some(format!("undefined in characteristic {p}")),
            checks: Vec::new(),
        });
    }
    let assignments = sample_assignments(id, field, samples, seed)?;
    if assignments.is_empty() {
        return Ok(EntryReport {
            entry_id: id.to_string(),
            field,
            skipped: Some("no admissible parameter assignment found".to_string()),
            checks: Vec::new(),
        });
    }
    let mut checks = Vec::new();
    for assignment in assignments {
        let pair = instantiate(id, &assignment, field)?;
        let mut roundtrip_ok = BilinearPair::parse(&pair.serialize()).as_ref() == Ok(&pair);
        let (radical_ok, base_ok) = if e.base_ref.is_some() {
            let radical_ok = pair.radical().dim() == e.dim - 2;
            let base_ok = if radical_ok {
                let d = pair.decompose().expect("radical is nonzero");
                let rebuilt = cohom::build_extension(&d.base, &d.theta);
                let moved = pair
                    .apply_change_of_basis(&d.witness())
                    .expect("witness is invertible");
                roundtrip_ok &= moved == rebuilt;
                let (_, base_ref) = base_reference_instance(id, &assignment, field)?
                    .expect("entry declares a base");
                match equiv::are_equivalent_bruteforce(&d.base, &base_ref, Budget::Unlimited) {
                    Ok(witness) => witness.is_some(),
                    Err(EquivError::InfiniteField) => {
                        // Over ℚ fall back to the necessary invariant check.
                        equiv::invariant_fingerprint(&d.base)
                            == equiv::invariant_fingerprint(&base_ref)
                    }
                    Err(err) => return Err(err.into()),
                }
            } else {
                false
            };
            (Some(radical_ok), Some(base_ok))
        } else {
            (None, None)
        };
        checks.push(EntryCheck { assignment, radical_ok, base_ok, roundtrip_ok });
    }
    Ok(EntryReport { entry_id: id.to_string(), field, skipped: None, checks })
}

/// One fixture evaluation at one parameter assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub assignment: Vec<FieldElement>,
    pub ok: bool,
    pub note: Option<String>,
}

/// Verification outcome for one fixture over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub entry_id: String,
    pub kind: FixtureKind,
    /// The guard constraints selecting the covered parameter regime.
    pub guard: String,
    pub skipped: Option<String>,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn eval_form(
    template: &FormTemplate,
    field: FieldDescriptor,
    env: &HashMap<String, FieldElement>,
) -> Result<BilinearForm, ExprError> {
    let mut form = BilinearForm::zero(2, field);
    for (coef, i, j) in &template.terms {
        let v = coef.eval(field, env)?;
        let updated = form.get(*i, *j) + &v;
        form.set(*i, *j, updated);
    }
    Ok(form)
}

fn check_coboundary_fixture(
    fx: &Fixture,
    base: &BilinearPair,
    env: &HashMap<String, FieldElement>,
) -> Result<(bool, Option<String>), ExprError> {
    let field = base.field();
    let actual = cohom::coboundary_space(base);
    let rows: Vec<Vec<FieldElement>> = fx
        .forms
        .iter()
        .map(|t| eval_form(t, field, env).map(|f| f.flat().to_vec()))
        .collect::<Result<_, _>>()?;
    let claimed = Subspace::from_vectors(4, field, rows);
    let ok = claimed == actual && fx.forms.len() == actual.dim();
    let note = (!ok).then(|| {
        format!(
            "transcribed span has dim {}, computed coboundary space has dim {}",
            claimed.dim(),
            actual.dim()
        )
    });
    Ok((ok, note))
}

fn check_h2_fixture(
    fx: &Fixture,
    base: &BilinearPair,
    env: &HashMap<String, FieldElement>,
) -> Result<(bool, Option<String>), ExprError> {
    let field = base.field();
    let space = cohom::cohomology(base);
    let rows: Vec<Vec<FieldElement>> = fx
        .forms
        .iter()
        .map(|t| eval_form(t, field, env).map(|f| space.class_coords(&f)))
        .collect::<Result<_, _>>()?;
    let span = Subspace::from_vectors(space.h2_dim(), field, rows);
    let ok = fx.forms.len() == space.h2_dim() && span.dim() == space.h2_dim();
    let note = (!ok).then(|| {
        format!(
            "{} transcribed classes spanning dim {}, dim H² = {}",
            fx.forms.len(),
            span.dim(),
            space.h2_dim()
        )
    });
    Ok((ok, note))
}

fn check_orbit_fixture(
    fx: &Fixture,
    base: &BilinearPair,
    env: &HashMap<String, FieldElement>,
) -> Result<(bool, Option<String>), CatalogError> {
    let field = base.field();
    let space = cohom::cohomology(base);
    let aut = equiv::automorphism_group(base)?;
    let report = classify::orbit_partition(base, &space, fx.s, &aut)?;
    let actual: HashSet<Subspace> = report
        .orbits
        .iter()
        .map(|o| o.representative.subspace.clone())
        .collect();
    let wrap = |source: ExprError| CatalogError::Expr { id: fx.entry_id.clone(), source };
    let free_tuples: Vec<Vec<FieldElement>> = if fx.free_params.is_empty() {
        vec![Vec::new()]
    } else {
        let values: Vec<FieldElement> = field.elements().expect("finite field").collect();
        (0..fx.free_params.len())
            .map(|_| values.iter().cloned())
            .multi_cartesian_product()
            .collect()
    };
    let mut expected = HashSet::new();
    let mut malformed = Vec::new();
    for tuple in free_tuples {
        let mut env = env.clone();
        for (name, v) in fx.free_params.iter().zip(tuple) {
            env.insert(name.clone(), v);
        }
        for class in &fx.classes {
            let rows: Vec<Vec<FieldElement>> = class
                .iter()
                .map(|t| eval_form(t, field, &env).map(|f| space.class_coords(&f)))
                .collect::<Result<_, _>>()
                .map_err(wrap)?;
            let subspace = Subspace::from_vectors(space.h2_dim(), field, rows);
            if subspace.dim() != fx.s {
                malformed.push(format!(
                    "class spans dim {} instead of s = {}",
                    subspace.dim(),
                    fx.s
                ));
                continue;
            }
            let certificate = Cocycle::new(
                (0..subspace.dim())
                    .map(|r| space.lift(subspace.basis().row(r)))
                    .collect(),
            );
            let element = TsElement { s: fx.s, subspace, certificate };
            expected.insert(classify::orbit_canonical_rep(&space, &aut, &element));
        }
    }
    // Orbit lists are advisory: discrepancies are reported, not failed.
    let mut notes = malformed;
    if expected != actual {
        notes.push(format!(
            "transcribed list yields {} orbit(s), enumeration finds {}",
            expected.len(),
            actual.len()
        ));
    }
    let note = (!notes.is_empty()).then(|| notes.join("; "));
    Ok((true, note))
}

/// Replays every fixture attached to one base family over a field,
/// sampling assignments that satisfy both the entry constraints and the
/// fixture's guards. Orbit-list discrepancies are reported as notes
/// rather than failures; basis fixtures fail on any mismatch.
pub fn verify_fixture(
    entry_id: &str,
    field: FieldDescriptor,
    samples: usize,
) -> Result<Vec<FixtureReport>, CatalogError> {
    let e = entry(entry_id).ok_or_else(|| CatalogError::UnknownId(entry_id.to_string()))?;
    let mut reports = Vec::new();
    for fx in fixtures().iter().filter(|f| f.entry_id == entry_id) {
        let guard = fx
            .constraints
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" and ");
        let p = field.characteristic();
        if p > 0 && e.char_exclusions.contains(&p) {
            reports.push(FixtureReport {
                entry_id: entry_id.to_string(),
                kind: fx.kind,
                guard,
                skipped: Some(format!("undefined in characteristic {p}")),
                checks: Vec::new(),
            });
            continue;
        }
        let assignments =
            sample_assignments_guarded(entry_id, field, samples, 0, &fx.constraints)?;
        if assignments.is_empty() {
            reports.push(FixtureReport {
                entry_id: entry_id.to_string(),
                kind: fx.kind,
                guard,
                skipped: Some("guard admits no sampled assignment".to_string()),
                checks: Vec::new(),
            });
            continue;
        }
        let mut checks = Vec::new();
        for assignment in assignments {
            let base = instantiate(entry_id, &assignment, field)?;
            let env = env_of(e, &assignment);
            let wrap = |source: ExprError| CatalogError::Expr {
                id: entry_id.to_string(),
                source,
            };
            let (ok, note) = match fx.kind {
                FixtureKind::CoboundaryBasis => {
                    check_coboundary_fixture(fx, &base, &env).map_err(wrap)?
                }
                FixtureKind::H2Basis => check_h2_fixture(fx, &base, &env).map_err(wrap)?,
                FixtureKind::OrbitList => check_orbit_fixture(fx, &base, &env)?,
            };
            checks.push(FixtureCheck { assignment, ok, note });
        }
        reports.push(FixtureReport {
            entry_id: entry_id.to_string(),
            kind: fx.kind,
            guard,
            skipped: None,
            checks,
        });
    }
    Ok(reports)
}

/// One sampled instance in a distinctness audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditInstance {
    pub entry_id: String,
    pub assignment: Vec<FieldElement>,
}

/// A pair of sampled instances found equivalent by brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub a: AuditInstance,
    pub b: AuditInstance,
    /// Same family at different parameters — expected for parameter
    /// ranges with residual symmetry, reported but tolerated.
    pub same_family: bool,
}

/// Outcome of an all-pairs distinctness audit over one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub table: Table,
    pub field: FieldDescriptor,
    pub instance_count: usize,
    /// Pairs decided by brute-force search.
    pub compared: usize,
    /// Pairs separated by the invariant fingerprint alone.
    pub pruned: usize,
    pub collisions: Vec<Collision>,
}

enum PairOutcome {
    Pruned,
    Distinct,
    Collision(usize, usize),
}

/// Samples instances of every family in one table and compares all pairs,
/// pruning by invariant fingerprints and deciding the rest by brute force
/// under the standard budget. Collisions are reported, not asserted away:
/// within-family collisions flag residual parameter symmetry, and
/// cross-family ones flag overlap between the sampled instantiations.
pub fn distinctness_audit(
    table: Table,
    field: FieldDescriptor,
    samples_per_family: usize,
) -> Result<AuditReport, CatalogError> {
    let members = entries_in_table(table);
    if let Some(e) = members.first() {
        // Fail up front when the table's dimension is out of budget rather
        // than part-way through the pair sweep.
        let FieldDescriptor::Prime(p) = field else {
            return Err(EquivError::InfiniteField.into());
        };
        equiv::check_standard_budget(e.dim, p)?;
    }
    let mut instances: Vec<(AuditInstance, BilinearPair, equiv::Fingerprint)> = Vec::new();
    for e in members {
        for assignment in sample_assignments(&e.id, field, samples_per_family, 0)? {
            let pair = instantiate(&e.id, &assignment, field)?;
            let fp = equiv::invariant_fingerprint(&pair);
            instances.push((
                AuditInstance { entry_id: e.id.clone(), assignment },
                pair,
                fp,
            ));
        }
    }
    let index_pairs: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| (i + 1..instances.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<PairOutcome> = index_pairs
        .par_iter()
        .map(|&(i, j)| {
            let (_, pa, fa) = &instances[i];
            let (_, pb, fb) = &instances[j];
            if fa != fb {
                return PairOutcome::Pruned;
            }
            match equiv::are_equivalent_bruteforce(pa, pb, Budget::Standard)
                .expect("budget was checked up front")
            {
                Some(_) => PairOutcome::Collision(i, j),
                None => PairOutcome::Distinct,
            }
        })
        .collect();
    let mut report = AuditReport {
        table,
        field,
        instance_count: instances.len(),
        compared: 0,
        pruned: 0,
        collisions: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            PairOutcome::Pruned => report.pruned += 1,
            PairOutcome::Distinct => report.compared += 1,
            PairOutcome::Collision(i, j) => {
                report.compared += 1;
                report.collisions.push(Collision {
                    a: instances[i].0.clone(),
                    b: instances[j].0.clone(),
                    same_family: instances[i].0.entry_id == instances[j].0.entry_id,
                });
            }
        }
    }
    Ok(report)
}
