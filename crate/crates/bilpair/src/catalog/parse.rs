//! The `.bpt` template format: the `.bp` grammar extended with `param`
//! lines, symbolic coefficients, domain constraints, base references and
//! fixture blocks.

use std::fmt;

use super::expr::{Expr, ExprError};

/// Which table an entry belongs to; `Theorem` marks the one family stated
/// outside the numbered tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    One,
    Two,
    Three,
    Four,
    Theorem,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table::One => write!(f, "1"),
            Table::Two => write!(f, "2"),
            Table::Three => write!(f, "3"),
            Table::Four => write!(f, "4"),
            Table::Theorem => write!(f, "theorem"),
        }
    }
}

/// A declared parameter, possibly with an unenforced domain annotation
/// (representative sets that only make sense over closed fields).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: String,
    pub opaque_domain: Option<String>,
}

/// Reference to the 2-dimensional base family an entry extends, with
/// argument expressions in the entry's parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseRef {
    pub id: String,
    pub args: Vec<Expr>,
}

/// One comparison; `equal` selects `==` over `!=`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintAtom {
    pub lhs: Expr,
    pub rhs: Expr,
    pub equal: bool,
    pub text: String,
}

/// A disjunction of atoms — satisfied when at least one atom holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub atoms: Vec<ConstraintAtom>,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.atoms.iter().map(|a| a.text.as_str()).collect();
        write!(f, "{}", parts.join(" or "))
    }
}

/// e_i · e_j = Σ terms, with symbolic coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRule {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Expr, usize)>,
}

/// One catalog family: a parameterized structure-constant template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub table: Table,
    pub dim: usize,
    pub params: Vec<ParamSpec>,
    pub constraints: Vec<Constraint>,
    pub base_ref: Option<BaseRef>,
    /// Characteristics where the template divides by zero, collected from
    /// constant divisors in the template and base arguments.
    pub char_exclusions: Vec<u64>,
    pub template: Vec<ProductRule>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    CoboundaryBasis,
    H2Basis,
    OrbitList,
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureKind::CoboundaryBasis => write!(f, "coboundary_basis"),
            FixtureKind::H2Basis => write!(f, "h2_basis"),
            FixtureKind::OrbitList => write!(f, "orbit_list"),
        }
    }
}

/// A bilinear form on the 2-dim base as a combination of the elementary
/// forms D_ij, with symbolic coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormTemplate {
    pub terms: Vec<(Expr, usize, usize)>,
}

/// A transcribed expected value attached to a base family, guarded by
/// constraints selecting the parameter regime it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub entry_id: String,
    pub kind: FixtureKind,
    pub constraints: Vec<Constraint>,
    /// Extra free parameters (orbit families indexed over the field).
    pub free_params: Vec<String>,
    /// Payload for coboundary/H² fixtures.
    pub forms: Vec<FormTemplate>,
    /// Payload for orbit fixtures: each class is a spanning set of forms.
    pub classes: Vec<Vec<FormTemplate>>,
    /// Subspace dimension for orbit fixtures.
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BptError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for BptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "template line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for BptError {}

fn err(line: usize, message: impl Into<String>) -> BptError {
    BptError { line, message: message.into() }
}

fn expr_at(line: usize, text: &str) -> Result<Expr, BptError> {
    Expr::parse(text).map_err(|e: ExprError| err(line, e.to_string()))
}

/// Splits a sum at top-level `+`/`-` signs (parenthesized signs stay put),
/// returning (negated, term) pieces.
fn split_signed_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    let mut negated = false;
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            '+' | '-' if depth == 0 => {
                if !current.trim().is_empty() {
                    out.push((negated, current.trim().to_string()));
                }
                current = String::new();
                negated = c == '-';
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        out.push((negated, current.trim().to_string()));
    }
    out
}

/// Parses `e<k>` into a zero-based index.
fn basis_index(line: usize, tok: &str, dim: usize) -> Result<usize, BptError> {
    let idx: usize = tok
        .strip_prefix('e')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(line, format!("expected basis vector `e<k>`, found `{tok}`")))?;
    if idx == 0 || idx > dim {
        return Err(err(line, format!("basis index e{idx} out of range for dim {dim}")));
    }
    Ok(idx - 1)
}

fn product_terms(line: usize, rhs: &str, dim: usize) -> Result<Vec<(Expr, usize)>, BptError> {
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    for (negated, body) in split_signed_terms(rhs) {
        let (coef, target) = match body.rsplit_once('*') {
            Some((c, t)) if t.trim().starts_with('e') => (expr_at(line, c)?, t.trim().to_string()),
            _ => (Expr::Int(1), body.clone()),
        };
        let k = basis_index(line, &target, dim)?;
        let coef = if negated { Expr::Neg(Box::new(coef)) } else { coef };
        terms.push((coef, k));
    }
    Ok(terms)
}

fn form_terms(line: usize, text: &str) -> Result<FormTemplate, BptError> {
    let text = text.trim();
    if text == "0" {
        return Ok(FormTemplate { terms: Vec::new() });
    }
    let mut terms = Vec::new();
    for (negated, body) in split_signed_terms(text) {
        let (coef, target) = match body.rsplit_once('*') {
            Some((c, t)) if t.trim().starts_with('D') => (expr_at(line, c)?, t.trim().to_string()),
            _ => (Expr::Int(1), body.clone()),
        };
        let digits = target
            .strip_prefix('D')
            .filter(|d| d.len() == 2 && d.chars().all(|c| c.is_ascii_digit()))
            .ok_or_else(|| err(line, format!("expected form `D<i><j>`, found `{target}`")))?;
        let i = digits.as_bytes()[0] - b'0';
        let j = digits.as_bytes()[1] - b'0';
        if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
            return Err(err(line, format!("form index out of range in `{target}`")));
        }
        let coef = if negated { Expr::Neg(Box::new(coef)) } else { coef };
        terms.push((coef, (i - 1) as usize, (j - 1) as usize));
    }
    Ok(FormTemplate { terms })
}

fn constraint_line(line: usize, text: &str) -> Result<Constraint, BptError> {
    let mut atoms = Vec::new();
    for part in text.split(" or ") {
        let part = part.trim();
        let (lhs, rhs, equal) = if let Some((l, r)) = part.split_once("!=") {
            (l, r, false)
        } else if let Some((l, r)) = part.split_once("==") {
            (l, r, true)
        } else {
            return Err(err(line, format!("expected `<expr> != <expr>` or `<expr> == <expr>`, found `{part}`")));
        };
        atoms.push(ConstraintAtom {
            lhs: expr_at(line, lhs)?,
            rhs: expr_at(line, rhs)?,
            equal,
            text: part.to_string(),
        });
    }
    if atoms.is_empty() {
        return Err(err(line, "empty constraint"));
    }
    Ok(Constraint { atoms })
}

fn base_ref_line(line: usize, text: &str) -> Result<BaseRef, BptError> {
    let text = text.trim();
    if let Some((id, rest)) = text.split_once('(') {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| err(line, "missing `)` in base reference"))?;
        let args = inner
            .split(',')
            .map(|a| expr_at(line, a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BaseRef { id: id.trim().to_string(), args })
    } else {
        Ok(BaseRef { id: text.to_string(), args: Vec::new() })
    }
}

enum Block {
    Entry(CatalogEntry),
    Fixture(Fixture),
}

/// Parses one `.bpt` source into entries and fixtures.
pub fn parse_bpt(text: &str) -> Result<(Vec<CatalogEntry>, Vec<Fixture>), BptError> {
    let mut entries = Vec::new();
    let mut fixtures = Vec::new();
    let mut current: Option<Block> = None;

    let finish = |block: Option<Block>,
                      entries: &mut Vec<CatalogEntry>,
                      fixtures: &mut Vec<Fixture>| {
        match block {
            Some(Block::Entry(mut e)) => {
                let mut primes = Vec::new();
                for rule in &e.template {
                    for (coef, _) in &rule.terms {
                        coef.constant_divisor_primes(&mut primes);
                    }
                }
                if let Some(b) = &e.base_ref {
                    for a in &b.args {
                        a.constant_divisor_primes(&mut primes);
                    }
                }
                primes.sort_unstable();
                e.char_exclusions = primes;
                entries.push(e);
            }
            Some(Block::Fixture(f)) => fixtures.push(f),
            None => {}
        }
    };

    for (no, raw) in text.lines().enumerate() {
        let no = no + 1;
        let line = match raw.find('#') {
            Some(p) => raw[..p].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "entry" => {
                finish(current.take(), &mut entries, &mut fixtures);
                current = Some(Block::Entry(CatalogEntry {
                    id: rest.to_string(),
                    table: Table::Four,
                    dim: 0,
                    params: Vec::new(),
                    constraints: Vec::new(),
                    base_ref: None,
                    char_exclusions: Vec::new(),
                    template: Vec::new(),
                }));
            }
            "fixture" => {
                finish(current.take(), &mut entries, &mut fixtures);
                let (id, kind_text) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(no, "expected `fixture <id> <kind>`"))?;
                let kind = match kind_text.trim() {
                    "coboundary_basis" => FixtureKind::CoboundaryBasis,
                    "h2_basis" => FixtureKind::H2Basis,
                    "orbit_list" => FixtureKind::OrbitList,
                    other => return Err(err(no, format!("unknown fixture kind `{other}`"))),
                };
                current = Some(Block::Fixture(Fixture {
                    entry_id: id.to_string(),
                    kind,
                    constraints: Vec::new(),
                    free_params: Vec::new(),
                    forms: Vec::new(),
                    classes: Vec::new(),
                    s: 1,
                }));
            }
            _ => match current.as_mut() {
                None => return Err(err(no, "content before the first `entry`/`fixture`")),
                Some(Block::Entry(e)) => match keyword {
                    "table" => {
                        e.table = match rest {
                            "1" => Table::One,
                            "2" => Table::Two,
                            "3" => Table::Three,
                            "4" => Table::Four,
                            "theorem" => Table::Theorem,
                            other => return Err(err(no, format!("unknown table `{other}`"))),
                        };
                    }
                    "dim" => {
                        e.dim = rest
                            .parse()
                            .map_err(|_| err(no, format!("bad dimension `{rest}`")))?;
                    }
                    "param" => e.params.push(ParamSpec {
                        name: rest.to_string(),
                        opaque_domain: None,
                    }),
                    "opaque" => {
                        let (name, note) = rest
                            .split_once(char::is_whitespace)
                            .unwrap_or((rest, ""));
                        let spec = e
                            .params
                            .iter_mut()
                            .find(|p| p.name == name)
                            .ok_or_else(|| err(no, format!("opaque note for undeclared parameter `{name}`")))?;
                        spec.opaque_domain = Some(note.trim().to_string());
                    }
                    "constraint" => e.constraints.push(constraint_line(no, rest)?),
                    "base" => e.base_ref = Some(base_ref_line(no, rest)?),
                    _ if keyword.starts_with('e') => {
                        let (lhs, rhs) = line
                            .split_once('=')
                            .ok_or_else(|| err(no, "expected `e<i>*e<j> = ...`"))?;
                        let (ei, ej) = lhs
                            .trim()
                            .split_once('*')
                            .ok_or_else(|| err(no, "expected `e<i>*e<j>` on the left"))?;
                        if e.dim == 0 {
                            return Err(err(no, "product before `dim`"));
                        }
                        let i = basis_index(no, ei.trim(), e.dim)?;
                        let j = basis_index(no, ej.trim(), e.dim)?;
                        if e.template.iter().any(|r| r.i == i && r.j == j) {
                            return Err(err(no, format!("duplicate product e{}*e{}", i + 1, j + 1)));
                        }
                        let terms = product_terms(no, rhs, e.dim)?;
                        e.template.push(ProductRule { i, j, terms });
                    }
                    other => return Err(err(no, format!("unknown directive `{other}`"))),
                },
                Some(Block::Fixture(f)) => match keyword {
                    "constraint" => f.constraints.push(constraint_line(no, rest)?),
                    "param" => f.free_params.push(rest.to_string()),
                    "s" => {
                        f.s = rest.parse().map_err(|_| err(no, format!("bad s `{rest}`")))?;
                    }
                    "form" => f.forms.push(form_terms(no, rest)?),
                    "class" => {
                        let spanning = rest
                            .split(';')
                            .map(|part| form_terms(no, part))
                            .collect::<Result<Vec<_>, _>>()?;
                        f.classes.push(spanning);
                    }
                    other => return Err(err(no, format!("unknown fixture directive `{other}`"))),
                },
            },
        }
    }
    finish(current.take(), &mut entries, &mut fixtures);
    Ok((entries, fixtures))
}
