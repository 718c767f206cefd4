//! Command-line surface for the bilpair library: compute radicals and
//! cohomology, search for equivalences, enumerate automorphisms, build
//! extensions, run the orbit classification, and replay the built-in
//! catalog verification.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bilpair::catalog::{self, Table};
use bilpair::classify::{self, ClassifyError};
use bilpair::cohom::{self, BilinearForm, Cocycle};
use bilpair::equiv::{self, Budget, EquivError};
use bilpair::exactlin::field::{FieldDescriptor, FieldElement};
use bilpair::exactlin::matrix::Matrix;
use bilpair::BilinearPair;

#[derive(Parser)]
#[command(
    name = "bilpair",
    version,
    about = "Exact computation with finite-dimensional bilinear pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the radical dimension and its RREF basis.
    Radical { file: PathBuf },
    /// Print the coboundary basis, dim H² and the representative forms.
    H2 { file: PathBuf },
    /// Search for an equivalence witness between two pairs.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Search beyond the standard size budget.
        #[arg(long)]
        force: bool,
    },
    /// Print the automorphism group order and elements.
    Aut { file: PathBuf },
    /// Build the extension of a base by a cocycle and print it.
    Extend {
        base: PathBuf,
        /// Cocycle components separated by `;`, each n² row-major
        /// coefficients separated by `,` (integers or `a/b`).
        #[arg(long)]
        theta: String,
    },
    /// Partition the admissible s-dimensional subspaces of H² into
    /// automorphism orbits and print the orbit table.
    Classify {
        base: PathBuf,
        #[arg(long)]
        s: usize,
        /// Directory for the TSV table and one `.bp` file per orbit.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay the catalog verification: entry checks, fixture checks and
    /// the distinctness audit.
    VerifyTables {
        /// Restrict to one table: 1, 2, 3, 4 or theorem.
        #[arg(long)]
        table: Option<String>,
        /// Prime field characteristic.
        #[arg(long, default_value_t = 7)]
        field: u64,
        /// Parameter samples per family.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure modes mapped to exit codes: usage 2, budget 3, hard failure 1.
enum CliError {
    Usage(String),
    Budget(String),
    Hard(String),
}

impl From<EquivError> for CliError {
    fn from(e: EquivError) -> CliError {
        match e {
            EquivError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Hard(other.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> CliError {
        match e {
            ClassifyError::SOutOfRange { .. } => CliError::Usage(e.to_string()),
            ClassifyError::Equiv(inner) => inner.into(),
            other => CliError::Hard(other.to_string()),
        }
    }
}

impl From<catalog::CatalogError> for CliError {
    fn from(e: catalog::CatalogError) -> CliError {
        match e {
            catalog::CatalogError::Equiv(inner) => inner.into(),
            catalog::CatalogError::Classify(inner) => inner.into(),
            other => CliError::Hard(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("BILPAIR_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
            _ => {
                eprintln!("error: BILPAIR_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Hard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_pair(path: &Path) -> Result<BilinearPair, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    BilinearPair::parse(&text)
        .map_err(|e| CliError::Hard(format!("{}: {e}", path.display())))
}

fn print_matrix_rows(m: &Matrix, indent: &str) {
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|v| v.to_string()).collect();
        println!("{indent}{}", row.join(" "));
    }
}

fn form_table(f: &BilinearForm) -> String {
    let n = f.base_dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| f.get(i, j).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn parse_coefficient(tok: &str, field: FieldDescriptor) -> Result<FieldElement, CliError> {
    let tok = tok.trim();
    let bad = || CliError::Usage(format!("invalid coefficient `{tok}` in --theta"));
    if let Some((num, den)) = tok.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        return field.from_ratio(num, den).map_err(|_| bad());
    }
    let n: i64 = tok.parse().map_err(|_| bad())?;
    Ok(field.from_integer(n))
}

fn parse_theta(spec: &str, dim: usize, field: FieldDescriptor) -> Result<Cocycle, CliError> {
    let mut components = Vec::new();
    for part in spec.split(';') {
        let entries: Vec<&str> = part.split(',').collect();
        if entries.len() != dim * dim {
            return Err(CliError::Usage(format!(
                "each --theta component needs {} entries (dim² for dim {dim}), got {}",
                dim * dim,
                entries.len()
            )));
        }
        let coords = entries
            .iter()
            .map(|t| parse_coefficient(t, field))
            .collect::<Result<Vec<_>, _>>()?;
        components.push(BilinearForm::from_flat(dim, field, coords));
    }
    Ok(Cocycle::new(components))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Radical { file } => {
            let pair = load_pair(&file)?;
            let rad = pair.radical();
            println!("dim {}", rad.dim());
            println!("basis (RREF rows):");
            print_matrix_rows(rad.basis(), "  ");
            Ok(())
        }
        Command::H2 { file } => {
            let pair = load_pair(&file)?;
            let space = cohom::cohomology(&pair);
            let b = space.coboundary();
            println!("coboundary dim {}", b.dim());
            println!("coboundary basis (flattened value tables, RREF rows):");
            print_matrix_rows(b.basis(), "  ");
            println!("h2_dim {}", space.h2_dim());
            println!("representatives (value tables, rows separated by `;`):");
            for f in space.representatives() {
                println!("  {}", form_table(&f));
            }
            Ok(())
        }
        Command::Equiv { a, b, force } => {
            let fa = load_pair(&a)?;
            let fb = load_pair(&b)?;
            let budget = if force { Budget::Unlimited } else { Budget::Standard };
            match equiv::are_equivalent_bruteforce(&fa, &fb, budget)? {
                Some(witness) => {
                    println!("equivalent; witness matrix:");
                    print_matrix_rows(&witness.phi, "  ");
                }
                None => println!("inequivalent"),
            }
            Ok(())
        }
        Command::Aut { file } => {
            let pair = load_pair(&file)?;
            let group = equiv::automorphism_group(&pair)?;
            println!("order {}", group.order());
            for (i, phi) in group.elements().iter().enumerate() {
                println!("element {i}:");
                print_matrix_rows(phi, "  ");
            }
            Ok(())
        }
        Command::Extend { base, theta } => {
            let pair = load_pair(&base)?;
            let cocycle = parse_theta(&theta, pair.dim(), pair.field())?;
            let ext = cohom::build_extension(&pair, &cocycle);
            print!("{}", ext.serialize());
            Ok(())
        }
        Command::Classify { base, s, out } => {
            let pair = load_pair(&base)?;
            let space = cohom::cohomology(&pair);
            let aut = equiv::automorphism_group(&pair)?;
            let report = classify::orbit_partition(&pair, &space, s, &aut)?;
            let label = base
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "base".to_string());
            let tsv = report.to_tsv(&label);
            print!("{tsv}");
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| CliError::Hard(format!("cannot create {}: {e}", dir.display())))?;
                let write = |path: PathBuf, text: &str| {
                    std::fs::write(&path, text)
                        .map_err(|e| CliError::Hard(format!("cannot write {}: {e}", path.display())))
                };
                write(dir.join("orbits.tsv"), &tsv)?;
                for (i, rep) in report.representative_pairs().iter().enumerate() {
                    write(dir.join(format!("orbit_{i}.bp")), &rep.serialize())?;
                }
            }
            Ok(())
        }
        Command::VerifyTables { table, field, samples, seed } => {
            verify_tables(table.as_deref(), field, samples, seed)
        }
    }
}

fn parse_table(name: &str) -> Result<Table, CliError> {
    match name {
        "1" => Ok(Table::One),
        "2" => Ok(Table::Two),
        "3" => Ok(Table::Three),
        "4" => Ok(Table::Four),
        "theorem" => Ok(Table::Theorem),
        other => Err(CliError::Usage(format!(
            "unknown table `{other}`; expected 1, 2, 3, 4 or theorem"
        ))),
    }
}

fn verify_tables(
    table: Option<&str>,
    field: u64,
    samples: usize,
    seed: u64,
) -> Result<(), CliError> {
    let field = FieldDescriptor::prime(field)
        .map_err(|e| CliError::Usage(format!("--field: {e}")))?;
    let selected = table.map(parse_table).transpose()?;
    let tables: Vec<Table> = match selected {
        Some(t) => vec![t],
        None => vec![Table::Four, Table::One, Table::Two, Table::Three, Table::Theorem],
    };
    let mut failures = 0usize;
    println!("section\tid\tfield\tdetail\tstatus");
    for &t in &tables {
        for entry in catalog::entries_in_table(t) {
            let report = catalog::verify_entry(&entry.id, field, samples, seed)?;
            let status = if let Some(reason) = &report.skipped {
                format!("skipped: {reason}")
            } else if report.ok() {
                "ok".to_string()
            } else {
                failures += 1;
                "FAIL".to_string()
            };
            println!(
                "entry\t{}\t{field}\t{} check(s)\t{status}",
                entry.id,
                report.checks.len()
            );
        }
    }
    if tables.contains(&Table::Four) {
        for entry in catalog::entries_in_table(Table::Four) {
            for report in catalog::verify_fixture(&entry.id, field, samples)? {
                let status = if let Some(reason) = &report.skipped {
                    format!("skipped: {reason}")
                } else if report.ok() {
                    "ok".to_string()
                } else {
                    failures += 1;
                    "FAIL".to_string()
                };
                let notes: Vec<&str> = report
                    .checks
                    .iter()
                    .filter_map(|c| c.note.as_deref())
                    .collect();
                let detail = if notes.is_empty() {
                    format!("{}", report.kind)
                } else {
                    format!("{}; notes: {}", report.kind, notes.join(" | "))
                };
                println!("fixture\t{}\t{field}\t{detail}\t{status}", report.entry_id);
            }
        }
    }
    for &t in &tables {
        match catalog::distinctness_audit(t, field, samples) {
            Ok(audit) => {
                let detail = format!(
                    "{} instance(s), {} collision(s) ({} within-family)",
                    audit.instance_count,
                    audit.collisions.len(),
                    audit.collisions.iter().filter(|c| c.same_family).count()
                );
                println!("audit\ttable{t}\t{field}\t{detail}\tok");
            }
            Err(catalog::CatalogError::Equiv(EquivError::BudgetExceeded { dim, order }))
                if selected.is_none() =>
            {
                // Unrequested tables out of budget are skipped, not fatal.
                println!(
                    "audit\ttable{t}\t{field}\tdim {dim} over F_{order}\tskipped: out of budget"
                );
            }
            Err(e) => return Err(e.into()),
        }
    }
    if failures > 0 {
        Err(CliError::Hard(format!("{failures} verification failure(s)")))
    } else {
        Ok(())
    }
}
