//! Command-line front end for the `homnp` library: check identities on
//! algebra files, build new algebras with the closure constructions, and
//! replay the theorem battery.
//!
//! Exit status classes:
//! * `0` — the requested check passed / the construction succeeded.
//! * `1` — an identity or a construction precondition failed.
//! * `2` — the input could not be parsed (bad file, bad flag value, usage).

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homnp::checks::{CheckReport, Witness};
use homnp::io::{
    algebra_to_file, canonical_json, parse_algebra_json, parse_matrix_json, parse_vector_arg,
    report_to_json,
};
use homnp::scalar::format_rational;
use homnp::{
    check_commutative, check_hom_associative, check_hom_lie, check_hom_novikov,
    check_hom_novikov_poisson, check_hom_poisson, check_multiplicative, commutator_minus,
    is_admissible, nth_twist, perturb_combined, perturb_diamond, perturb_times, run_suite,
    tensor_product, twist, AlgebraFile, DoubleHomAlgebra, SuiteReport, Vector,
};

#[derive(Parser)]
#[command(
    name = "homnp",
    version,
    about = "Exact-arithmetic checks and constructions for algebras with two products and a twisting map"
)]
struct Cli {
    /// Output format: human prose or machine-readable JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check one identity family on an algebra document.
    Check {
        /// Path to the algebra document (JSON).
        file: PathBuf,
        /// Identity family to check.
        #[arg(long, value_enum)]
        identity: IdentityArg,
    },
    /// Build a new algebra from existing documents and write it out.
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Replay the theorem battery over the built-in catalog.
    Verify {
        /// Seed for the catalog and all random draws.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Construction-composition depth (at least 1).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        /// Corrupt one catalog structure constant (negative-control hook).
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    /// Commutativity of the first product.
    Commutative,
    /// Hom-associativity of the first product.
    HomAssociative,
    /// The twisting map respects both products.
    Multiplicative,
    /// The second product satisfies the Hom-Novikov identities.
    HomNovikov,
    /// The full two-product compatibility system.
    Hnp,
    /// The second product is a Hom-Lie bracket.
    HomLie,
    /// Hom-Poisson compatibility of bracket and product.
    HomPoisson,
    /// Left-associator admissibility (requires the full system first).
    Admissible,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Compose both products with a weak morphism read from a matrix file.
    Twist {
        #[arg(long = "in")]
        input: PathBuf,
        /// Matrix file: a JSON array of rows of rational strings.
        #[arg(long)]
        beta: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compose both products with the n-th power of the twisting map.
    Ntwist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tensor product of two algebras.
    Tensor {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rescale the first product by a fixed element and twist the second.
    PerturbDiamond {
        #[arg(long = "in")]
        input: PathBuf,
        /// Element as comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Twist the first product and add a rescaling to the second.
    PerturbTimes {
        #[arg(long = "in")]
        input: PathBuf,
        /// Element as comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Both perturbations composed, with independent elements.
    PerturbCombined {
        #[arg(long = "in")]
        input: PathBuf,
        /// First element (fixed by the squared twisting map).
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second element (fixed by the fourth power of the twisting map).
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replace the second product by its commutator bracket.
    Minus {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A terminal outcome: exit code plus the message explaining it.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.command {
        Command::Check { file, identity } => cmd_check(&file, identity, format),
        Command::Construct { kind } => cmd_construct(kind, format),
        Command::Verify {
            seed,
            depth,
            inject_fault,
        } => cmd_verify(seed, depth, inject_fault, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_algebra(path: &Path) -> Result<(DoubleHomAlgebra, AlgebraFile), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_algebra_json(&text)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

/// Find the first failing leaf report and its witness, if any.
fn deep_witness(report: &CheckReport) -> Option<(&'static str, &Witness)> {
    if let Some(w) = report.witness() {
        return Some((report.identity().name(), w));
    }
    report.sub_reports().iter().find_map(deep_witness)
}

fn coords(v: &Vector) -> String {
    let parts: Vec<String> = v.coords().iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn print_report(report: &CheckReport, format: Format) {
    match format {
        Format::Machine => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report_to_json(report)).expect("report serializes")
            );
        }
        Format::Text => {
            if report.passed() {
                println!(
                    "{}: pass ({} basis triples checked)",
                    report.identity().name(),
                    report.triples_checked()
                );
            } else if let Some((name, w)) = deep_witness(report) {
                println!("{}: FAIL", report.identity().name());
                println!(
                    "  {} fails at basis indices {:?}: lhs = {}, rhs = {}",
                    name,
                    w.indices,
                    coords(&w.lhs),
                    coords(&w.rhs)
                );
            } else {
                println!("{}: FAIL", report.identity().name());
            }
        }
    }
}

fn cmd_check(file: &Path, identity: IdentityArg, format: Format) -> Result<u8, Failure> {
    let (algebra, _) = load_algebra(file)?;
    let report = match identity {
        IdentityArg::Commutative => check_commutative(algebra.dot()),
        IdentityArg::HomAssociative => check_hom_associative(&algebra.dot_algebra()),
        IdentityArg::Multiplicative => check_multiplicative(&algebra),
        IdentityArg::HomNovikov => check_hom_novikov(&algebra.star_algebra()),
        IdentityArg::Hnp => check_hom_novikov_poisson(&algebra),
        IdentityArg::HomLie => check_hom_lie(&algebra.star_algebra()),
        IdentityArg::HomPoisson => check_hom_poisson(&algebra),
        IdentityArg::Admissible => {
            is_admissible(&algebra).map_err(|e| Failure::precondition(e.to_string()))?
        }
    };
    print_report(&report, format);
    Ok(if report.passed() { 0 } else { 1 })
}

/// Write `content` to `path` atomically: stage in a temporary file in the
/// same directory, then rename into place.
fn atomic_write(path: &Path, content: &str) -> Result<(), Failure> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let dir = dir.unwrap_or_else(|| Path::new("."));
    let mut staged = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| Failure::parse(format!("cannot stage output near {}: {e}", path.display())))?;
    staged
        .write_all(content.as_bytes())
        .map_err(|e| Failure::parse(format!("cannot write staged output: {e}")))?;
    staged
        .persist(path)
        .map_err(|e| Failure::parse(format!("cannot move output into {}: {e}", path.display())))?;
    Ok(())
}

fn emit_algebra(
    algebra: &DoubleHomAlgebra,
    basis_names: Option<Vec<String>>,
    out: &Path,
    format: Format,
) -> Result<u8, Failure> {
    let doc = algebra_to_file(algebra, basis_names);
    atomic_write(out, &canonical_json(&doc))?;
    match format {
        Format::Text => println!("wrote {} (dimension {})", out.display(), algebra.dim()),
        Format::Machine => println!(
            "{}",
            serde_json::json!({ "status": "ok", "out": out.display().to_string(), "dim": algebra.dim() })
        ),
    }
    Ok(0)
}

fn parse_element(text: &str, dim: usize, name: &'static str) -> Result<Vector, Failure> {
    parse_vector_arg(text, dim, name).map_err(|e| Failure::parse(e.to_string()))
}

fn cmd_construct(kind: ConstructCmd, format: Format) -> Result<u8, Failure> {
    match kind {
        ConstructCmd::Twist { input, beta, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let text = fs::read_to_string(&beta)
                .map_err(|e| Failure::parse(format!("cannot read {}: {e}", beta.display())))?;
            let map = parse_matrix_json(&text, algebra.dim(), "beta")
                .map_err(|e| Failure::parse(format!("{}: {e}", beta.display())))?;
            let twisted = twist(&algebra, &map)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            emit_algebra(&twisted, file.basis_names, &out, format)
        }
        ConstructCmd::Ntwist { input, n, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let twisted =
                nth_twist(&algebra, n).map_err(|e| Failure::precondition(e.to_string()))?;
            emit_algebra(&twisted, file.basis_names, &out, format)
        }
        ConstructCmd::Tensor { input, input2, out } => {
            let (left, _) = load_algebra(&input)?;
            let (right, _) = load_algebra(&input2)?;
            let product = tensor_product(&left, &right);
            emit_algebra(&product, None, &out, format)
        }
        ConstructCmd::PerturbDiamond { input, a, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let elt = parse_element(&a, algebra.dim(), "a")?;
            let perturbed = perturb_diamond(&algebra, &elt)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            emit_algebra(&perturbed, file.basis_names, &out, format)
        }
        ConstructCmd::PerturbTimes { input, a, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let elt = parse_element(&a, algebra.dim(), "a")?;
            let perturbed = perturb_times(&algebra, &elt)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            emit_algebra(&perturbed, file.basis_names, &out, format)
        }
        ConstructCmd::PerturbCombined { input, a, b, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let elt_a = parse_element(&a, algebra.dim(), "a")?;
            let elt_b = parse_element(&b, algebra.dim(), "b")?;
            let perturbed = perturb_combined(&algebra, &elt_a, &elt_b)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            emit_algebra(&perturbed, file.basis_names, &out, format)
        }
        ConstructCmd::Minus { input, out } => {
            let (algebra, file) = load_algebra(&input)?;
            let bracketed = commutator_minus(&algebra);
            emit_algebra(&bracketed, file.basis_names, &out, format)
        }
    }
}

fn print_suite(report: &SuiteReport, format: Format) {
    match format {
        Format::Machine => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("suite report serializes")
            );
        }
        Format::Text => {
            println!("seed {} depth {}", report.seed, report.depth);
            for stat in &report.stats {
                println!(
                    "  {:<44} {:>6} instances, {} failures",
                    stat.name, stat.instances, stat.failures
                );
            }
            println!(
                "total: {} instances, {} failures across {} theorems",
                report.total_instances(),
                report.total_failures(),
                report.stats.len()
            );
            if let Some(f) = report.minimal_failure() {
                println!(
                    "FAIL: {} on {} (dimension {}): {}",
                    f.theorem, f.subject, f.dim, f.detail
                );
                println!("offending algebra:");
                println!("{}", f.algebra_json);
            } else {
                println!("PASS");
            }
        }
    }
}

fn cmd_verify(
    seed: u64,
    depth: u32,
    inject_fault: Option<usize>,
    format: Format,
) -> Result<u8, Failure> {
    let report = run_suite(seed, depth, inject_fault);
    print_suite(&report, format);
    Ok(if report.passed() { 0 } else { 1 })
}
