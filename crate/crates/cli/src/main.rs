//! `charforge`: exact symmetric-group characters, character tables,
//! immanants, Schur coefficients, and identity verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 resource bound exceeded.

mod matrixfile;
mod monomial;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use charforge_core::{
    character_table, chi_gj, chi_mn, chi_oracle, immanant_int, is_balanced, schur_jt,
    CharacterQuery, GenericMatrix, Partition, Permutation,
};

/// Largest n for the brute-force oracle method.
const ORACLE_BOUND: usize = 7;
/// Largest matrix size / Schur weight for full symbolic expansion commands.
const EXPANSION_BOUND: usize = 8;

#[derive(Parser)]
#[command(
    name = "charforge",
    version,
    about = "Exact symmetric group characters, immanants, and Schur coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single character value chi^lambda(mu)
    Char {
        /// Partition labelling the irreducible, e.g. "2,2,2,1"
        #[arg(long)]
        lambda: String,
        /// Partition labelling the conjugacy class, e.g. "3,2,2"
        #[arg(long)]
        mu: String,
        /// mn: border-strip recursion; gj: determinantal extraction;
        /// oracle: full symbolic expansion (n <= 7)
        #[arg(long, value_enum, default_value_t = Method::Mn)]
        method: Method,
    },
    /// Print the character table of S_n (rows and columns in reverse-lexicographic order)
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Exact immanant of an integer matrix read from a JSON file
    Immanant {
        #[arg(long)]
        lambda: String,
        /// Path to {"m": 3, "entries": [["1","2","3"], ...]} with integer strings
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Coefficient of an entry monomial in the Schur expansion s_lambda(omega_1..omega_m)
    Coeff {
        #[arg(long)]
        lambda: String,
        /// Monomial in the entries, e.g. "a[1,1]*a[2,2]^2"
        #[arg(long)]
        monomial: String,
        /// Size of the generic matrix
        #[arg(long)]
        m: usize,
    },
    /// Run an identity verification suite; exits 1 if any instance fails
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        suite: verify::Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Mn,
    Gj,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

enum CliError {
    /// Invalid input (exit 2)
    Invalid(String),
    /// Resource bound exceeded (exit 3)
    Bound(String),
    /// At least one verification instance failed (exit 1)
    VerifyFailed,
}

impl CliError {
    fn invalid(e: impl ToString) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. `charforge table | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerifyFailed) => ExitCode::from(1),
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Char { lambda, mu, method } => cmd_char(&lambda, &mu, method),
        Command::Table { n, format } => cmd_table(n, format),
        Command::Immanant { lambda, matrix } => cmd_immanant(&lambda, &matrix),
        Command::Coeff { lambda, monomial, m } => cmd_coeff(&lambda, &monomial, m),
        Command::Verify { n, suite } => cmd_verify(n, suite),
    }
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, CliError> {
    Partition::from_str(text).map_err(|e| CliError::Invalid(format!("{what}: {e}")))
}

fn cmd_char(lambda: &str, mu: &str, method: Method) -> Result<(), CliError> {
    let lam = parse_partition(lambda, "--lambda")?;
    let mu = parse_partition(mu, "--mu")?;
    let query = CharacterQuery::new(lam, mu).map_err(CliError::invalid)?;
    let value = match method {
        Method::Mn => chi_mn(&query),
        Method::Gj => chi_gj(&query),
        Method::Oracle => {
            let n = query.lam().n();
            if n > ORACLE_BOUND {
                return Err(CliError::Bound(format!(
                    "the oracle method expands a generic {n}x{n} matrix symbolically; n <= {ORACLE_BOUND} required"
                )));
            }
            let pi = Permutation::canonical_of_type(query.mu());
            chi_oracle(query.lam(), &pi).map_err(CliError::invalid)?
        }
    };
    println!("{value}");
    Ok(())
}

#[derive(serde::Serialize)]
struct TableJson {
    n: usize,
    partitions: Vec<String>,
    values: Vec<Vec<i64>>,
}

fn cmd_table(n: usize, format: TableFormat) -> Result<(), CliError> {
    if n == 0 || n > 8 {
        return Err(CliError::Invalid(format!(
            "character tables are printed for 1 <= n <= 8, got {n}"
        )));
    }
    let table = character_table(n).map_err(CliError::invalid)?;
    let labels: Vec<String> = table.partitions().iter().map(ToString::to_string).collect();
    match format {
        TableFormat::Tsv => {
            println!("\t{}", labels.join("\t"));
            for (i, label) in labels.iter().enumerate() {
                let row: Vec<String> =
                    table.row(i).iter().map(ToString::to_string).collect();
                println!("{label}\t{}", row.join("\t"));
            }
        }
        TableFormat::Json => {
            let values: Vec<Vec<i64>> =
                (0..labels.len()).map(|i| table.row(i).to_vec()).collect();
            let out = TableJson { n, partitions: labels, values };
            println!(
                "{}",
                serde_json::to_string(&out).expect("table serializes")
            );
        }
    }
    Ok(())
}

fn cmd_immanant(lambda: &str, path: &PathBuf) -> Result<(), CliError> {
    let lam = parse_partition(lambda, "--lambda")?;
    let entries = matrixfile::load(path).map_err(CliError::Invalid)?;
    let m = entries.len();
    if lam.n() != m {
        return Err(CliError::Invalid(format!(
            "|lambda| = {} does not match the {m}x{m} matrix",
            lam.n()
        )));
    }
    if m > EXPANSION_BOUND {
        return Err(CliError::Bound(format!(
            "immanants are computed for m <= {EXPANSION_BOUND}, got {m}"
        )));
    }
    let value = immanant_int(&entries, &lam).map_err(CliError::invalid)?;
    println!("{value}");
    Ok(())
}

fn cmd_coeff(lambda: &str, monomial: &str, m: usize) -> Result<(), CliError> {
    let lam = parse_partition(lambda, "--lambda")?;
    if m == 0 {
        return Err(CliError::Invalid("--m must be at least 1".into()));
    }
    let mono = monomial::parse(monomial, m).map_err(CliError::Invalid)?;
    if m > EXPANSION_BOUND || lam.n() > EXPANSION_BOUND {
        return Err(CliError::Bound(format!(
            "full symbolic expansion is limited to m <= {EXPANSION_BOUND} and |lambda| <= {EXPANSION_BOUND}"
        )));
    }
    if !is_balanced(&mono).map_err(CliError::invalid)? {
        eprintln!(
            "warning: monomial is not balanced, so its Schur coefficient is 0"
        );
        println!("0");
        return Ok(());
    }
    let expansion = schur_jt(&GenericMatrix::generic(m), &lam);
    println!("{}", expansion.coeff(&mono));
    Ok(())
}

fn cmd_verify(n: usize, suite: verify::Suite) -> Result<(), CliError> {
    let outcome = verify::run(suite, n).map_err(CliError::Invalid)?;
    println!(
        "{}: {} checks, {} passed, {} failed",
        suite.name(),
        outcome.passed + outcome.failed,
        outcome.passed,
        outcome.failed
    );
    if outcome.failed > 0 {
        return Err(CliError::VerifyFailed);
    }
    Ok(())
}
