mod commands;
mod error;
mod io;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(name = "pcfquad", version, about = "Postcritically finite quadratic morphisms")]
struct Cli {
    /// Worker threads; PCFQUAD_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Mapping schemes.
    #[command(subcommand)]
    Schemes(SchemesCmd),
    /// Orbit of a point, or the postcritical scheme, of a quadratic morphism.
    Orbit(OrbitArgs),
    /// Moduli equations and their solutions.
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// Stable marked trees.
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Frobenius cycle types on the preimage tree over 𝔽_p.
    Frobenius(FrobeniusArgs),
    /// Recompute the worked examples and print a pass/fail table.
    ReproducePaper {
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
}

#[derive(Subcommand)]
pub enum SchemesCmd {
    /// All schemes of a given size up to marked isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Kind and parameters of a scheme.
    Classify {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// The extended scheme with σ and τ̃.
    Extend {
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Scheme file for a class such as `A,1,2,2,2`.
    Build {
        #[arg(long)]
        class: String,
    },
}

#[derive(Args)]
pub struct OrbitArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b"])]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b"])]
    pub d: Option<String>,
    /// Work over 𝔽_p instead of ℚ.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub start: String,
    #[arg(long, default_value_t = 64)]
    pub limit: usize,
    /// Print the postcritical scheme and point assignment instead.
    #[arg(long)]
    pub postcritical: bool,
}

#[derive(Subcommand)]
pub enum ModuliCmd {
    /// Closed and open conditions.
    Eqs {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        chart: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Points of the fiber over 𝔽_p or ℚ.
    Solve {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long, conflicts_with = "rational", required_unless_present = "rational")]
        mod_p: Option<u64>,
        #[arg(long)]
        rational: bool,
        #[arg(long, default_value_t = 10_000)]
        height: u64,
        #[arg(long)]
        chart: Option<String>,
    },
    /// Number of points for each odd prime in a range.
    Count {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        primes: String,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Re-certify every point of a solution file.
    Certify {
        #[arg(long)]
        solution: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum TreeCmd {
    /// Tree of a configuration of points.
    Build {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Forget all marks except the kept ones.
    Stabilize {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Compare the σ-quotient with the stabilization for a morphism realizing a scheme.
    QuotientCheck {
        #[arg(long)]
        scheme: PathBuf,
        /// `a,b` in the chart of the scheme.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        chart: Option<String>,
    },
    /// Run the pattern detector over every solution file in a directory.
    ForbiddenScan {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "3..20")]
        primes: String,
    },
    /// Degeneration type of four points.
    CrossRatio {
        /// Four comma separated values, `inf` allowed.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long)]
        prime: u64,
    },
}

#[derive(Args)]
pub struct FrobeniusArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, allow_hyphen_values = true)]
    pub basepoint: String,
    #[arg(long)]
    pub depth: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Emit,
}

fn configure_threads(flag: Option<usize>) -> Result<(), CliError> {
    let from_env = match std::env::var("PCFQUAD_THREADS") {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| error::usage(format!("PCFQUAD_THREADS={v}")))?),
        Err(_) => None,
    };
    if let Some(n) = from_env.or(flag) {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| error::usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, CliError> {
    configure_threads(cli.threads)?;
    match cli.command {
        Command::Schemes(cmd) => commands::schemes::run(cmd),
        Command::Orbit(args) => commands::dynamics::orbit(args),
        Command::Moduli(cmd) => commands::moduli::run(cmd),
        Command::Tree(cmd) => commands::tree::run(cmd),
        Command::Frobenius(args) => commands::dynamics::frobenius(args),
        Command::ReproducePaper { emit } => commands::reproduce::run(emit),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let newline = if out.is_empty() || out.ends_with('\n') { "" } else { "\n" };
            // A closed pipe is not an error for the computation.
            let _ = write!(stdout, "{out}{newline}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
