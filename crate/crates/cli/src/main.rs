use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pontryagin::bordism::SplitPolicy;
use pontryagin::exact::Rat;
use pontryagin_cli::commands::{self, FunctionalKind, NumbersRequest, Outcome};
use pontryagin_cli::error::{CliError, CliResult};
use pontryagin_cli::suites::{Suite, VerifyConfig};

/// Exact Pontryagin numbers, elliptic genera and spin bordism computations.
#[derive(Parser)]
#[command(name = "pontryagin", version)]
struct Cli {
    /// Write the JSON document to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pontryagin numbers of a manifold expression such as "K3 * X(3,5;c)"
    Numbers {
        expr: String,
        /// Only the Milnor–Thom number s_m
        #[arg(long)]
        s: bool,
        /// Only the q-number
        #[arg(long)]
        q: bool,
        /// Only p_λ for these partitions, e.g. [1,1]
        #[arg(long)]
        partition: Vec<String>,
    },
    /// Run verification suites; exits 1 if any check fails
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest complex dimension n + k of the X(n,k) grid
        #[arg(long, default_value_t = 24)]
        max_dim: u32,
        /// Comma-separated values of c
        #[arg(long, value_delimiter = ',', default_value = "2", allow_hyphen_values = true)]
        c: Vec<i64>,
        /// Weights for the K3 elimination checks, e.g. 3..5
        #[arg(long, default_value = "3..5")]
        m: String,
        #[arg(long, hide = true)]
        hp2_override: Option<String>,
    },
    /// Coordinates of a class in the monomial basis at a fixed even c
    Decompose {
        expr: String,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, value_enum, default_value = "min-n")]
        basis_split: SplitArg,
        /// Also rewrite monomials containing K3 without it
        #[arg(long)]
        no_k3: bool,
    },
    /// Decide whether a functional factors through the elliptic genus
    Witness {
        /// Functional spec file
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "min-n")]
        basis_split: SplitArg,
        /// Comma-separated even sample values of c
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        samples: Option<Vec<i64>>,
        /// Bound B for the certificate
        #[arg(long, default_value = "1000000")]
        bound: String,
    },
    /// Print a functional spec for s, q, L or Â in weight m
    Functional {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Formulas,
    GenusKernel,
    Nok3,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitArg {
    MinN,
    MaxN,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    S,
    Q,
    L,
    Ahat,
}

impl From<SplitArg> for SplitPolicy {
    fn from(a: SplitArg) -> Self {
        match a {
            SplitArg::MinN => SplitPolicy::MinN,
            SplitArg::MaxN => SplitPolicy::MaxN,
        }
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    Ok(match command {
        Command::Numbers { expr, s, q, partition } => {
            let req = NumbersRequest { s, q, partitions: partition };
            commands::numbers(&expr, &req)?.into()
        }
        Command::Verify { suite, max_dim, c, m, hp2_override } => {
            let suite = match suite {
                SuiteArg::Formulas => Suite::Formulas,
                SuiteArg::GenusKernel => Suite::GenusKernel,
                SuiteArg::Nok3 => Suite::NoK3,
                SuiteArg::All => Suite::All,
            };
            let mut cfg = VerifyConfig {
                max_dim,
                c_values: c,
                m_range: commands::parse_m_range(&m)?,
                ..VerifyConfig::default()
            };
            if let Some(o) = hp2_override {
                cfg.hp2 = commands::parse_hp2_override(&o)?;
            }
            commands::verify(suite, &cfg)
        }
        Command::Decompose { expr, c, basis_split, no_k3 } => {
            commands::decompose_expr(&expr, c, basis_split.into(), no_k3)?.into()
        }
        Command::Witness { spec, basis_split, samples, bound } => {
            let text = std::fs::read_to_string(&spec)?;
            let bound: Rat = bound
                .parse()
                .map_err(|_| CliError::Usage(format!("--bound {bound}: expected a rational")))?;
            commands::witness(&text, basis_split.into(), samples, &bound)?.into()
        }
        Command::Functional { kind, m } => {
            let kind = match kind {
                KindArg::S => FunctionalKind::S,
                KindArg::Q => FunctionalKind::Q,
                KindArg::L => FunctionalKind::L,
                KindArg::Ahat => FunctionalKind::AHat,
            };
            commands::functional(kind, m)?.into()
        }
    })
}

fn emit(doc: &serde_json::Value, out: Option<&PathBuf>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("JSON values serialize") + "\n";
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match run(cli.command) {
        Ok(outcome) => (outcome.doc, outcome.exit_code),
        Err(e) => {
            eprintln!("error: {e}");
            (serde_json::json!({ "error": e.to_string() }), e.exit_code())
        }
    };
    if let Err(e) = emit(&doc, cli.out.as_ref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}
