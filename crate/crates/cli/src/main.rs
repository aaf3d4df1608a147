//! `matsuo`: command-line front end for `matsuo-core`.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every requested check passed |
//! | 1 | report written, but a requested check failed |
//! | 2 | usage error (unknown flag, malformed value) |
//! | 3 | unreadable or malformed input (group file, permutation, rational) |
//! | 4 | invalid or degenerate parameter, label, rank or size |
//! | 5 | enumeration budget exceeded |
//! | 6 | internal consistency check failed |
//! | 7 | output could not be written |

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use matsuo_core::matsuo::DEFAULT_SAMPLE_SEED;
use matsuo_core::permgroups::DEFAULT_GROUP_BUDGET;
use matsuo_core::zhu::DEFAULT_GROUP_ORDER_BUDGET;
use matsuo_core::{Error, Rational};

use commands::{AlgebraArgs, CliError, Source};
use report::Format;

#[derive(Parser, Debug)]
#[command(name = "matsuo", version, about = "Exact Matsuo algebra, fusion and coefficient reports")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// All transpositions of S_M.
    #[arg(long, value_name = "M")]
    symmetric: Option<usize>,
    /// Reflections of the Weyl group of type A_N.
    #[arg(long = "weyl-a", value_name = "N")]
    weyl_a: Option<usize>,
    /// Generator list in cycle notation, one per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        match (self.symmetric, self.weyl_a, &self.file) {
            (Some(m), _, _) => Source::Symmetric(m),
            (_, Some(n), _) => Source::WeylA(n),
            (_, _, Some(p)) => Source::File(p.clone()),
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Involution class, Fischer graph and group checks.
    Group {
        #[command(flatten)]
        source: SourceArgs,
        /// Largest group order enumerated for the center check.
        #[arg(long, default_value_t = DEFAULT_GROUP_BUDGET)]
        budget: usize,
    },
    /// The algebra B_{α,β}(G, I): form, radical, conformal vector.
    Algebra {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "1/2", value_name = "P/Q")]
        alpha: Rational,
        #[arg(long, default_value = "1/2", value_name = "P/Q")]
        beta: Rational,
        /// Largest group order enumerated for the faithfulness check.
        #[arg(long, default_value_t = DEFAULT_GROUP_BUDGET)]
        budget: usize,
        /// Seed for the sampled invariance check above dimension 64.
        #[arg(long, default_value_t = DEFAULT_SAMPLE_SEED)]
        seed: u64,
    },
    /// Unitary-series fusion: a full table, or one product with --pair.
    Fusion {
        #[arg(long)]
        n: u32,
        #[arg(long, num_args = 2, value_names = ["R,S", "R,S"])]
        pair: Option<Vec<String>>,
    },
    /// Branching labels h_{2k+1, 2j+1}.
    Branch {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
    },
    /// Dimension of the quotient of Q[S_{n+1}] by the ideal generated by X(X-3).
    Zhu {
        #[arg(long)]
        n: usize,
        /// Largest admissible (n+1)!.
        #[arg(long, default_value_t = DEFAULT_GROUP_ORDER_BUDGET)]
        budget: usize,
        /// Shuffle the ideal generators before saturation.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Triangular exponentials and the P coefficient systems.
    Coeffs {
        #[command(subcommand)]
        op: CoeffsOp,
    },
    /// Run every acceptance check up to rank K.
    VerifyAll {
        #[arg(long, value_name = "K", default_value_t = 6)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CoeffsOp {
    /// Sequence of exp(J) or exp(-J).
    Exp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        negative: bool,
    },
    /// P_{1/2, N-i-1, j}.
    Half {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// P_{0, k, j} for weight N.
    P0 {
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
    },
    /// Check the P_{0,k,j} recursion against the substitution oracle.
    Verify {
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
    },
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    match &cli.command {
        Command::Group { source, budget } => commands::group(&source.source(), *budget),
        Command::Algebra {
            source,
            alpha,
            beta,
            budget,
            seed,
        } => commands::algebra(
            &source.source(),
            &AlgebraArgs {
                alpha: alpha.clone(),
                beta: beta.clone(),
                budget: *budget,
                seed: *seed,
            },
        ),
        Command::Fusion { n, pair } => commands::fusion(*n, pair.as_deref()),
        Command::Branch { n, j } => commands::branch(*n, *j),
        Command::Zhu { n, budget, seed } => commands::zhu(*n, *budget, *seed),
        Command::Coeffs { op } => match op {
            CoeffsOp::Exp { m, negative } => commands::coeffs_exp(*m, *negative),
            CoeffsOp::Half { i, j } => commands::coeffs_half(*i, *j),
            CoeffsOp::P0 { big_n, k, j } => commands::coeffs_p0(*big_n, *k, *j),
            CoeffsOp::Verify { big_n } => commands::coeffs_verify(*big_n),
        },
        Command::VerifyAll { n } => commands::verify_all(*n),
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Io { .. } => 3,
        CliError::Core(e) => match e {
            Error::Parse { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidGenerator(_)
            | Error::InvalidRational(_) => 3,
            Error::BudgetExceeded { .. } => 5,
            Error::InternalInconsistency(_) | Error::FusionAsymmetry(_) => 6,
            _ => 4,
        },
    }
}

fn describe(err: &CliError) -> String {
    match err {
        CliError::Io { path, message } => format!("{}: {message}", path.display()),
        CliError::Core(e) => e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(7);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
