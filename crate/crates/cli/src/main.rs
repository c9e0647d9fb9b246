mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chardeg_core::bounds::{Family, KpModule};

#[derive(Parser)]
#[command(name = "chardeg", version, about = "Character tables and degree multiplicities of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of the group in a fixture file.
    Table {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Degree pattern, m(G) and field degrees of a group.
    Mult {
        file: PathBuf,
        /// One JSON object per line instead of text.
        #[arg(long)]
        json: bool,
    },
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// m(S_n), m(A_n) and extendible triples from the hook-length formula.
    Sym {
        #[arg(long, default_value_t = 25)]
        max_n: usize,
    },
    Bounds {
        #[command(subcommand)]
        method: BoundsCommand,
    },
    /// Compute m(G) for every fixture in a directory.
    Scan {
        #[arg(long)]
        dir: PathBuf,
        /// Fail if any scanned group has m(G) = 2.
        #[arg(long)]
        expect_none_m2: bool,
        /// Skip fixtures not declared solvable.
        #[arg(long)]
        solvable_only: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Check m(G) for every listed group and counter-example.
    TheoremB {
        #[arg(long, default_value_t = chardeg_core::permgroup::DEFAULT_CAP)]
        max_order: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the property checks on a fixture file or every fixture in a directory.
    Lemmas { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Alt,
    Sym,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Alt => Family::Alternating,
            FamilyArg::Sym => Family::Symmetric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    L,
    I,
}

impl From<ModuleArg> for KpModule {
    fn from(m: ModuleArg) -> Self {
        match m {
            ModuleArg::L => KpModule::L,
            ModuleArg::I => KpModule::I,
        }
    }
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Compare p^t with 2σ(|G/V|).
    FirstMethod {
        /// |G/V| as an integer or a factorization such as 2^3*3*5.
        #[arg(long, conflicts_with = "group", required_unless_present = "group")]
        order: Option<String>,
        /// A listed group; its order and bundled Brauer degree are used.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        p: u64,
        /// Smallest nontrivial p-Brauer degree of G/V.
        #[arg(long)]
        t: Option<u64>,
    },
    /// Values 1 + a|G/V| + Σ a_H |G:H|.
    SecondMethod {
        #[arg(long)]
        quotient: u64,
        /// Indices |G:H|, comma separated.
        #[arg(long, value_delimiter = ',')]
        indices: Vec<u64>,
        /// Keep prime powers of these primes only (all primes if empty).
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Candidate orders of the solvable case.
    SolvableOrders,
    /// dim H²(H, M) for the small permutation-module constituents.
    Kp {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        module: ModuleArg,
    },
    /// Solutions of C(n, ⌊n/2⌋) = a + b·c.
    Binomial {
        #[arg(long, default_value_t = 100)]
        max_n: u64,
    },
}

/// Verdict of a command that ran to completion.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    Inconsistent,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { file, seed } => commands::table(&file, seed),
        Command::Mult { file, json } => commands::mult(&file, json),
        Command::Verify {
            target: VerifyTarget::TheoremB { max_order, seed },
        } => commands::verify_theorem_b(max_order, seed),
        Command::Verify {
            target: VerifyTarget::Lemmas { path },
        } => commands::verify_lemmas(&path),
        Command::Sym { max_n } => commands::sym(max_n),
        Command::Bounds { method } => match method {
            BoundsCommand::FirstMethod { order, group, p, t } => {
                commands::first_method(order.as_deref(), group.as_deref(), p, t)
            }
            BoundsCommand::SecondMethod {
                quotient,
                indices,
                primes,
            } => commands::second_method(quotient, indices, &primes),
            BoundsCommand::SolvableOrders => commands::solvable_orders(),
            BoundsCommand::Kp {
                family,
                n,
                p,
                module,
            } => commands::kp(family.into(), n, p, module.into()),
            BoundsCommand::Binomial { max_n } => commands::binomial(max_n),
        },
        Command::Scan {
            dir,
            expect_none_m2,
            solvable_only,
            seed,
        } => commands::scan(&dir, expect_none_m2, solvable_only, seed),
    };
    match result {
        Ok(Outcome::Consistent) => ExitCode::SUCCESS,
        Ok(Outcome::Inconsistent) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
