use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use algshift::campaign::{run_all, run_campaign, CampaignConfig, CAMPAIGNS};
use algshift::combinatorics::format::{read_family_file, write_family};
use algshift::combinatorics::{b_family, c_family, turan_graph, Family, TermOrder};
use algshift::constructions::{random_turan_hypergraph, turan_34_hypergraph};
use algshift::dominance::{dominates, rank_r, weakly_isomorphic, GenericSource};
use algshift::homology::{complex_of, reduced_betti};
use algshift::linalg::PrimeModulus;
use algshift::shifting::exterior_shift;
use algshift::Error;

#[derive(Parser)]
#[command(name = "algshift", version, about = "Algebraic shifting and dominance toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Generic {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = GenericSource::DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = PrimeModulus::MERSENNE_61.value())]
    prime: u64,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Generic {
    fn source(&self) -> Result<GenericSource, Error> {
        GenericSource::new(PrimeModulus::new(self.prime)?, self.seed, self.trials)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exterior shift of a family.
    Shift {
        file: PathBuf,
        #[arg(long, default_value = "lex")]
        order: TermOrder,
        #[command(flatten)]
        g: Generic,
    },
    /// Whether the first family dominates the second.
    Dominate {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        g: Generic,
    },
    /// Both dominance directions on shared matrices.
    Weakiso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        g: Generic,
    },
    /// Rank of the minors against all k-sets meeting [r].
    Rankr {
        file: PathBuf,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        g: Generic,
    },
    /// Reduced Betti numbers of K(H).
    Homology {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated family in the text format.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification campaign, or all of them.
    Verify {
        campaign: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = GenericSource::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = PrimeModulus::MERSENNE_61.value())]
        prime: u64,
        #[arg(long, default_value_t = 6)]
        max_exhaustive_n: u32,
        /// Upper end of the campaign's n range.
        #[arg(long)]
        n: Option<u32>,
        /// Number of random instances.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value = "sumlex")]
        order: TermOrder,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    B,
    C,
    Turan34,
    RandomTuran,
    TuranGraphComplementCover,
}

enum Failure {
    Input(Error),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Io(_)
            | Error::InvalidArgument(_)
            | Error::BoundExceeded { .. }
            | Error::UnknownCampaign(_)
            | Error::NotPrime(_)
            | Error::FamilyMismatch(_)
            | Error::OrderNotApplicable { .. }
            | Error::VertexOutOfRange { .. }
            | Error::InvalidKSet(_)
            | Error::PredicateViolated { .. }
            | Error::HasTriangle { .. } => Failure::Input(e),
            other => Failure::Internal(other),
        }
    }
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Shift { file, order, g } => {
            let f = read_family_file(&file)?;
            let r = exterior_shift(&f, order, &g.source()?)?;
            emit(
                &json!({"order": order, "input": write_family(&f), "result": r,
                        "family": write_family(&r.family), "fixed-point": r.family == f}),
                g.out.as_ref(),
            )?;
        }
        Command::Dominate { first, second, g } => {
            let (a, b) = (read_family_file(&first)?, read_family_file(&second)?);
            let v = dominates(&a, &b, &g.source()?)?;
            emit(&json!({"dominates": v}), g.out.as_ref())?;
        }
        Command::Weakiso { first, second, g } => {
            let (a, b) = (read_family_file(&first)?, read_family_file(&second)?);
            let (fwd, bwd) = weakly_isomorphic(&a, &b, &g.source()?)?;
            emit(
                &json!({"first_dominates_second": fwd, "second_dominates_first": bwd,
                        "weakly_isomorphic": fwd.is_yes() && bwd.is_yes()}),
                g.out.as_ref(),
            )?;
        }
        Command::Rankr { file, r, g } => {
            let h = read_family_file(&file)?;
            emit(&json!({"r": r, "rank": rank_r(&h, r, &g.source()?)?}), g.out.as_ref())?;
        }
        Command::Homology { file, out } => {
            let h = read_family_file(&file)?;
            emit(&json!(reduced_betti(&complex_of(&h))), out.as_ref())?;
        }
        Command::Gen { kind, n, seed, out } => {
            let f: Family = match kind {
                GenKind::B => b_family(n)?,
                GenKind::C => c_family(n)?,
                GenKind::Turan34 => turan_34_hypergraph(n, None)?,
                GenKind::RandomTuran => random_turan_hypergraph(n, seed)?,
                GenKind::TuranGraphComplementCover => turan_graph(n)?,
            };
            let text = write_family(&f);
            match out {
                Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(e.into()))?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            campaign,
            all,
            seed,
            trials,
            prime,
            max_exhaustive_n,
            n,
            samples,
            order,
            out,
        } => {
            let cfg = CampaignConfig {
                seed,
                trials,
                prime,
                max_exhaustive_n,
                n,
                samples,
                order,
            };
            return match (campaign, all) {
                (None, true) => {
                    let r = run_all(&cfg)?;
                    emit(&json!(r), out.as_ref())?;
                    Ok(r.passed)
                }
                (Some(name), false) => {
                    let r = run_campaign(&name, &cfg)?;
                    emit(&json!(r), out.as_ref())?;
                    Ok(r.passed)
                }
                _ => Err(Failure::Input(Error::InvalidArgument(format!(
                    "give one campaign or --all; campaigns: {}",
                    CAMPAIGNS.join(", ")
                )))),
            };
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(Failure::Input(e))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(e))) => {
            eprintln!("internal error: {e}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}
