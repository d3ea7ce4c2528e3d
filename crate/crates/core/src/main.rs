use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cdgraph::cli::commands::{self, GraphSource};
use cdgraph::cli::{CliError, Outcome, SweepOptions, EXIT_INPUT};
use cdgraph::psl2::{LinearGroup, LinearKind};

#[derive(Parser)]
#[command(version, about = "Character degree graphs and module-action checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Psl,
    Sl,
}

impl From<Kind> for LinearKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Psl => LinearKind::Psl2,
            Kind::Sl => LinearKind::Sl2,
        }
    }
}

/// Exactly one of `--degrees`, `--psl`, `--sl` or `--corpus`.
#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct SourceArgs {
    /// comma-separated character degrees
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<u64>>,
    /// PSL_2(q) for the given field order
    #[arg(long, value_name = "Q")]
    psl: Option<u64>,
    /// SL_2(q) for the given field order
    #[arg(long, value_name = "Q")]
    sl: Option<u64>,
    /// JSON Lines corpus; pick the entry with --entry
    #[arg(long, value_name = "FILE", requires = "entry")]
    corpus: Option<PathBuf>,
}

#[derive(Args)]
struct SourceExtra {
    /// name for --degrees input, or entry to take from --corpus
    #[arg(long)]
    entry: Option<String>,
    /// prime dividing |G/S| to join to pi(q^2 - 1); repeatable
    #[arg(long = "outer-prime", value_name = "S")]
    outer_primes: Vec<u64>,
}

fn source(args: &SourceArgs, extra: &SourceExtra) -> Result<GraphSource, CliError> {
    let linear = |kind, q| -> Result<GraphSource, CliError> {
        Ok(GraphSource::Linear {
            group: LinearGroup::from_order(kind, q)?,
            outer_primes: extra.outer_primes.clone(),
        })
    };
    if !extra.outer_primes.is_empty() && args.psl.is_none() && args.sl.is_none() {
        return Err(CliError::Usage("--outer-prime needs --psl or --sl".into()));
    }
    if let Some(d) = &args.degrees {
        return Ok(GraphSource::Degrees {
            name: extra.entry.clone().unwrap_or_else(|| "G".into()),
            degrees: d.clone(),
        });
    }
    if let Some(q) = args.psl {
        return linear(LinearKind::Psl2, q);
    }
    if let Some(q) = args.sl {
        return linear(LinearKind::Sl2, q);
    }
    let path = args.corpus.clone().expect("clap enforces one source");
    Ok(GraphSource::Corpus {
        path,
        name: extra.entry.clone().expect("clap enforces --entry"),
    })
}

#[derive(Subcommand)]
enum Command {
    /// Degree graph as DOT
    Graph {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        extra: SourceExtra,
    },
    /// Complement of the degree graph as DOT
    Complement {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        extra: SourceExtra,
    },
    /// Vertex sets spanning a cycle in the complement
    Cycles {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        extra: SourceExtra,
        /// odd sizes only
        #[arg(long)]
        odd: bool,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
    },
    /// Compare spanning cycles with the alternation rule on every odd subset
    VerifyTheoremA {
        #[arg(long)]
        u: u64,
        #[arg(long)]
        alpha: u32,
        #[arg(long = "type", value_enum, default_value = "psl")]
        kind: Kind,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
    },
    /// Structure, cycle rule and corollaries for all q in range
    Sweep {
        #[arg(long)]
        qmax: u64,
        #[arg(long, default_value_t = 4)]
        qmin: u64,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        /// structural comparison only
        #[arg(long)]
        structure_only: bool,
    },
    /// Condition N_q for a matrix group on its natural module
    NqCheck {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long)]
        q: u64,
        /// view GF(p^k)^n as GF(p)^(kn) first
        #[arg(long)]
        blow_up: bool,
    },
    /// Graph checks on every entry of a corpus
    Audit {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
    /// Solutions of 1 + r^b + ... + r^(b(c-1)) = N
    Repunit {
        #[arg(long = "n", value_name = "N", required = true, value_delimiter = ',')]
        n: Vec<u64>,
        /// largest prime r tried; defaults to N
        #[arg(long)]
        rmax: Option<u64>,
    },
}

fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Graph { src, extra } => commands::graph_cmd(&source(&src, &extra)?),
        Command::Complement { src, extra } => commands::complement_cmd(&source(&src, &extra)?),
        Command::Cycles {
            src,
            extra,
            odd,
            max_size,
        } => commands::cycles_cmd(&source(&src, &extra)?, odd, max_size),
        Command::VerifyTheoremA {
            u,
            alpha,
            kind,
            max_size,
        } => commands::verify_theorem_a_cmd(&LinearGroup::new(kind.into(), u, alpha)?, max_size),
        Command::Sweep {
            qmax,
            qmin,
            max_size,
            structure_only,
        } => commands::sweep_cmd(&SweepOptions {
            qmin,
            qmax,
            theorem_a_max_size: (!structure_only).then_some(max_size),
            corollaries: !structure_only,
        }),
        Command::NqCheck { group, q, blow_up } => commands::nq_check_cmd(&group, q, blow_up),
        Command::Audit { input } => commands::audit_cmd(&input),
        Command::Repunit { n, rmax } => commands::repunit_cmd(&n, rmax),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            for line in &outcome.lines {
                println!("{line}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
