mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ohminor::duality::Side;
use ohminor::equivalence::Mode;
use ohminor::verify::Suite;
use ohminor::{EnumerationConfig, IntegerMatrix, OrientedHypergraph, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    version,
    about = "Laplacian minors of oriented hypergraphs by contributor enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Largest number of P1-image tuples an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    /// Worker threads for the enumeration (defaults to one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    /// A leading `{` selects the hypergraph document, anything else matrix text.
    Auto,
    Matrix,
    Hypergraph,
}

#[derive(Args)]
struct Input {
    /// Incidence matrix text (`rows cols` header, then rows) or a hypergraph JSON document.
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    Traditional,
    Diagonal,
    TotalMinor,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Primal,
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tail,
    Head,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Cancellation,
    Duality,
    Lattice,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an incidence matrix into a hypergraph document.
    Build {
        #[command(flatten)]
        input: Input,
    },
    /// Print L = D - A.
    Laplacian {
        #[command(flatten)]
        input: Input,
    },
    /// Print the incidence dual.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Characteristic, diagonal, total-minor or extended polynomial.
    Charpoly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Sum every contributor instead of only the edge-monic ones (total-minor only).
        #[arg(long)]
        full: bool,
        /// Which side of the duality to sum over (extended only).
        #[arg(long, value_enum, default_value_t = SideArg::Primal)]
        side: SideArg,
    },
    /// List contributors, optionally reduced by removed maps `u_i -> w_i`.
    Contributors {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        u: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        w: Vec<String>,
        #[arg(long)]
        edge_monic: bool,
        /// Group into equivalence classes instead of listing contributors.
        #[arg(long, value_enum)]
        classes: Option<ClassArg>,
    },
    /// The signed minor of L with rows `u` and columns `w` removed.
    Cofactor {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<String>,
    },
    /// Run the self-checks; exits with 2 if any fails.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Graphviz rendering of the hypergraph.
    ExportDot {
        #[command(flatten)]
        input: Input,
    },
}

fn load(input: &Input) -> Result<OrientedHypergraph> {
    let text =
        fs::read_to_string(&input.input).with_context(|| format!("cannot read {}", input.input.display()))?;
    let json = match input.input_format {
        InputFormat::Auto => text.trim_start().starts_with('{'),
        InputFormat::Matrix => false,
        InputFormat::Hypergraph => true,
    };
    let parsed = if json {
        OrientedHypergraph::from_json(&text)
    } else {
        text.parse::<IntegerMatrix>()
            .map(|m| OrientedHypergraph::from_integer_matrix(&m))
    };
    parsed.with_context(|| format!("cannot load {}", input.input.display()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Rendered text plus whether every check passed.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let config = EnumerationConfig { cap: cli.cap };
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Build { input } => render::hypergraph(&load(input)?, fmt),
        Command::Laplacian { input } => render::laplacian(&load(input)?, fmt)?,
        Command::Dual { input } => render::hypergraph(&load(input)?.incidence_dual(), fmt),
        Command::Charpoly {
            input,
            kind,
            full,
            side,
        } => {
            let side = match side {
                SideArg::Primal => Side::Primal,
                SideArg::Dual => Side::Dual,
            };
            render::charpoly(&load(input)?, *kind, !full, side, fmt, config)?
        }
        Command::Contributors {
            input,
            u,
            w,
            edge_monic,
            classes,
        } => {
            let mode = classes.map(|c| match c {
                ClassArg::Tail => Mode::Tail,
                ClassArg::Head => Mode::Head,
            });
            render::contributors(&load(input)?, u, w, *edge_monic, mode, fmt, config)?
        }
        Command::Cofactor { input, u, w } => render::cofactor(&load(input)?, u, w, fmt, config)?,
        Command::Verify { input, suite } => {
            let suite = match suite {
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::Cancellation => Suite::Cancellation,
                SuiteArg::Duality => Suite::Duality,
                SuiteArg::Lattice => Suite::Lattice,
                SuiteArg::All => Suite::All,
            };
            let report = ohminor::verify::run(&load(input)?, suite, config)?;
            return Ok((render::verification(&report, fmt)?, report.passed()));
        }
        Command::ExportDot { input } => ohminor::dot::hypergraph_dot(&load(input)?),
    };
    Ok((text, true))
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .context("cannot start the worker pool")?;
    }
    let (text, passed) = execute(cli)?;
    write_output(cli.out.as_deref(), &text)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

pub fn unsupported(fmt: Format, what: &str) -> Result<String> {
    let name = match fmt {
        Format::Human => "human",
        Format::Machine => "machine",
        Format::Dot => "dot",
    };
    bail!("`{what}` has no {name} output")
}
