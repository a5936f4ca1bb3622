//! `cycle-endo`: sizes, membership, regularity, Green's relations and ranks
//! of the endomorphism monoids of cycle graphs.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycle_endo::enumerate::DEFAULT_ELEMENT_CAP;
use cycle_endo::green::Relation;
use cycle_endo::MonoidKind;

/// Exit statuses.
pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "cycle-endo", version, about = "Endomorphism monoids of cycle graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Maximum number of elements held in memory by closures and snapshots.
    /// Overrides CYCLE_ENDO_CAP.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Aut,
    Send,
    Swend,
    End,
    Wend,
}

impl From<KindArg> for MonoidKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Aut => MonoidKind::Aut,
            KindArg::Send => MonoidKind::SEnd,
            KindArg::Swend => MonoidKind::SwEnd,
            KindArg::End => MonoidKind::End,
            KindArg::Wend => MonoidKind::WEnd,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RelationArg {
    R,
    L,
    D,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Self {
        match r {
            RelationArg::R => Relation::R,
            RelationArg::L => Relation::L,
            RelationArg::D => Relation::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Debug, Args)]
struct Target {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct Maps {
    /// One map, as space-separated images ("2 3 4 5 1") or a dihedral name ("g^2", "h*g^3").
    #[arg(long, conflicts_with = "input")]
    map: Option<String>,
    /// File with one map per line; blank lines and lines starting with '#' are skipped.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream every member, one map per line.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Size of the monoid by enumeration and by formula.
    Count {
        #[command(flatten)]
        target: Target,
        /// Exit 1 unless enumeration, formula and the reference table agree.
        #[arg(long)]
        check: bool,
    },
    /// Membership of maps in the monoid.
    Member {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        maps: Maps,
    },
    /// Regularity of maps, or of the whole monoid.
    Regular {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        maps: Maps,
        /// Print every non-regular member, one per line.
        #[arg(long)]
        list_nonregular: bool,
    },
    /// Green's R, L or D classes, or a single pair.
    Green {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        relation: RelationArg,
        /// Only class counts and size histogram.
        #[arg(long)]
        summary: bool,
        /// First map of a pair to test instead of computing classes.
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
    },
    /// Rank and a minimum generating set.
    Rank {
        #[command(flatten)]
        target: Target,
        /// Write the generators to FILE, one per line.
        #[arg(long, value_name = "FILE")]
        emit_gens: Option<PathBuf>,
        /// Check that the generators produce the whole monoid.
        #[arg(long)]
        verify_closure: bool,
        /// Pick class representatives at random with this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock time in the output.
        #[arg(long)]
        timing: bool,
    },
    /// Print a minimum generating set, one map per line.
    Gens {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sizes and ranks of all five monoids for 3 <= n <= max-n.
    Table {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the built-in invariant suites.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

/// A failure with its exit status and one-line reason.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, kind: "usage", message: message.into() }
    }

    pub fn check(message: impl Into<String>) -> Self {
        Self { code: EXIT_FAILED_CHECK, kind: "check_failed", message: message.into() }
    }
}

impl From<cycle_endo::Error> for Failure {
    fn from(e: cycle_endo::Error) -> Self {
        use cycle_endo::Error::*;
        let (code, kind) = match e {
            ResourceCap { .. } | Overflow(_) => (EXIT_RESOURCE, "resource"),
            InvariantViolation(_) => (EXIT_FAILED_CHECK, "invariant"),
            _ => (EXIT_USAGE, "usage"),
        };
        Self { code, kind, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn report(failure: &Failure) -> ExitCode {
    let line = serde_json::json!({ "error": failure.kind, "message": failure.message });
    let _ = writeln!(std::io::stderr(), "{line}");
    ExitCode::from(failure.code)
}

fn element_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("CYCLE_ENDO_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::usage(format!("CYCLE_ENDO_CAP is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_ELEMENT_CAP),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string();
            let message = first.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            return report(&Failure::usage(message));
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            return report(&Failure::usage(e.to_string()));
        }
    }
    let cap = match element_cap(cli.cap) {
        Ok(cap) => cap,
        Err(f) => return report(&f),
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = commands::run(cli.command, cap, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            report(&f)
        }
    }
}
