//! `qsc`: expansions, insertion demos, enumeration, trees and the
//! verification suites of qsc-core from the command line.

mod demo;
mod expand;
mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qsc_core::qsym::{check_conjectures, Basis};
use qsc_core::verify::{check_guard, run_suite, Suite};
use qsc_core::{
    enumerate_dirts, enumerate_semistandard, enumerate_standard, rw_dual, rw_forward, Composition, TableauKind,
};

const VERIFY_LIMIT: u32 = 9;
const CONJECTURE_LIMIT: u32 = 8;
const SIZE_LIMIT: u32 = 9;

#[derive(Parser)]
#[command(name = "qsc", version, about = "Dual immaculate and Young quasisymmetric Schur combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one basis element (or a JSON expansion) in another basis.
    Expand(expand::ExpandArgs),
    /// Trace insertion, rapture, or a whole word insertion.
    #[command(subcommand)]
    Demo(demo::DemoCommand),
    /// List tableaux or DIRTs of a shape.
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Emit the forward or dual tree for a composition.
    Tree(TreeArgs),
    /// Run a verification suite exhaustively up to a size bound.
    Verify(VerifyArgs),
    /// Report on the coefficient conjectures for one size.
    Conjectures(ConjectureArgs),
}

#[derive(Subcommand)]
enum EnumerateCommand {
    /// Standard (or, with --max-entry, semistandard) tableaux of a shape.
    Tableaux {
        #[arg(long, value_parser = input::composition)]
        shape: Composition,
        #[arg(long, value_enum, default_value_t = Kind::Immaculate)]
        kind: Kind,
        #[arg(long)]
        max_entry: Option<u32>,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
        #[arg(long)]
        force: bool,
    },
    /// DIRTs of a shape with a given row strip shape.
    Dirts {
        #[arg(long, value_parser = input::composition)]
        shape: Composition,
        #[arg(long, value_parser = input::composition)]
        strips: Composition,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Immaculate,
    YoungComposition,
}

impl From<Kind> for TableauKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Immaculate => TableauKind::Immaculate,
            Kind::YoungComposition => TableauKind::YoungComposition,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Dot,
    Json,
}

#[derive(clap::Args)]
struct TreeArgs {
    #[arg(long, value_parser = input::composition)]
    alpha: Composition,
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    direction: Direction,
    #[arg(long, value_enum, default_value_t = TreeFormat::Dot)]
    format: TreeFormat,
    #[arg(long)]
    force: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long)]
    max_n: u32,
    /// Allow sizes above the guard.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(clap::Args)]
struct ConjectureArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

/// The guard limit, replaced by QSC_MAX_N when set.
fn limit(default: u32) -> Result<u32> {
    match std::env::var("QSC_MAX_N") {
        Ok(v) => v.trim().parse().with_context(|| format!("QSC_MAX_N={v:?} is not a non-negative integer")),
        Err(_) => Ok(default),
    }
}

fn guard(n: u32, default: u32, force: bool) -> Result<()> {
    check_guard(n, limit(default)?, force)?;
    Ok(())
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    let written = out.write_all(text.as_bytes()).and_then(|()| match text.ends_with('\n') {
        true => Ok(()),
        false => out.write_all(b"\n"),
    });
    match written {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Expand(args) => expand::run(args)?,
        Command::Demo(cmd) => demo::run(cmd)?,
        Command::Enumerate(EnumerateCommand::Tableaux { shape, kind, max_entry, format, force }) => {
            guard(shape.size(), SIZE_LIMIT, force)?;
            if let Some(m) = max_entry {
                guard(m, SIZE_LIMIT, force)?;
            }
            let tableaux = match max_entry {
                Some(m) => enumerate_semistandard(&shape, kind.into(), m),
                None => enumerate_standard(&shape, kind.into()),
            };
            match format {
                TextFormat::Json => emit(&json(&serde_json::json!({
                    "shape": shape,
                    "count": tableaux.len(),
                    "tableaux": tableaux,
                }))?)?,
                TextFormat::Text => emit(&tableaux.iter().map(|t| t.to_compact()).collect::<Vec<_>>().join("\n"))?,
            }
        }
        Command::Enumerate(EnumerateCommand::Dirts { shape, strips, format, force }) => {
            guard(shape.size(), SIZE_LIMIT, force)?;
            if shape.size() != strips.size() {
                bail!("shape {shape} and strip shape {strips} have different sizes");
            }
            let dirts = enumerate_dirts(&shape, &strips);
            match format {
                TextFormat::Json => emit(&json(&serde_json::json!({
                    "shape": shape,
                    "strips": strips,
                    "count": dirts.len(),
                    "dirts": dirts,
                }))?)?,
                TextFormat::Text => emit(&dirts.iter().map(|t| t.to_compact()).collect::<Vec<_>>().join("\n"))?,
            }
        }
        Command::Tree(args) => {
            guard(args.alpha.size(), SIZE_LIMIT, args.force)?;
            let name = format!("{}", args.alpha);
            let text = match (args.direction, args.format) {
                (Direction::Forward, TreeFormat::Dot) => rw_forward(&args.alpha).0.to_dot(&name),
                (Direction::Dual, TreeFormat::Dot) => rw_dual(&args.alpha).0.to_dot(&name),
                (Direction::Forward, TreeFormat::Json) => {
                    let (tree, e) = rw_forward(&args.alpha);
                    json(&serde_json::json!({ "alpha": args.alpha, "expansion": e, "tree": tree }))?
                }
                (Direction::Dual, TreeFormat::Json) => {
                    let (tree, e) = rw_dual(&args.alpha);
                    json(&serde_json::json!({ "alpha": args.alpha, "expansion": e, "tree": tree }))?
                }
            };
            emit(&text)?;
        }
        Command::Verify(args) => {
            if args.max_n == 0 {
                bail!("--max-n must be at least 1");
            }
            guard(args.max_n, VERIFY_LIMIT, args.force)?;
            let report = run_suite(args.suite, args.max_n)?;
            match args.format {
                TextFormat::Json => emit(&json(&report)?)?,
                TextFormat::Text => emit(&report.to_string())?,
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Conjectures(args) => {
            guard(args.n, CONJECTURE_LIMIT, args.force)?;
            let report = check_conjectures(args.n)?;
            match args.format {
                TextFormat::Json => emit(&json(&report)?)?,
                TextFormat::Text => emit(&report.to_string())?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

pub fn basis_list() -> String {
    Basis::ALL.iter().map(|b| b.cli_name()).collect::<Vec<_>>().join(", ")
}
