use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use extcan::diagram::{diagram, DiagramKind};
use extcan::report::analyze;
use extcan::tables::{render_table, Format};
use extcan::verify::{verify, VerifyOptions};
use extcan::WeightSequence;

/// Invariants of canonical and extended canonical algebras.
#[derive(Parser)]
#[command(name = "extcan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one weight sequence, e.g. `2,3,7`.
    Analyze {
        weights: String,
        #[arg(long)]
        json: bool,
    },
    /// Recompute a printed table (1 to 5), annotating disagreements.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
        #[arg(long, value_enum, default_value = "md")]
        format: TableFormat,
    },
    /// Check every invariant on all weights within the bounds.
    Verify {
        #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u32).range(4..))]
        max_sum: u32,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        max_t: u32,
        /// Treat every printed-table annotation as a failure.
        #[arg(long)]
        strict: bool,
    },
    /// Emit a quiver or graph in DOT.
    Diagram {
        weights: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Canonical,
    Extended,
    Star,
    DoubleExtended,
}

enum Failure {
    Usage(String),
    Verification,
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

/// Write to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(anyhow::Error::from(e).into()),
        _ => Ok(()),
    }
}

fn weights(s: &str) -> Result<WeightSequence, Failure> {
    s.parse()
        .map_err(|e: extcan::Error| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { weights: w, json } => {
            let report = analyze(&weights(&w)?).map_err(anyhow::Error::from)?;
            if json {
                emit(&(report.to_json().map_err(anyhow::Error::from)? + "\n"))?;
            } else {
                emit(&report.to_string())?;
            }
        }
        Command::Table { which, format } => {
            let format = match format {
                TableFormat::Csv => Format::Csv,
                TableFormat::Json => Format::Json,
                TableFormat::Md => Format::Markdown,
            };
            let table = render_table(which).map_err(anyhow::Error::from)?;
            let mut text = table.render(format).map_err(anyhow::Error::from)?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&text)?;
        }
        Command::Verify {
            max_sum,
            max_t,
            strict,
        } => {
            let options = VerifyOptions {
                max_sum,
                max_t: max_t as usize,
                strict,
            };
            let summary = verify(options).map_err(anyhow::Error::from)?;
            emit(&summary.to_string())?;
            if !summary.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Diagram {
            weights: w,
            kind,
            out,
        } => {
            let kind = match kind {
                Kind::Canonical => DiagramKind::Canonical,
                Kind::Extended => DiagramKind::Extended,
                Kind::Star => DiagramKind::Star,
                Kind::DoubleExtended => DiagramKind::DoubleExtended,
            };
            let dot = diagram(&weights(&w)?, kind)
                .map_err(|e| Failure::Usage(e.to_string()))?
                .to_string();
            match out {
                Some(path) => fs::write(&path, dot)
                    .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))?,
                None => emit(&dot)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
