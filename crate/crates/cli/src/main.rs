use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use randic::commands::{self, load_input};
use randic::output::{write_csv, write_json, write_report, Results};
use randic::verify::{self, Scope};
use randic::{CliError, FamilyKind, Format, Method, OutputRecord};

/// Randić spectra and energies of graphs and caterpillar trees.
#[derive(Parser)]
#[command(name = "randic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Randić spectrum of a caterpillar spec `T(p1,...,pr)` or an edge-list file.
    Spectrum {
        input: String,
        /// Defaults to reduction for specs and oracle for edge lists.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randić energy, to nine decimals.
    Energy {
        input: String,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Energies across a caterpillar family; extremal table for symmetric and fixed-end.
    Sweep {
        #[arg(value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: u64,
        /// Emit rows for every order from --n up to this one.
        #[arg(long)]
        max_n: Option<u64>,
        /// Size of the fixed star (fixed-middle, fixed-end).
        #[arg(long)]
        b: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rerun invariant checks; with no scope flags, runs all of them.
    Verify {
        #[arg(long)]
        oracle_equivalence: bool,
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        monotonicity: bool,
        #[arg(long)]
        remark: bool,
        #[arg(long)]
        path_relation: bool,
        /// Order for --remark; without it the reference b_min table is checked.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        max_n: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn sink(out: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(CliError::Output)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(record: &OutputRecord, format: Format, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut sink = sink(out)?;
    match format {
        Format::Json => write_json(record, &mut *sink)?,
        Format::Csv => write_csv(record, &mut *sink)?,
    }
    sink.flush().map_err(CliError::Output)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Spectrum { input, method, output } => {
            let rec = commands::spectrum(&load_input(&input)?, method)?;
            emit(&rec, output.format.unwrap_or(Format::Json), output.out.as_ref())?;
        }
        Command::Energy { input, method, output } => {
            let rec = commands::energy(&load_input(&input)?, method)?;
            emit(&rec, output.format.unwrap_or(Format::Json), output.out.as_ref())?;
        }
        Command::Sweep { family, n, max_n, b, output } => {
            let rec = commands::sweep(family, n, max_n, b)?;
            emit(&rec, output.format.unwrap_or(Format::Csv), output.out.as_ref())?;
        }
        Command::Verify { oracle_equivalence, bounds, monotonicity, remark, path_relation, n, max_n, output } => {
            let scope = Scope { oracle_equivalence, bounds, monotonicity, remark, path_relation };
            let rec = verify::run(scope, n, max_n)?;
            let Results::Verify { passed, checks } = &rec.results else { unreachable!() };
            match output.format {
                Some(format) => emit(&rec, format, output.out.as_ref())?,
                None => {
                    let mut sink = sink(output.out.as_ref())?;
                    write_report(checks, &mut *sink)?;
                    let verdict = if *passed { "PASS" } else { "FAIL" };
                    writeln!(sink, "{verdict}").map_err(CliError::Output)?;
                    sink.flush().map_err(CliError::Output)?;
                }
            }
            return Ok(*passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
