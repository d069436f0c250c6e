use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use trunc_pascal::format::{
    render_enumeration, render_oddcount, render_operator, render_row, render_triangle,
    EnumerationKind, OutputFormat,
};
use trunc_pascal::{parity_bitmap, verify, Error, OddCountMethod, TriangleSpec};

/// Exact truncated Pascal's triangles: rows, enumerations, operator
/// coefficients, odd counts and a cross-definition verifier.
#[derive(Debug, Parser)]
#[command(name = "trunc-pascal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print row n of the array.
    Row {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
    /// Print rows 0..rows-1.
    Triangle {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        rows: i64,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
    /// List admissible paths or tableaux for (n, k) with their count.
    Enumerate {
        kind: EnumerationKind,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
        /// Print at most this many objects; the count stays exact.
        #[arg(long)]
        limit: Option<usize>,
        /// Enumerate even when C(n, k) exceeds the cap.
        #[arg(long)]
        force: bool,
    },
    /// Print D^{-N}(x[t-1]) and its coefficient sequence.
    Operator {
        #[arg(long)]
        t: i64,
        #[arg(long = "N")]
        exponent: i64,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
    /// Count odd entries on row n.
    Oddcount {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "exact")]
        method: OddCountMethod,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
    /// Write the parity bitmap of the first `rows` rows as plain PBM.
    Bitmap {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        rows: i64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every construction and the parity results.
    Verify {
        #[arg(long, default_value_t = 6)]
        t_max: i64,
        #[arg(long, default_value_t = 14)]
        n_max: i64,
        /// Skip the construction checks and run only the parity suite.
        #[arg(long)]
        parity_only: bool,
        #[arg(long, default_value = "table")]
        format: OutputFormat,
    },
}

fn run(command: Command) -> Result<(String, bool), Error> {
    match command {
        Command::Row { t, n, format } => Ok((render_row(TriangleSpec::new(t)?, n, format)?, true)),
        Command::Triangle { t, rows, format } => {
            Ok((render_triangle(TriangleSpec::new(t)?, rows, format)?, true))
        }
        Command::Enumerate {
            kind,
            t,
            n,
            k,
            format,
            limit,
            force,
        } => Ok((
            render_enumeration(kind, TriangleSpec::new(t)?, n, k, format, limit, force)?,
            true,
        )),
        Command::Operator { t, exponent, format } => {
            Ok((render_operator(TriangleSpec::new(t)?, exponent, format)?, true))
        }
        Command::Oddcount {
            t,
            n,
            method,
            format,
        } => Ok((render_oddcount(TriangleSpec::new(t)?, n, method, format)?, true)),
        Command::Bitmap { t, rows, out } => {
            let pbm = parity_bitmap(TriangleSpec::new(t)?, rows)?.to_pbm();
            match out {
                Some(path) => {
                    std::fs::write(&path, pbm)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    Ok((String::new(), true))
                }
                None => Ok((pbm, true)),
            }
        }
        Command::Verify {
            t_max,
            n_max,
            parity_only,
            format,
        } => {
            let t_max = u32::try_from(t_max).map_err(|_| Error::InvalidTruncation(t_max))?;
            let report = verify(t_max, n_max, parity_only)?;
            let text = match format {
                OutputFormat::Json => report.to_json() + "\n",
                OutputFormat::Table => report.to_table(),
                other => return Err(Error::UnsupportedFormat(format!("{other:?}").to_lowercase())),
            };
            Ok((text, report.all_passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
