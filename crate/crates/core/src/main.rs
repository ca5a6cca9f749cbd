use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use cwlab::cli::{run_command, Command};
use cwlab::report::Format;

/// Exact Cartan-Weyl computations for su(3) / sl(3, C) presentations.
///
/// Exit status: 0 on success, 1 on invalid input, 2 when `verify` finds a
/// relation that fails in strict mode.
#[derive(Parser)]
#[command(name = "cwlab", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Preset (su3-x, su3-boson, sl3c, su3-gellmann) or algebra JSON file.
    #[arg(long)]
    source: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    let output = match run_command(args.command, &args.source, args.format) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.document) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", output.document),
    }

    if output.strict_failure {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
