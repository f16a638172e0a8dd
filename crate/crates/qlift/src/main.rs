use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qlift::cli::{run, Cli};
use qlift::error::{CliError, EXIT_CHECK_FAILED};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("qlift: {e}");
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let body = outcome.rendered(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    };
    if let Err(e) = written {
        return fail(&e);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED as u8)
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("qlift: {e}");
    ExitCode::from(e.exit_code() as u8)
}
