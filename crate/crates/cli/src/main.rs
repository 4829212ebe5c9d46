use std::process::ExitCode;

use clap::Parser;
use polyhopf_cli::args::Cli;
use polyhopf_cli::commands::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polyhopf: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
