use std::process::ExitCode;

use clap::Parser;

mod cli;
mod run;

fn main() -> ExitCode {
    let args = cli::Cli::parse();
    match run::run(args.command) {
        Ok(run::Status::Ok) => ExitCode::SUCCESS,
        Ok(run::Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
