use std::io;
use std::process::ExitCode;

use clap::Parser;
use gramp_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config, &mut io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gramp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
